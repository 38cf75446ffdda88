#include <random>
#include <set>

#include "doctest.h"
#include "ikeda/errors.hpp"
#include "ikeda/plus_space.hpp"
#include "ikeda/quadforms.hpp"

using namespace ikeda;

namespace {

// Random unimodular matrix as a product of elementary moves.
std::vector<i64> random_unimodular(std::mt19937_64& rng, int n, int steps) {
  std::vector<i64> U(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) U[static_cast<std::size_t>(i * n + i)] = 1;
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), coin(0, 3);
  for (int s = 0; s < steps; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    int c = coef(rng);
    if (coin(rng) == 0) {  // swap columns i, j
      for (int r = 0; r < n; ++r) std::swap(U[static_cast<std::size_t>(r * n + i)], U[static_cast<std::size_t>(r * n + j)]);
    } else {  // column i += c * column j
      for (int r = 0; r < n; ++r) U[static_cast<std::size_t>(r * n + i)] += c * U[static_cast<std::size_t>(r * n + j)];
    }
  }
  return U;
}

Mat2 random_sl2(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> t(-3, 3), coin(0, 1);
  Mat2 m = mat2_identity();
  for (int s = 0; s < steps; ++s) {
    Mat2 e = coin(rng) ? Mat2{Int(1), Int(t(rng)), Int(0), Int(1)} : Mat2{Int(1), Int(0), Int(t(rng)), Int(1)};
    m = mat2_mul(m, e);
  }
  return m;
}

Mat2 random_gamma0(std::mt19937_64& rng, i64 p, int steps) {
  std::uniform_int_distribution<int> t(-3, 3), coin(0, 1);
  Mat2 m = mat2_identity();
  for (int s = 0; s < steps; ++s) {
    int x = t(rng);
    Mat2 e = coin(rng) ? Mat2{Int(1), Int(x), Int(0), Int(1)} : Mat2{Int(1), Int(0), Int(p * x), Int(1)};
    m = mat2_mul(m, e);
  }
  return m;
}

const HalfIntMatrix T1 = HalfIntMatrix::from_tuple(4, {1, 1, 3, 3, 0, 1, 0, 0, 1, 0});
const HalfIntMatrix T2 = HalfIntMatrix::from_tuple(4, {1, 1, 4, 4, 1, 1, 0, 1, 1, 4});
const HalfIntMatrix T3 = HalfIntMatrix::from_tuple(4, {2, 2, 2, 2, 2, 1, 0, 1, 1, 2});

}  // namespace

TEST_CASE("half-integral matrix invariants") {
  CHECK(T1.det2T() == 121);
  CHECK(T2.disc() == 121);
  CHECK(T3.disc() == 121);
  auto dd = discriminant_data(T1);
  CHECK(dd.d == 1);
  CHECK(dd.f == 11);
  CHECK(dd.f_valuations.at(11) == 1);
  CHECK(content(T1) == 1);
  CHECK(content(T1.scaled(7)) == 7);
  auto I2 = HalfIntMatrix::from_tuple(2, {1, 1, 0});
  CHECK(content(I2) == 1);
  CHECK(I2.disc() == -4);
  CHECK(parse_half_int_matrix("[1,1,3,3,0,1,0,0,1,0]") == T1);
  CHECK(parse_half_int_matrix(T2.to_string()) == T2);
  CHECK_THROWS_AS(parse_half_int_matrix("[1,2]"), InvalidInput);
  CHECK_THROWS_AS(discriminant_data(HalfIntMatrix::from_tuple(2, {1, 1, 2})), InvalidInput);

  for (auto& [D, reps] : enumerate_classes_upto(4, 200))
    for (auto& T : reps) {
      auto x = discriminant_data(T);
      CHECK(x.d * x.f * x.f == D);
      CHECK(is_fundamental_discriminant(x.d));
      for (i64 p : {3L, 5L}) {
        auto y = discriminant_data(T.scaled(p));
        CHECK(y.d == x.d);
        CHECK(y.f == x.f * p * p);
        CHECK(content(T.scaled(p)) == p * content(T));
      }
    }
  for (auto& [D, reps] : enumerate_classes_upto(2, 300))
    for (auto& T : reps) {
      auto x = discriminant_data(T);
      CHECK(x.d * x.f * x.f == D);
      auto y = discriminant_data(T.scaled(7));
      CHECK(y.d == x.d);
      CHECK(y.f == 7 * x.f);
    }
}

TEST_CASE("isometry testing") {
  CHECK(isometric(T1, T1).isometric);
  CHECK_FALSE(isometric(T1, T2).isometric);
  CHECK_FALSE(isometric(T2, T3).isometric);
  std::mt19937_64 rng(7);
  for (auto& T : {T1, T2, T3}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto U = random_unimodular(rng, 4, 12);
      auto S = transform(T, U);
      auto r = isometric(T, S);
      REQUIRE(r.isometric);
      CHECK(transform(T, r.witness) == S);
    }
  }
  auto G = HalfIntMatrix::from_tuple(2, {2, 3, 1});
  for (int trial = 0; trial < 20; ++trial) {
    auto U = random_unimodular(rng, 2, 8);
    auto r = isometric(G, transform(G, U));
    REQUIRE(r.isometric);
    CHECK(transform(G, r.witness) == transform(G, U));
  }
}

TEST_CASE("genus 4 enumeration") {
  auto cl = enumerate_classes(4, 121);
  REQUIRE(cl.size() == 3);
  for (auto& T : {T1, T2, T3}) {
    int hits = 0;
    for (auto& R : cl) hits += isometric(R, T).isometric;
    CHECK(hits == 1);
  }
  CHECK_THROWS_AS(enumerate_classes(4, 600), InvalidInput);
  CHECK_THROWS_AS(enumerate_classes(4, -3), InvalidInput);

  // pairwise non-isometric, and the primitive classes up to 457 number 4475
  auto all = enumerate_classes_upto(4, 457);
  std::size_t primitive = 0, total = 0;
  for (auto& [D, reps] : all) {
    total += reps.size();
    for (auto& T : reps) primitive += content(T) == 1;
    if (D <= 150)
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(isometric(reps[i], reps[j]).isometric);
  }
  CHECK(primitive == 4475);
  CHECK(total == 4499);
  CHECK(all.at(4).size() == 1);
  CHECK(all.at(5).size() == 1);
}

TEST_CASE("genus 2 enumeration") {
  auto one = enumerate_classes(2, -3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "[1,1,1]");
  CHECK(enumerate_classes(2, -1).empty());
  CHECK(enumerate_classes(2, -2).empty());
  CHECK_THROWS_AS(enumerate_classes(2, 3), InvalidInput);
  // GL-classes = SL-classes modulo [a,b,c] ~ [a,-b,c]
  for (i64 D = -3; D >= -300; --D) {
    if (mod(D, 4) > 1) continue;
    std::set<BinaryQF> keys;
    for (auto& q : binary_class_set(D)) {
      BinaryQF m{q.a, -q.b, q.c};
      BinaryQF key = reduce_form(m).form;
      keys.insert(std::min(q, key));
    }
    CHECK(enumerate_classes(2, D).size() == keys.size());
  }
}

TEST_CASE("binary forms: reduction and class numbers") {
  CHECK(binary_class_set(-23).size() == 3);
  auto d4 = binary_class_set(-4);
  REQUIRE(d4.size() == 1);
  CHECK(d4[0] == BinaryQF{1, 0, 1});
  // class number formula h = w L(0, chi_D) / 2 for fundamental D < 0
  for (i64 D = -3; D >= -400; --D) {
    if (!is_fundamental_discriminant(D)) continue;
    Rat w = D == -3 ? 6 : D == -4 ? 4 : 2;
    std::size_t prim = 0;
    for (auto& q : binary_class_set(D)) prim += q.content() == 1;
    CHECK(Rat(static_cast<long>(prim)) == w * dirichlet_L_neg(1, D) / 2);
  }
  // narrow class numbers of real quadratic fields
  std::vector<std::pair<i64, std::size_t>> narrow{{5, 1}, {8, 1}, {12, 2}, {13, 1}, {17, 1},
                                                   {21, 2}, {24, 2}, {29, 1}, {40, 2}, {60, 4}};
  for (auto [D, h] : narrow) CHECK(binary_class_set(D).size() == h);
  CHECK_THROWS_AS(binary_class_set(16), Unsupported);
  CHECK_THROWS_AS(binary_class_set(7), InvalidInput);

  std::mt19937_64 rng(11);
  for (i64 D : {-23L, -84L, -143L, 5L, 60L, 109L, 229L, 316L}) {
    for (auto& q : binary_class_set(D)) {
      for (int trial = 0; trial < 5; ++trial) {
        Mat2 g = random_sl2(rng, 6);
        BinaryQF r = q.act(g);
        auto m = sl2_equivalence(q, r);
        REQUIRE(m.has_value());
        CHECK(q.act(*m) == r);
        for (i64 p : {5L, 7L}) {
          Mat2 h = random_gamma0(rng, p, 6);
          BinaryQF s = q.act(h);
          auto e = gamma0_equivalence(q, s, p);
          REQUIRE(e.has_value());
          CHECK(q.act(*e) == s);
          CHECK(Int((*e)[2] % p) == 0);
        }
      }
      auto st = stabilizer(q);
      CHECK(q.act(st[0]) == q);
    }
    auto reps = binary_class_set(D);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(sl2_equivalence(reps[i], reps[j]).has_value());
  }
}

TEST_CASE("genus characters") {
  std::mt19937_64 rng(5);
  for (i64 D : {-84L, -20L, 60L, 105L, -420L}) {
    for (auto& q : binary_class_set(D)) {
      if (q.content() == 1) CHECK(genus_character(q, 1) == 1);
      for (i64 d = -200; d <= 200; ++d) {
        if (!is_fundamental_discriminant(d) || d == 1 || D % d != 0 || mod(D / d, 4) > 1) continue;
        int chi = genus_character(q, d);
        for (int t = 0; t < 3; ++t) CHECK(genus_character(q.act(random_sl2(rng, 5)), d) == chi);
      }
    }
  }
  CHECK_THROWS_AS(genus_character(BinaryQF{1, 1, 6}, -23, 0), Inconclusive);
  CHECK(genus_character(BinaryQF{2, 0, 2}, -4) == 0);

  // chi_{d0}([a,b,c]) = (d/p) chi_{d0}([a/p, b, pc]) on L_p(d0 d) with p | d0, p not dividing d
  int checked = 0;
  for (i64 p : {3L, 5L, 7L}) {
    for (i64 d0 = -60; d0 <= 60; ++d0) {
      if (!is_fundamental_discriminant(d0) || d0 % p != 0) continue;
      for (i64 d = -40; d <= 40; ++d) {
        if (!is_fundamental_discriminant(d) || d % p == 0 || d0 * d < 0) continue;
        i64 D = d0 * d;
        if (is_square(D)) continue;
        for (auto& q : binary_class_set(D, FormGroup::Gamma0, p, true)) {
          BinaryQF img{q.a / p, q.b, q.c * p};
          CHECK(genus_character(q, d0) == kronecker(d, p) * genus_character(img, d0));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Gamma_0(p) and SL_2 class bijections") {
  for (i64 p : {5L, 7L, 11L, 13L}) {
    auto s = lemma36_i(BinaryQF{1, 0, p}, p);
    CHECK(mod(s.form.a, p) == 0);
    CHECK(BinaryQF{1, 0, p}.act(s.transform) == s.form);
  }
  auto iv = lemma36_iv(-20, 5);
  CHECK(iv.bijective);
  CHECK(iv.gamma0_classes == iv.sl2_classes);
  CHECK(lemma36_iii(-44, 11).bijective);

  int iii = 0, ivn = 0, ii = 0;
  for (i64 p : {5L, 7L, 11L, 13L})
    for (i64 D = -400; D <= 400; ++D) {
      if (D == 0 || mod(D, 4) > 1 || D % p != 0 || (D > 0 && is_square(D))) continue;
      auto r3 = lemma36_iii(D, p);
      CHECK_MESSAGE(r3.bijective, "iii D=" << D << " p=" << p);
      ++iii;
      if (D % (p * p) != 0) {
        auto r4 = lemma36_iv(D, p);
        CHECK_MESSAGE(r4.bijective, "iv D=" << D << " p=" << p);
        CHECK(r4.gamma0_classes == binary_class_set(D).size());
        ++ivn;
      }
      for (auto& q : binary_class_set(D, FormGroup::SL2, p, true)) {
        auto s = lemma36_i(q, p);
        CHECK(mod(s.form.a, p) == 0);
        CHECK(q.act(s.transform) == s.form);
      }
      if (D % (p * p) == 0 && kronecker(D / (p * p), p) == 1) {
        for (auto& q : binary_class_set(D, FormGroup::Gamma0, p, true)) {
          auto s = lemma36_ii(q, p);
          CHECK(mod(s.form.a, p * p * p) == 0);
          CHECK(Int(s.transform[2] % p) == 0);
          CHECK(q.act(s.transform) == s.form);
          ++ii;
        }
      }
    }
  CHECK(iii > 100);
  CHECK(ivn > 100);
  CHECK(ii > 0);

  // including forms divisible by p breaks (iii) once p^2 | D: [5,5,5] splits into several Gamma_0(5) classes
  auto all_g0 = binary_class_set(-75, FormGroup::Gamma0, 5, false);
  auto all_sl = binary_class_set(-75, FormGroup::SL2, 5, false);
  std::size_t sl_with_root = 0;
  for (auto& q : all_sl) {
    bool has = false;
    for (i64 x = 0; x <= 5 && !has; ++x) has = mod(x == 5 ? q.a : q.eval(Int(x), Int(1)).get_si(), 5) == 0;
    sl_with_root += has;
  }
  CHECK(all_g0.size() > sl_with_root);
  CHECK_THROWS_AS(lemma36_iv(-100, 5), InvalidInput);
}
