#include <random>

#include "doctest.h"
#include "ikeda/arith/linalg.hpp"
#include "ikeda/arith/ntheory.hpp"
#include "ikeda/modforms.hpp"

using namespace ikeda;

namespace {

// Akiyama-Tanigawa: an independent route to B_n (with B_1 = +1/2).
Rat bernoulli_at(unsigned n) {
  std::vector<Rat> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rat(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rat(static_cast<long>(j)) * (a[j - 1] - a[j]);
  }
  return a[0];
}

std::vector<Int> delta_by_product(std::size_t n) {
  std::vector<Int> c(n, Int(0));
  c[1] = 1;
  for (std::size_t m = 1; m < n; ++m)
    for (int e = 0; e < 24; ++e)
      for (std::size_t i = n; i-- > m;) c[i] -= c[i - m];
  return c;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(12) == Rat(-691, 2730));
  CHECK(bernoulli(1) == Rat(-1, 2));
  for (unsigned n = 2; n <= 40; ++n) CHECK(bernoulli(n) == bernoulli_at(n));
  CHECK(bernoulli_polynomial(2) == Poly<Rat>({Rat(1, 6), Rat(-1), Rat(1)}));
}

TEST_CASE("Eisenstein series") {
  auto e12 = eisenstein_series(12, 5);
  CHECK(e12[0] == Rat(691, 65520));
  CHECK(e12[1] == 1);
  CHECK(eisenstein_series(4, 3)[2] == 9);
  CHECK_THROWS_AS(eisenstein_series(5, 3), InvalidInput);
  CHECK_THROWS_AS(eisenstein_series(2, 3), InvalidInput);
  auto t2 = hecke_Tl(e12, 12, 2);
  auto e = e12.truncated(t2.precision());
  CHECK(t2 == Rat(1 + 2048) * e);
}

TEST_CASE("Delta") {
  auto d = delta(80);
  auto oracle = delta_by_product(80);
  for (std::size_t m = 0; m < 80; ++m) CHECK(d[m] == oracle[m]);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[11] == 534612);
  auto t2 = hecke_Tl(d, 12, 2);
  CHECK(t2 == Int(-24) * d.truncated(t2.precision()));
  CHECK(hecke_Tl(Series<Int>(20), 12, 3).is_zero());
}

TEST_CASE("cusp basis dimensions") {
  CHECK(cusp_basis(12, 10).size() == 1);
  CHECK(cusp_basis(32, 10).size() == 2);
  CHECK(cusp_basis(26, 10).size() == 1);
  CHECK(cusp_form_dimension(14) == 0);
  for (int w = 12; w <= 60; w += 2) {
    std::size_t total = 0;
    for (auto& f : eigenforms(w, 8)) total += static_cast<std::size_t>(f.hecke_field->degree());
    CHECK_MESSAGE(total == static_cast<std::size_t>(cusp_form_dimension(w)), "weight " << w);
    auto basis = cusp_basis(w, static_cast<std::size_t>(cusp_form_dimension(w) + 2));
    Matrix<Rat> rows;
    for (auto& b : basis) {
      std::vector<Rat> r;
      for (auto& c : b.coeffs()) r.push_back(Rat(c));
      rows.push_back(r);
    }
    CHECK(rank(rows) == basis.size());
  }
}

TEST_CASE("Hecke operators commute on cusp spaces") {
  for (int w : {24, 32, 36, 48, 60}) {
    auto t2 = hecke_matrix(w, 2), t3 = hecke_matrix(w, 3);
    CHECK(matmul(t2, t3) == matmul(t3, t2));
  }
}

TEST_CASE("weight 32 eigenform matches the printed expansion") {
  auto fs = eigenforms(32, 12);
  REQUIRE(fs.size() == 1);
  auto& f = fs[0];
  CHECK(f.hecke_field->to_string() == "x^2 - 39960*x - 2235350016");
  const char* expected[] = {"",
                            "1",
                            "x",
                            "432*x + 50220",
                            "39960*x + 87866368",
                            "-1418560*x + 18647219790",
                            "17312940*x + 965671206912",
                            "-71928864*x + 16565902491320",
                            "-462815680*x + 89324586639360",
                            "7500885120*x - 200500912849563",
                            "-38038437810*x - 3170978118696960",
                            "29000909200*x - 4470615038375388"};
  for (std::size_t m = 1; m <= 11; ++m) CHECK(to_string(f.a(m)) == expected[m]);
}

TEST_CASE("eigenform relations") {
  for (int w : {12, 16, 24, 32, 40}) {
    auto fs = eigenforms(w, 60);
    for (auto& f : fs) {
      CHECK(f.a(1) == NFElem(1));
      for (long l : {2L, 3L, 5L, 7L})
        for (long r : {2L, 3L, 5L, 7L}) {
          if (l == r) continue;
          CHECK(f.a(static_cast<std::size_t>(l)) * f.a(static_cast<std::size_t>(r)) == f.a(static_cast<std::size_t>(l * r)));
        }
      for (std::size_t l : {2, 3, 5, 7}) {
        NFElem lw(ipow(static_cast<long>(l), static_cast<unsigned long>(w - 1)));
        CHECK(f.a(l * l) == f.a(l) * f.a(l) - lw);
        for (std::size_t m = l; l * m < 60; m += l) CHECK(f.a(l * m) == f.a(l) * f.a(m) - lw * f.a(m / l));
      }
    }
  }
  auto f16 = eigenforms(16, 4);
  REQUIRE(f16.size() == 1);
  CHECK(f16[0].a(2) == NFElem(216));
  CHECK(f16[0].hecke_field->degree() == 1);
  auto f12 = eigenforms(12, 12)[0];
  CHECK(f12.a(11) == NFElem(534612));
}

TEST_CASE("ordinarity and stabilization") {
  auto f12 = eigenforms(12, 400)[0];
  for (long p : {2L, 3L, 5L, 7L}) CHECK(!is_ordinary(f12, p)[0]);
  CHECK(is_ordinary(f12, 11) == std::vector<bool>{true});
  auto st = ordinary_stabilize(f12, 11, 400);
  CHECK(st.qexp[11] == st.alpha());
  CHECK(st.qexp[2] == SatakeRing(NFElem(-24)));
  auto up = series_Up(st.qexp, 11);
  for (std::size_t m = 0; m < up.precision(); ++m) CHECK(up[m] == st.alpha() * st.qexp[m]);
  // the other root: y -> beta
  Series<SatakeRing> other(st.qexp.precision());
  for (std::size_t m = 0; m < other.precision(); ++m) other[m] = st.qexp[m].conjugate();
  auto up2 = series_Up(other, 11);
  for (std::size_t m = 0; m < up2.precision(); ++m) CHECK(up2[m] == st.beta() * other[m]);
  CHECK_THROWS_AS(ordinary_stabilize(f12, 7, 100), InvalidInput);

  auto es = eisenstein_stabilize(12, 5, 200);
  CHECK(series_Up(es, 5) == es.truncated(40));
}

TEST_CASE("ordinary primes for f12") {
  auto f12 = eigenforms(12, 2420)[0];
  for (long p : primes_upto(200))
    if (p >= 11) CHECK_MESSAGE(is_ordinary(f12, p) == std::vector<bool>{true}, "p=" << p);
  CHECK(is_ordinary(f12, 2411) == std::vector<bool>{false});
  CHECK(f12.a(2411).to_rational().get_num() % 2411 == 0);
  auto d = delta_by_product(2412);
  CHECK(f12.a(2411) == NFElem(d[2411]));
  // no other non-ordinary prime between 11 and 2411: 2399 and 2417 are ordinary
  CHECK(is_ordinary(f12, 2399) == std::vector<bool>{true});
  CHECK(is_ordinary(f12, 2417) == std::vector<bool>{true});
  for (long p : primes_upto(2410))
    if (p >= 11 && d[static_cast<std::size_t>(p)] % p == 0) FAIL("non-ordinary p=" << p);
}
