#include <map>

#include "doctest.h"
#include "ikeda/arith/ntheory.hpp"
#include "ikeda/plus_space.hpp"

using namespace ikeda;

namespace {

// r_s(m): number of integer vectors of length s with squared norm m (brute force).
std::vector<Int> sum_of_squares_counts(int s, std::size_t n) {
  std::vector<Int> c(n, Int(0));
  c[0] = 1;
  for (int i = 0; i < s; ++i) {
    std::vector<Int> next(n, Int(0));
    for (std::size_t m = 0; m < n; ++m)
      for (long x = -static_cast<long>(n); x <= static_cast<long>(n); ++x) {
        std::size_t sq = static_cast<std::size_t>(x * x);
        if (m + sq < n) next[m + sq] += c[m];
      }
    c = next;
  }
  return c;
}

// h(d) for d < 0 by counting reduced forms |b| <= a <= c, b >= 0 on the boundary.
long class_number(long d) {
  long h = 0;
  for (long a = 1; 3 * a * a <= -d; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - d;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (gcd(gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  return h;
}

Rat sigma_rat(long m, int e) {
  Int s = 0;
  for (long d : divisors(m)) s += ipow(d, static_cast<unsigned long>(e));
  return Rat(s);
}

}  // namespace

TEST_CASE("theta and F") {
  auto t = theta(60);
  auto r = sum_of_squares_counts(1, 60);
  for (std::size_t m = 0; m < 60; ++m) CHECK(t[m] == r[m]);
  auto t5 = t * t * t * t * t;
  auto r5 = sum_of_squares_counts(5, 60);
  for (std::size_t m = 0; m < 60; ++m) CHECK(t5[m] == r5[m]);
  auto F = weight2_F(80);
  for (std::size_t m = 0; m < 80; ++m) {
    long s = 0;
    if (m % 2)
      for (long d = 1; d <= static_cast<long>(m); ++d)
        if (m % static_cast<std::size_t>(d) == 0) s += d;
    CHECK(F[m] == s);
  }
}

TEST_CASE("plus space basis") {
  for (int k = 2; k <= 18; ++k) {
    auto b = plus_space_basis(k, 200);
    CHECK(b.size() == 1 + static_cast<std::size_t>(cusp_form_dimension(2 * k)));
    for (auto& h : b)
      for (std::size_t m = 0; m < 200; ++m)
        if (!plus_index_allowed(k, m)) CHECK(h.c(m).is_zero());
  }
  CHECK_THROWS_AS(plus_space_basis(16, 100, 8), InvalidInput);
}

TEST_CASE("Dirichlet L-values at non-positive integers") {
  CHECK(dirichlet_L_neg(1, -4) == Rat(1, 2));
  CHECK(dirichlet_L_neg(2, -4) == 0);  // odd character, even k
  CHECK(dirichlet_L_neg(1, -3) == Rat(1, 3));
  CHECK(dirichlet_L_neg(2, 1) == Rat(-1, 12));
  CHECK(dirichlet_L_neg(12, 1) == Rat(691, 32760));
  CHECK(dirichlet_L_neg(2, 5) == Rat(-2, 5));
  CHECK(dirichlet_L_neg(2, 8) == Rat(-1));
  CHECK_THROWS_AS(dirichlet_L_neg(2, 20), InvalidInput);
  for (long d = -3; d >= -400; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    long w = d == -3 ? 6 : d == -4 ? 4 : 2;
    CHECK(dirichlet_L_neg(1, d) == make_rat(Int(2 * class_number(d)), Int(w)));
    CHECK(dirichlet_L_neg(2, d) == 0);
  }
}

TEST_CASE("Cohen Eisenstein series") {
  for (int k = 2; k <= 12; ++k) {
    const std::size_t n = 160;
    auto H = cohen_eisenstein(k, n);
    CHECK(H.c(0).to_rational() == -bernoulli(static_cast<unsigned>(2 * k)) / Rat(2 * k));
    for (std::size_t m = 1; m < n; ++m) {
      if (!plus_index_allowed(k, m)) {
        CHECK(H.c(m).is_zero());
        continue;
      }
      auto s = split_discriminant((k % 2 ? -1 : 1) * static_cast<long>(m));
      Rat sum(0);
      for (long e : divisors(s.conductor)) {
        int mu = moebius(e);
        if (mu == 0) continue;
        sum += Rat(mu * kronecker(s.fundamental, e)) * Rat(ipow(e, static_cast<unsigned long>(k - 1))) *
               sigma_rat(s.conductor / e, 2 * k - 1);
      }
      CHECK(H.c(m).to_rational() == dirichlet_L_neg(k, s.fundamental) * sum);
    }
  }
}

TEST_CASE("Shimura lifts of level one eigenforms") {
  auto f12 = eigenforms(12, 20)[0];
  auto h = shimura_eigen_lift(f12, 13);
  std::map<std::size_t, long> want{{1, 1}, {4, -56}, {5, 120}, {8, -240}, {9, 9}, {12, 1440}};
  for (std::size_t m = 0; m < 13; ++m) {
    long w = want.count(m) ? want[m] : 0;
    CHECK(h.c(m) == NFElem(w));
  }

  auto f32 = eigenforms(32, 20)[0];
  auto h32 = shimura_eigen_lift(f32, 13);
  std::map<std::size_t, std::string> want32{{1, "1"},
                                            {4, "x - 32768"},
                                            {5, "2*x - 65568"},
                                            {8, "218*x - 7116672"},
                                            {9, "432*x - 14298687"},
                                            {12, "-2916*x + 103037184"}};
  for (std::size_t m = 0; m < 13; ++m) {
    std::string w = want32.count(m) ? want32[m] : "0";
    CHECK(to_string(h32.c(m)) == w);
  }
  CHECK(h32.field == f32.hecke_field);

  // every further coefficient obeys the relation with m = p prime
  auto g = eigenforms(24, 30)[0];
  auto hg = shimura_eigen_lift(g, 300);
  for (long d : {1L, 5L, 8L, 12L}) {
    if (!is_fundamental_discriminant(d)) continue;
    for (long p : {2L, 3L, 5L}) {
      std::size_t big = static_cast<std::size_t>(d * p * p);
      if (big >= 300) continue;
      NFElem rhs = hg.c(static_cast<std::size_t>(d)) *
                   (g.a(static_cast<std::size_t>(p)) - NFElem(Rat(kronecker(d, p)) * Rat(ipow(p, 11))));
      CHECK(hg.c(big) == rhs);
    }
  }
}
