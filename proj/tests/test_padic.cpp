#include <random>

#include "doctest.h"
#include "ikeda/arith/ntheory.hpp"
#include "ikeda/modforms.hpp"
#include "ikeda/padic.hpp"

using namespace ikeda;

TEST_CASE("splitting of primes") {
  auto Ki = NumberField::create(parse_rational_poly("x^2 + 1", "x"));
  CHECK(split_prime(Ki, 5).size() == 2);
  CHECK(split_prime(Ki, 7).size() == 1);
  CHECK(split_prime(Ki, 7)[0].residue_degree() == 2);
  CHECK_THROWS_AS(split_prime(Ki, 2), Unsupported);
  auto Q = NumberField::create(parse_rational_poly("x + 24", "x"));
  CHECK(split_prime(Q, 13).size() == 1);
}

TEST_CASE("valuations") {
  auto Ki = NumberField::create(parse_rational_poly("x^2 + 1", "x"));
  NFElem i = NFElem::generator(Ki);
  auto ideals = split_prime(Ki, 5);
  // 2 + i and 2 - i generate the two primes over 5
  NFElem a = NFElem(2) + i, b = NFElem(2) - i;
  int va0 = padic_valuation(a, ideals[0], 10).value, va1 = padic_valuation(a, ideals[1], 10).value;
  CHECK(va0 + va1 == 1);
  CHECK(padic_valuation(a * a * a * b, ideals[0], 10).value + padic_valuation(a * a * a * b, ideals[1], 10).value == 4);
  for (auto& id : ideals) {
    CHECK(padic_valuation(NFElem(125) * (NFElem(4) + i), id, 10).value == 3);
    CHECK(padic_valuation(NFElem(Rat(1, 25)), id, 10).value == -2);
    auto v = padic_valuation(NFElem(ipow(5, 12)), id, 10);
    CHECK(v.lower_bound);
    CHECK(v.value == 10);
  }
  auto inert = split_prime(Ki, 7)[0];
  CHECK(padic_valuation(NFElem(49) * (NFElem(1) + i), inert, 10).value == 2);
}

TEST_CASE("unit root") {
  auto f12 = eigenforms(12, 40)[0];
  auto ideal = split_prime(f12.hecke_field, 11)[0];
  auto emb = local_embedding(ideal, 30);
  PadicApprox alpha = unit_root(f12.a(11), ideal, 11, 30);
  PadicApprox ap = embed(f12.a(11), emb);
  PadicApprox pw = PadicApprox::from_integer(emb, ipow(11, 11));
  PadicApprox beta = pw * alpha.inverse();
  CHECK((alpha + beta).congruent(ap));
  CHECK((alpha * beta).congruent(pw));
  CHECK(*beta.valuation() == 11);
  CHECK(PadicApprox(emb, alpha.coeffs(), 1).congruent(PadicApprox(emb, ap.coeffs(), 1)));
  // higher precision never contradicts lower precision digits
  PadicApprox alpha40 = unit_root(f12.a(11), ideal, 11, 40);
  CHECK(alpha40.congruent(alpha));

  auto st = ordinary_stabilize(f12, 11, 40);
  // symmetric elements evaluate the same through (alpha, beta) and through the field
  for (std::size_t m = 1; m < 10; ++m) {
    SatakeRing s = st.qexp[m] * st.qexp[m].conjugate();
    auto w = s.symmetric_witness();
    REQUIRE(w);
    PadicApprox lhs = embed(s.c0(), emb);
    PadicApprox c0 = embed(st.qexp[m].c0(), emb), c1 = embed(st.qexp[m].c1(), emb);
    PadicApprox via = (c0 + c1 * alpha) * (c0 + c1 * beta);
    CHECK(via.congruent(lhs));
    CHECK(embed(*w, emb).congruent(lhs));
  }
}

TEST_CASE("unit root in a quadratic Hecke field") {
  auto f32 = eigenforms(32, 12)[0];
  auto ideals = split_prime(f32.hecke_field, 11);
  bool found = false;
  for (auto& id : ideals) {
    auto v = padic_valuation(f32.a(11), id, 20);
    if (v.lower_bound || v.value != 0) continue;
    found = true;
    auto emb = local_embedding(id, 20);
    PadicApprox alpha = unit_root(f32.a(11), id, 31, 20);
    PadicApprox beta = PadicApprox::from_integer(emb, ipow(11, 31)) * alpha.inverse();
    CHECK((alpha + beta).congruent(embed(f32.a(11), emb)));
  }
  CHECK(found);
}

TEST_CASE("factor report") {
  Int n = ipow(7, 5);
  auto r = factor_report(n);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].first == 7);
  CHECK(r.factors[0].second == 5);
  CHECK(r.cofactor == 1);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    Int m = Int(static_cast<unsigned long>(rng() >> 20)) * Int(static_cast<unsigned long>(rng() >> 24)) + 1;
    auto rep = factor_report(m, 1000);
    Int prod = rep.cofactor;
    for (auto& [p, e] : rep.factors) prod *= ipow(p, static_cast<unsigned long>(e));
    CHECK(prod == m);
  }
  CHECK(factor_report(Int(-12)).to_string() == "-2^2 * 3");
}
