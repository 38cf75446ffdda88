#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/poly.hpp"

namespace ikeda::fp {

using u64 = std::uint64_t;
// Coefficients ascending, reduced mod p, trailing zeros trimmed.
using PolyFp = std::vector<u64>;

void trim(PolyFp& a);
int deg(const PolyFp& a);  // -1 only as an internal convention for the zero polynomial here
PolyFp add(const PolyFp& a, const PolyFp& b, u64 p);
PolyFp sub(const PolyFp& a, const PolyFp& b, u64 p);
PolyFp mul(const PolyFp& a, const PolyFp& b, u64 p);
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, u64 p);
PolyFp rem(const PolyFp& a, const PolyFp& b, u64 p);
PolyFp monic(const PolyFp& a, u64 p);
PolyFp gcd(PolyFp a, PolyFp b, u64 p);
// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  PolyFp g, s, t;
};
ExtGcd ext_gcd(const PolyFp& a, const PolyFp& b, u64 p);
PolyFp powmod(PolyFp base, Int e, const PolyFp& m, u64 p);
PolyFp derivative(const PolyFp& a, u64 p);
u64 mulmod(u64 a, u64 b, u64 p);
u64 inv(u64 a, u64 p);

// Reduction of a rational polynomial mod p; throws if a denominator is divisible by p.
PolyFp reduce(const Poly<Rat>& f, u64 p);

bool is_squarefree(const PolyFp& f, u64 p);

// Distinct-degree factorization of a monic squarefree f: pairs (product of all
// irreducible factors of degree d, d).
std::vector<std::pair<PolyFp, int>> distinct_degree(const PolyFp& f, u64 p);

// Complete factorization of a monic squarefree polynomial into monic irreducibles,
// sorted by (degree, coefficients). Deterministic (fixed-seed randomness).
std::vector<PolyFp> factor_squarefree(const PolyFp& f, u64 p);

}  // namespace ikeda::fp
