#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ikeda {

using i64 = std::int64_t;

bool is_prime(i64 n);
std::vector<i64> primes_upto(i64 bound);
// Prime factorization of |n| (n != 0) by trial division, primes ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);
std::vector<i64> divisors(i64 n);  // positive divisors, ascending
int moebius(i64 n);
i64 isqrt(i64 n);  // floor(sqrt(n)), n >= 0
bool is_square(i64 n);
i64 gcd(i64 a, i64 b);
i64 powmod(i64 a, i64 e, i64 m);
i64 mod(i64 a, i64 m);  // representative in [0, m)
i64 invmod(i64 a, i64 m);  // a must be a unit mod m
int valuation(i64 n, i64 p);  // n != 0
i64 ipow64(i64 b, int e);
i64 sigma(i64 n, int k);  // only for results that fit; use Int versions for large k

// Full Kronecker symbol (d/m).
int kronecker(i64 d, i64 m);

bool is_fundamental_discriminant(i64 d);

struct DiscriminantSplit {
  i64 fundamental;  // 𝔡
  i64 conductor;    // 𝔣 > 0 with D = 𝔡·𝔣²
};
// D ≡ 0,1 mod 4, D != 0.
DiscriminantSplit split_discriminant(i64 D);

}  // namespace ikeda
