#include "ikeda/arith/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ikeda/errors.hpp"

namespace ikeda {

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 powmod(i64 a, i64 e, i64 m) {
  __int128 r = 1 % m, b = mod(a, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<i64>(r);
}

i64 invmod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1) {
    i64 q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw InvalidInput("not invertible modulo m");
  return mod(x, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    __int128 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<i64> primes_upto(i64 bound) {
  std::vector<i64> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound + 1), true);
  for (i64 i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n == 0) throw InvalidInput("factorization of zero");
  n = n < 0 ? -n : n;
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> ds{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t sz = ds.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int moebius(i64 n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

i64 isqrt(i64 n) {
  if (n < 0) throw InvalidInput("isqrt of negative");
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

int valuation(i64 n, i64 p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 ipow64(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

i64 sigma(i64 n, int k) {
  i64 s = 0;
  for (i64 d : divisors(n)) s += ipow64(d, k);
  return s;
}

// Jacobi symbol (a/n) for odd n > 0.
static int jacobi(i64 a, i64 n) {
  a = mod(a, n);
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      i64 r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int kronecker(i64 d, i64 m) {
  if (m == 0) return (d == 1 || d == -1) ? 1 : 0;
  int t = 1;
  if (m < 0) {
    m = -m;
    if (d < 0) t = -t;
  }
  int v = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++v;
  }
  if (v > 0) {
    if ((d & 1) == 0) return 0;
    i64 r = mod(d, 8);
    if ((v & 1) && (r == 3 || r == 5)) t = -t;
  }
  if (m == 1) return t;
  return t * jacobi(d, m);
}

bool is_fundamental_discriminant(i64 d) {
  if (d == 1) return true;
  if (d == 0) return false;
  i64 r = mod(d, 4);
  auto squarefree = [](i64 n) {
    for (auto [p, e] : factorize(n))
      if (e > 1) return false;
    return true;
  };
  if (r == 1) return squarefree(d);
  if (r == 0) {
    i64 m = d / 4;
    i64 rm = mod(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

DiscriminantSplit split_discriminant(i64 D) {
  if (D == 0 || (mod(D, 4) != 0 && mod(D, 4) != 1)) throw InvalidInput("not a discriminant");
  i64 core = D < 0 ? -1 : 1, f = 1;
  for (auto [p, e] : factorize(D)) {
    f *= ipow64(p, e / 2);
    if (e % 2) core *= p;
  }
  if (mod(core, 4) != 1) {
    core *= 4;
    f /= 2;
  }
  return {core, f};
}

}  // namespace ikeda
