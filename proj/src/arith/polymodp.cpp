#include "ikeda/arith/polymodp.hpp"

#include <algorithm>

#include "ikeda/errors.hpp"

namespace ikeda::fp {

void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolyFp& a) { return static_cast<int>(a.size()) - 1; }

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw InvalidInput("zero has no inverse mod p");
  u64 r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

PolyFp add(const PolyFp& a, const PolyFp& b, u64 p) {
  PolyFp c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
  trim(c);
  return c;
}

PolyFp sub(const PolyFp& a, const PolyFp& b, u64 p) {
  PolyFp c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
  trim(c);
  return c;
}

PolyFp mul(const PolyFp& a, const PolyFp& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyFp c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(c);
  return c;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, u64 p) {
  if (b.empty()) throw InvalidInput("division by zero polynomial mod p");
  PolyFp r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  u64 li = inv(b.back(), p);
  PolyFp q(r.size() - b.size() + 1, 0);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    u64 t = mulmod(r[i], li, p);
    q[i + 1 - b.size()] = t;
    if (!t) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i + 1 - b.size() + j;
      r[k] = (r[k] + p - mulmod(t, b[j], p)) % p;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

PolyFp rem(const PolyFp& a, const PolyFp& b, u64 p) { return divmod(a, b, p).second; }

PolyFp monic(const PolyFp& a, u64 p) {
  if (a.empty()) return a;
  u64 li = inv(a.back(), p);
  PolyFp c = a;
  for (auto& x : c) x = mulmod(x, li, p);
  return c;
}

PolyFp gcd(PolyFp a, PolyFp b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ExtGcd ext_gcd(const PolyFp& a0, const PolyFp& b0, u64 p) {
  PolyFp r0 = a0, r1 = b0, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    PolyFp s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  u64 li = inv(r0.back(), p);
  for (auto* v : {&r0, &s0, &t0})
    for (auto& x : *v) x = mulmod(x, li, p);
  return {r0, s0, t0};
}

PolyFp powmod(PolyFp base, Int e, const PolyFp& m, u64 p) {
  PolyFp r{1};
  r = rem(r, m, p);
  base = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

PolyFp derivative(const PolyFp& a, u64 p) {
  if (a.size() <= 1) return {};
  PolyFp d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

PolyFp reduce(const Poly<Rat>& f, u64 p) {
  PolyFp out;
  Int P(static_cast<unsigned long>(p));
  for (const Rat& c : f.coeffs()) {
    Int num = c.get_num() % P, den = c.get_den() % P;
    if (num < 0) num += P;
    if (den == 0) throw InvalidInput("denominator divisible by p");
    u64 n = num.get_ui(), d = den.get_ui();
    out.push_back(mulmod(n, inv(d, p), p));
  }
  trim(out);
  return out;
}

bool is_squarefree(const PolyFp& f, u64 p) {
  PolyFp d = derivative(f, p);
  if (d.empty()) return deg(f) <= 0;
  return deg(gcd(f, d, p)) == 0;
}

std::vector<std::pair<PolyFp, int>> distinct_degree(const PolyFp& f0, u64 p) {
  std::vector<std::pair<PolyFp, int>> out;
  PolyFp f = monic(f0, p);
  PolyFp x{0, 1}, h = rem(x, f, p);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, Int(static_cast<unsigned long>(p)), f, p);
    PolyFp g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(monic(f, p), deg(f));
  return out;
}

namespace {

void equal_degree(const PolyFp& f, int d, u64 p, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (deg(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    PolyFp a(static_cast<std::size_t>(deg(f)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) <= 0) continue;
    PolyFp b;
    if (p == 2) {
      // trace map to F_2
      PolyFp t = a, s = a;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), f, p);
        s = add(s, t, p);
      }
      b = s;
    } else {
      Int e = (ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
      b = sub(powmod(a, e, f, p), PolyFp{1}, p);
    }
    PolyFp g = gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyFp> factor_squarefree(const PolyFp& f, u64 p) {
  std::mt19937_64 rng(0x1ed4aULL ^ p);
  std::vector<PolyFp> out;
  for (auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const PolyFp& a, const PolyFp& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace ikeda::fp
