#include "ikeda/modforms.hpp"

#include <mutex>

#include "ikeda/arith/linalg.hpp"
#include "ikeda/arith/ntheory.hpp"
#include "ikeda/padic.hpp"

namespace ikeda {

namespace {

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// sigma_e(m) for 0 < m < n, by a divisor sieve.
std::vector<Int> sigma_table(std::size_t n, unsigned e) {
  std::vector<Int> s(n, Int(0));
  for (std::size_t d = 1; d < n; ++d) {
    Int de = ipow(Int(static_cast<unsigned long>(d)), e);
    for (std::size_t m = d; m < n; m += d) s[m] += de;
  }
  return s;
}

void check_weight(int weight, int minimum) {
  if (weight < minimum || weight % 2 != 0) throw InvalidInput("weight must be even and at least " + std::to_string(minimum));
}

}  // namespace

Rat bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rat s(0);
    for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * cache[j];
    cache.push_back(-s / Rat(Int(m + 1)));
  }
  return cache[n];
}

Poly<Rat> bernoulli_polynomial(unsigned n) {
  std::vector<Rat> c(n + 1, Rat(0));
  for (unsigned j = 0; j <= n; ++j) c[n - j] = Rat(binomial(n, j)) * bernoulli(j);
  return Poly<Rat>(std::move(c));
}

Series<Rat> eisenstein_series(int weight, std::size_t precision) {
  check_weight(weight, 4);
  Series<Rat> e(precision);
  if (precision == 0) return e;
  auto s = sigma_table(precision, static_cast<unsigned>(weight - 1));
  e[0] = -bernoulli(static_cast<unsigned>(weight)) / Rat(2 * weight);
  for (std::size_t m = 1; m < precision; ++m) e[m] = s[m];
  return e;
}

Series<Int> eisenstein_normalized(int weight, std::size_t precision) {
  check_weight(weight, 4);
  Series<Int> e(precision);
  if (precision == 0) return e;
  Rat c = Rat(-2 * weight) / bernoulli(static_cast<unsigned>(weight));
  if (c.get_den() != 1) throw Unsupported("normalized Eisenstein series is not integral in this weight");
  auto s = sigma_table(precision, static_cast<unsigned>(weight - 1));
  e[0] = 1;
  for (std::size_t m = 1; m < precision; ++m) e[m] = c.get_num() * s[m];
  return e;
}

Series<Int> delta(std::size_t precision) {
  // q * (prod (1 - q^m)^3)^8 with Jacobi's sum for the cube.
  Series<Int> out(precision);
  if (precision <= 1) return out;
  std::size_t n = precision - 1;
  std::vector<std::pair<std::size_t, Int>> eta3;
  for (std::size_t j = 0; j * (j + 1) / 2 < n; ++j) eta3.emplace_back(j * (j + 1) / 2, Int((j % 2 ? -1 : 1) * static_cast<long>(2 * j + 1)));
  std::vector<Int> acc(n, Int(0));
  acc[0] = 1;
  for (int t = 0; t < 8; ++t) {
    std::vector<Int> next(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(acc[i]) == 0) continue;
      for (auto& [e, c] : eta3) {
        if (i + e >= n) break;
        next[i + e] += acc[i] * c;
      }
    }
    acc = std::move(next);
  }
  for (std::size_t m = 1; m < precision; ++m) out[m] = acc[m - 1];
  return out;
}

int cusp_form_dimension(int weight) {
  if (weight < 12 || weight % 2) return 0;
  return weight / 12 - (weight % 12 == 2 ? 1 : 0);
}

std::vector<Series<Int>> cusp_basis(int weight, std::size_t precision) {
  check_weight(weight, 12);
  int d = cusp_form_dimension(weight);
  std::vector<Series<Int>> basis;
  if (d == 0) return basis;
  Series<Int> one(precision);
  if (precision > 0) one[0] = 1;
  Series<Int> e4 = eisenstein_normalized(4, precision), e6 = eisenstein_normalized(6, precision), dl = delta(precision);
  auto power = [&](const Series<Int>& s, int e) {
    Series<Int> r = one;
    for (int i = 0; i < e; ++i) r = r * s;
    return r;
  };
  Series<Int> dc = one;
  for (int c = 1; c <= d; ++c) {
    dc = dc * dl;
    int w = weight - 12 * c;
    int a = 0, b = 0;
    if (w % 4 == 0) {
      a = w / 4;
    } else {
      b = 1;
      a = (w - 6) / 4;
    }
    basis.push_back(dc * power(e4, a) * power(e6, b));
  }
  return basis;
}

namespace {

// Rows b_1..b_d with b_i = q^i + O(q^{d+1}).
Matrix<Rat> echelon_basis(int weight, std::size_t precision) {
  auto basis = cusp_basis(weight, precision);
  Matrix<Rat> rows;
  for (auto& s : basis) {
    std::vector<Rat> r(precision);
    for (std::size_t m = 0; m < precision; ++m) r[m] = s[m];
    rows.push_back(std::move(r));
  }
  rref(rows);
  return rows;
}

Matrix<Rat> hecke_on_echelon(const Matrix<Rat>& rows, int weight, long l) {
  std::size_t d = rows.size();
  Matrix<Rat> m = zero_matrix<Rat>(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Series<Rat> b(rows[i]);
    Series<Rat> t = hecke_Tl(b, weight, l);
    for (std::size_t j = 0; j < d; ++j) m[i][j] = t[j + 1];
  }
  return m;
}

}  // namespace

std::vector<std::vector<Rat>> hecke_matrix(int weight, long l) {
  int d = cusp_form_dimension(weight);
  auto rows = echelon_basis(weight, static_cast<std::size_t>(l) * static_cast<std::size_t>(d + 2));
  return hecke_on_echelon(rows, weight, l);
}

std::vector<EigenformData> eigenforms(int weight, std::size_t precision) {
  check_weight(weight, 12);
  int d = cusp_form_dimension(weight);
  std::vector<EigenformData> out;
  if (d == 0) return out;
  std::size_t work = std::max(precision, static_cast<std::size_t>(3 * (d + 2)));
  Matrix<Rat> rows = echelon_basis(weight, work);
  Matrix<Rat> m = hecke_on_echelon(rows, weight, 2);
  Poly<Rat> cp = charpoly(m);
  if (poly_gcd(cp, cp.derivative()).degree().value_or(0) > 0) {
    Matrix<Rat> m3 = hecke_on_echelon(rows, weight, 3);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += m3[i][j];
    cp = charpoly(m);
    if (poly_gcd(cp, cp.derivative()).degree().value_or(0) > 0)
      throw Unsupported("Hecke characteristic polynomial has repeated factors in weight " + std::to_string(weight));
  }
  // Reducible characteristic polynomials are refused by NumberField::create.
  FieldPtr field = NumberField::create(cp);
  NFElem x = NFElem::generator(field);
  // f = sum c_i b_i with c^T M = x c^T.
  Matrix<NFElem> sys = zero_matrix<NFElem>(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) sys[i][j] = NFElem(m[j][i]) - (i == j ? x : NFElem(0));
  auto ker = nullspace(sys, static_cast<std::size_t>(d));
  if (ker.size() != 1) throw InternalError("eigenspace over the Hecke field is not one-dimensional");
  auto c = ker[0];
  if (c[0].is_zero()) throw InternalError("eigenform with vanishing first coefficient");
  NFElem scale = inverse(c[0]);
  for (auto& ci : c) ci = ci * scale;
  Series<NFElem> q(precision);
  for (std::size_t n = 0; n < precision; ++n) {
    NFElem s(field, {Rat(0)});
    for (int i = 0; i < d; ++i)
      if (sgn(rows[i][n]) != 0) s += c[i] * NFElem(rows[i][n]);
    q[n] = s;
  }
  out.push_back(EigenformData{weight, field, std::move(q), true});
  return out;
}

std::vector<bool> is_ordinary(const EigenformData& f, long p) {
  if (static_cast<std::size_t>(p) >= f.precision()) throw InvalidInput("a_p beyond the eigenform's precision");
  std::vector<bool> out;
  for (const auto& ideal : split_prime(f.hecke_field, p)) {
    if (f.a(static_cast<std::size_t>(p)).is_zero()) {
      out.push_back(false);
      continue;
    }
    auto v = padic_valuation(f.a(static_cast<std::size_t>(p)), ideal, 4);
    out.push_back(!v.lower_bound && v.value == 0);
  }
  return out;
}

QuadRelPtr<NFElem> satake_relation(const EigenformData& f, long p) {
  if (static_cast<std::size_t>(p) >= f.precision()) throw InvalidInput("a_p beyond the eigenform's precision");
  return make_quad_relation<NFElem>(f.a(static_cast<std::size_t>(p)), NFElem(ipow(p, static_cast<unsigned long>(f.weight - 1))));
}

StabilizedForm ordinary_stabilize(const EigenformData& f, long p, std::size_t precision) {
  auto ord = is_ordinary(f, p);
  bool any = false;
  for (bool b : ord) any = any || b;
  if (!any) throw InvalidInput("form is not ordinary at p = " + std::to_string(p));
  auto rel = satake_relation(f, p);
  SatakeRing beta = SatakeRing::gen(rel).conjugate();
  std::size_t n = std::min(precision, f.precision());
  Series<SatakeRing> q(n);
  for (std::size_t m = 0; m < n; ++m) {
    q[m] = SatakeRing(f.a(m));
    if (m % static_cast<std::size_t>(p) == 0) q[m] = q[m] - beta * SatakeRing(f.a(m / static_cast<std::size_t>(p)));
  }
  return StabilizedForm{f, p, rel, std::move(q)};
}

Series<Rat> eisenstein_stabilize(int weight, long p, std::size_t precision) {
  Series<Rat> e = eisenstein_series(weight, precision);
  return e - Rat(ipow(p, static_cast<unsigned long>(weight - 1))) * series_Vp(e, static_cast<std::size_t>(p));
}

}  // namespace ikeda
