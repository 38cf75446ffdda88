#include "ikeda/plus_space.hpp"

#include "ikeda/arith/linalg.hpp"

namespace ikeda {

namespace {

// For each m < n: the fundamental discriminant d with (-1)^k m = d f^2 and f.
struct IndexSplit {
  i64 d = 0;
  i64 f = 0;
};

std::vector<IndexSplit> index_splits(int k, std::size_t n) {
  std::vector<IndexSplit> out(n);
  for (std::size_t m = 1; m < n; ++m) {
    if (!plus_index_allowed(k, m)) continue;
    i64 D = (k % 2 ? -1 : 1) * static_cast<i64>(m);
    auto s = split_discriminant(D);
    out[m] = {s.fundamental, s.conductor};
  }
  return out;
}

// Rows of linear constraints on basis coefficients from the Shimura relation
//   c_{|d| m^2} = c_{|d|} sum_{e | m} mu(e) (d/e) e^{k-1} a_{m/e}
// with a(.) the Hecke eigenvalues of the integral-weight form.
template <class R, class A>
Matrix<R> shimura_constraints(int k, const std::vector<Series<Rat>>& basis, std::size_t n, A a_of) {
  Matrix<R> rows;
  auto splits = index_splits(k, n);
  for (std::size_t idx = 1; idx < n; ++idx) {
    if (!plus_index_allowed(k, idx) || splits[idx].f != 1) continue;
    i64 d = splits[idx].d;
    for (i64 m = 2; static_cast<std::size_t>(m * m) * idx < n; ++m) {
      R factor(0);
      for (i64 e : divisors(m)) {
        int mu = moebius(e);
        int chi = kronecker(d, e);
        if (mu == 0 || chi == 0) continue;
        factor = factor + R(Rat(mu * chi) * Rat(ipow(e, static_cast<unsigned long>(k - 1)))) * a_of(m / e);
      }
      std::size_t big = static_cast<std::size_t>(m * m) * idx;
      std::vector<R> row;
      for (const auto& b : basis) row.push_back(R(b[big]) - R(b[idx]) * factor);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Rat sigma_big(i64 m, int e) {
  Int s = 0;
  for (i64 d : divisors(m)) s += ipow(d, static_cast<unsigned long>(e));
  return Rat(s);
}

std::vector<Series<Rat>> basis_series(int k, std::size_t precision) {
  std::vector<Series<Rat>> out;
  for (auto& h : plus_space_basis(k, precision))
    out.push_back(series_map<Rat>(h.qexp, [](const NFElem& x) { return x.to_rational(); }));
  return out;
}

}  // namespace

Series<Int> theta(std::size_t precision) {
  Series<Int> t(precision);
  for (std::size_t m = 0; m * m < precision; ++m) t[m * m] = m == 0 ? 1 : 2;
  return t;
}

Series<Int> weight2_F(std::size_t precision) {
  Series<Int> f(precision);
  for (std::size_t d = 1; d < precision; d += 2)
    for (std::size_t m = d; m < precision; m += 2 * d) f[m] += static_cast<unsigned long>(d);
  return f;
}

bool plus_index_allowed(int k, std::size_t m) {
  std::size_t r = m % 4;
  if (k % 2 == 0) return r == 0 || r == 1;
  return r == 0 || r == 3;
}

std::size_t default_plus_certify_bound(int k) { return static_cast<std::size_t>(4 * (2 * k + 2)); }

std::vector<HalfIntegralForm> plus_space_basis(int k, std::size_t precision, std::size_t certify_bound) {
  if (k < 2) throw InvalidInput("plus space needs k >= 2");
  if (certify_bound == 0) certify_bound = default_plus_certify_bound(k);
  std::size_t n = std::max(precision, certify_bound + 1);
  int top = 2 * k + 1, jmax = top / 4;
  Series<Int> th = theta(n), F = weight2_F(n), one(n);
  one[0] = 1;
  std::vector<Series<Int>> thp{one}, fp{one};
  for (int i = 1; i <= top; ++i) thp.push_back(th * thp.back());
  for (int j = 1; j <= jmax; ++j) fp.push_back(fp.back() * F);
  std::vector<Series<Int>> mono;
  for (int j = 0; j <= jmax; ++j) mono.push_back(thp[static_cast<std::size_t>(top - 4 * j)] * fp[static_cast<std::size_t>(j)]);

  Matrix<Rat> cons;
  for (std::size_t m = 1; m < certify_bound; ++m) {
    if (plus_index_allowed(k, m)) continue;
    std::vector<Rat> row;
    for (auto& s : mono) row.push_back(Rat(s[m]));
    cons.push_back(std::move(row));
  }
  auto ker = cons.empty() ? std::vector<std::vector<Rat>>{} : nullspace(cons, mono.size());
  if (cons.empty())
    for (std::size_t j = 0; j < mono.size(); ++j) {
      std::vector<Rat> e(mono.size(), Rat(0));
      e[j] = 1;
      ker.push_back(e);
    }
  Matrix<Rat> forms;
  for (auto& v : ker) {
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (sgn(v[j]) == 0) continue;
      for (std::size_t m = 0; m < n; ++m) c[m] += v[j] * Rat(mono[j][m]);
    }
    forms.push_back(std::move(c));
  }
  auto piv = rref(forms);
  forms.resize(piv.size());
  std::size_t expected = 1 + static_cast<std::size_t>(cusp_form_dimension(2 * k));
  if (forms.size() != expected)
    throw InvalidInput("plus-space certification bound too small: got dimension " + std::to_string(forms.size()) +
                       ", expected " + std::to_string(expected));
  std::vector<HalfIntegralForm> out;
  for (auto& c : forms) {
    for (std::size_t m = 0; m < n; ++m)
      if (!plus_index_allowed(k, m) && sgn(c[m]) != 0) throw InternalError("plus condition fails beyond the certification bound");
    Series<NFElem> q(precision);
    for (std::size_t m = 0; m < precision; ++m) q[m] = NFElem(c[m]);
    out.push_back(HalfIntegralForm{k, nullptr, std::move(q), true});
  }
  return out;
}

Rat dirichlet_L_neg(int k, i64 d) {
  if (k < 1) throw InvalidInput("dirichlet_L_neg needs k >= 1");
  if (!is_fundamental_discriminant(d)) throw InvalidInput("not a fundamental discriminant: " + std::to_string(d));
  i64 f = d < 0 ? -d : d;
  Poly<Rat> bk = bernoulli_polynomial(static_cast<unsigned>(k));
  Rat s(0);
  for (i64 a = 1; a <= f; ++a) {
    int chi = kronecker(d, a);
    if (chi == 0) continue;
    s += Rat(chi) * bk.eval(make_rat(Int(a), Int(f)));
  }
  Rat B = Rat(ipow(f, static_cast<unsigned long>(k - 1))) * s;
  return -B / Rat(k);
}

HalfIntegralForm cohen_eisenstein(int k, std::size_t precision) {
  std::size_t n = std::max(precision, default_plus_certify_bound(k) + 1);
  auto basis = basis_series(k, n);
  auto rows = shimura_constraints<Rat>(k, basis, n, [&](i64 m) { return sigma_big(m, 2 * k - 1); });
  auto ker = nullspace(rows, basis.size());
  if (ker.size() != 1) throw InternalError("Eisenstein eigen-system is not one-dimensional");
  std::vector<Rat> c(n, Rat(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t m = 0; m < n; ++m) c[m] += ker[0][j] * basis[j][m];
  // normalize at the smallest fundamental index
  std::size_t first = k % 2 ? 3 : 1;
  i64 d0 = k % 2 ? -3 : 1;
  if (sgn(c[first]) == 0) throw InternalError("Eisenstein coefficient vanishes at the normalizing index");
  Rat scale = dirichlet_L_neg(k, d0) / c[first];
  Series<NFElem> q(precision);
  for (std::size_t m = 0; m < precision; ++m) q[m] = NFElem(Rat(scale * c[m]));
  return HalfIntegralForm{k, nullptr, std::move(q), true};
}

HalfIntegralForm shimura_eigen_lift(const EigenformData& f, std::size_t precision) {
  int k = f.weight / 2;
  std::size_t n = std::max(precision, default_plus_certify_bound(k) + 1);
  i64 need = isqrt(static_cast<i64>(n)) + 1;
  if (static_cast<i64>(f.precision()) <= need)
    throw InvalidInput("eigenform precision too small for the Shimura relation up to q^" + std::to_string(n));
  auto basis = basis_series(k, n);
  auto rows = shimura_constraints<NFElem>(k, basis, n, [&](i64 m) { return f.a(static_cast<std::size_t>(m)); });
  std::vector<NFElem> c0;
  for (auto& b : basis) c0.push_back(NFElem(b[0]));
  rows.push_back(c0);
  for (auto& r : rows)
    for (auto& x : r) x = x.in_field(f.hecke_field);
  auto ker = nullspace(rows, basis.size());
  if (ker.size() != 1)
    throw InvalidInput("Shimura relation system has a " + std::to_string(ker.size()) + "-dimensional solution space");
  std::vector<NFElem> c(n, NFElem(f.hecke_field, {Rat(0)}));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (ker[0][j].is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m)
      if (sgn(basis[j][m]) != 0) c[m] += ker[0][j] * NFElem(basis[j][m]);
  }
  std::size_t first = 0;
  while (first < n && c[first].is_zero()) ++first;
  if (first == n) throw InternalError("Shimura lift vanishes identically");
  NFElem scale = inverse(c[first]);
  Series<NFElem> q(precision);
  for (std::size_t m = 0; m < precision; ++m) q[m] = c[m] * scale;
  return HalfIntegralForm{k, f.hecke_field, std::move(q), true};
}

}  // namespace ikeda
