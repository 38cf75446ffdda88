#include "ikeda/siegel_series.hpp"

#include "ikeda/errors.hpp"

namespace ikeda {

namespace {

Poly<Int> pow_x(const Int& c, std::size_t deg) { return Poly<Int>::monomial(c, deg); }

void check_prime(i64 l) {
  if (l < 2 || !is_prime(l)) throw InvalidInput("not a prime: " + std::to_string(l));
}

void check_pd(const HalfIntMatrix& T) {
  if (!T.positive_definite()) throw InvalidInput("matrix is not positive definite: " + T.to_string());
}

}  // namespace

SiegelSeriesPoly kaufhold_genus2(const HalfIntMatrix& T, i64 l) {
  check_prime(l);
  if (T.genus != 2) throw InvalidInput("kaufhold_genus2 needs a genus 2 matrix");
  check_pd(T);
  auto dd = discriminant_data(T);
  int vf = dd.f_valuations.count(l) ? dd.f_valuations.at(l) : 0;
  int vm = valuation(content(T), l);
  int chi = kronecker(dd.d, l);
  Int L(l);
  Poly<Int> F;
  for (int i = 0; i <= vm; ++i) {
    Poly<Int> inner;
    for (int j = 0; j <= vf - i; ++j) inner += pow_x(ipow(L, static_cast<unsigned long>(3 * j)), static_cast<std::size_t>(2 * j));
    Poly<Int> corr;
    for (int j = 0; j <= vf - i - 1; ++j)
      corr += pow_x(Int(chi) * ipow(L, static_cast<unsigned long>(3 * j + 1)), static_cast<std::size_t>(2 * j + 1));
    F += pow_x(ipow(L, static_cast<unsigned long>(2 * i)), static_cast<std::size_t>(i)) * (inner - corr);
  }
  return {l, 2, vf, F};
}

i64 quadric_points(const HalfIntMatrix& T, i64 l) {
  check_prime(l);
  int n = T.genus;
  // Q(v) = sum t_ii v_i^2 + sum_{i<j} 2t_ij v_i v_j, reduced mod l
  std::vector<i64> diag(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    diag[static_cast<std::size_t>(i)] = mod(T.t(i), l);
    for (int j = i + 1; j < n; ++j) off[static_cast<std::size_t>(i * n + j)] = mod(T.m(i, j), l);
  }
  i64 total = 1;
  for (int i = 0; i < n; ++i) total *= l;
  std::vector<i64> v(static_cast<std::size_t>(n), 0);
  i64 zeros = 0;
  for (i64 code = 1; code < total; ++code) {
    i64 c = code;
    for (int i = 0; i < n; ++i, c /= l) v[static_cast<std::size_t>(i)] = c % l;
    i64 q = 0;
    for (int i = 0; i < n; ++i) {
      i64 vi = v[static_cast<std::size_t>(i)];
      if (!vi) continue;
      q += diag[static_cast<std::size_t>(i)] * vi % l * vi;
      for (int j = i + 1; j < n; ++j) q += off[static_cast<std::size_t>(i * n + j)] * vi % l * v[static_cast<std::size_t>(j)];
      q %= l;
    }
    if (q == 0) ++zeros;
  }
  return zeros / (l - 1);
}

SiegelSeriesPoly rank_one_v1(const HalfIntMatrix& T, i64 l) {
  check_prime(l);
  check_pd(T);
  auto dd = discriminant_data(T);
  int vf = dd.f_valuations.count(l) ? dd.f_valuations.at(l) : 0;
  if (vf != 1) throw InvalidInput("rank-one formula needs v_l(f_T) = 1, got " + std::to_string(vf));
  int n = T.genus / 2;
  Int L(l);
  Int proj = (ipow(L, static_cast<unsigned long>(2 * n)) - 1) / (L - 1);
  Int c1 = L * quadric_points(T, l) - proj + 1 - Int(kronecker(dd.d, l)) * ipow(L, static_cast<unsigned long>(n));
  return {l, T.genus, 1, Poly<Int>{Int(1), c1, ipow(L, static_cast<unsigned long>(2 * n + 1))}};
}

SiegelSeriesPoly genus4_v1(const HalfIntMatrix& T, i64 l) {
  if (T.genus != 4) throw InvalidInput("genus4_v1 needs a genus 4 matrix");
  return rank_one_v1(T, l);
}

SiegelSeriesPoly siegel_series(const HalfIntMatrix& T, i64 l) {
  check_prime(l);
  check_pd(T);
  auto dd = discriminant_data(T);
  int vf = dd.f_valuations.count(l) ? dd.f_valuations.at(l) : 0;
  if (vf == 0) return {l, T.genus, 0, Poly<Int>{Int(1)}};
  if (T.genus == 2) return kaufhold_genus2(T, l);
  if (vf == 1) return genus4_v1(T, l);
  throw Unsupported("F_" + std::to_string(l) + " at genus 4 with v_l(f_T) = " + std::to_string(vf) + " for " +
                    T.to_string());
}

bool telescope_identity(const Poly<Int>& F0, const Poly<Int>& F1, const Poly<Int>& F2, i64 d, i64 p) {
  Int P(p);
  Poly<Int> mid{Int(0), P * P, P * P * P};
  Poly<Int> lhs = F2 - mid * F1 + pow_x(ipow(P, 5), 3) * F0;
  Poly<Int> rhs{Int(1), -Int(kronecker(d, p)) * P};
  return lhs == rhs;
}

bool telescope_check(const HalfIntMatrix& T, i64 p) {
  if (T.genus != 2) throw InvalidInput("telescope_check is a genus 2 identity");
  auto F0 = kaufhold_genus2(T, p).poly;
  auto F1 = kaufhold_genus2(T.scaled(p), p).poly;
  auto F2 = kaufhold_genus2(T.scaled(p * p), p).poly;
  return telescope_identity(F0, F1, F2, discriminant_data(T).d, p);
}

bool functional_eq_check(const SiegelSeriesPoly& F) {
  if (F.poly.coeff(0) != 1) return false;
  if (F.poly.degree().value_or(0) != static_cast<std::size_t>(2 * F.v) || F.poly.is_zero()) return false;
  int n = F.genus / 2;
  Int L(F.l);
  for (int j = 0; j <= F.v; ++j) {
    Int w = ipow(L, static_cast<unsigned long>((2 * n + 1) * (F.v - j)));
    if (F.poly.coeff(static_cast<std::size_t>(2 * F.v - j)) != w * F.poly.coeff(static_cast<std::size_t>(j))) return false;
  }
  return true;
}

std::vector<Rat> bl_assemble(const SiegelSeriesPoly& F, i64 d, std::size_t order) {
  int n = F.genus / 2;
  Int L(F.l);
  Poly<Int> num = F.poly * Poly<Int>{Int(1), Int(-1)};
  for (int i = 1; i <= n; ++i) num = num * Poly<Int>{Int(1), Int(0), -ipow(L, static_cast<unsigned long>(2 * i))};
  Int a = Int(kronecker(d, F.l)) * ipow(L, static_cast<unsigned long>(n));
  std::vector<Rat> out(order, Rat(0));
  // multiply by sum_j a^j X^j
  for (std::size_t k = 0; k < order; ++k) {
    Int s = 0, ap = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      s += ap * num.coeff(k - j);
      ap *= a;
    }
    out[k] = Rat(s);
  }
  return out;
}

}  // namespace ikeda
