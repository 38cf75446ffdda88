#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/number_field.hpp"
#include "ikeda/arith/poly.hpp"
#include "ikeda/modforms.hpp"
#include "ikeda/plus_space.hpp"
#include "ikeda/quadforms.hpp"
#include "ikeda/siegel_series.hpp"

namespace ikeda {

// psi_0 = l^{nk - n(n+1)/2}, psi_i = alpha l^{i-k} (1 <= i <= n),
// psi_i = beta l^{i-k-n} (n < i <= 2n). alpha is the ring generator for cusp
// forms; for the Eisenstein series alpha = 1, beta = l^{2k-1} as scalars.
struct SatakeParam {
  i64 l = 0;
  int k = 0;
  int n = 0;
  SatakeRing alpha;
  SatakeRing beta;
  std::vector<SatakeRing> psi;

  int genus() const { return 2 * n; }
  // psi_0^2 psi_1 ... psi_{2n} == l^{2n(k+n) - n(2n+1)}
  bool fundamental_equation() const;
};

// enforce_parity = false skips the k = n mod 2 gate (the Euler factor identity is
// algebraic and is checked at both parities).
SatakeParam satake_params(const SatakeRing& alpha, const SatakeRing& beta, i64 l, int k, int n,
                          bool enforce_parity = true);
SatakeParam satake_params(const EigenformData& f, i64 l, int n);
SatakeParam eisenstein_satake_params(int k, i64 l, int n);

// alpha^v F(beta l^{-k-n}) with v = deg F / 2.
SatakeRing ikeda_local_factor(const SiegelSeriesPoly& F, const SatakeRing& alpha, const SatakeRing& beta, int k);

// c_{|d_T|}(h) prod_{l | f_T} alpha_l^{v_l} F_l(T; beta_l l^{-k-n}). Every local
// factor is checked to be conjugation invariant (InternalError otherwise).
NFElem ikeda_coeff(const EigenformData& f, const HalfIntegralForm& h, const HalfIntMatrix& T, int n);

// phi_T(l^j), j = 0..v, from alpha^v F(T; beta l^{-k-n}) =
// sum_i phi_T(l^{v-i}) (l^{k-1})^{v-i} a_{l^i}; the result is indexed by j.
std::vector<Int> kohnen_phi_expansion(int k, const HalfIntMatrix& T, i64 l);
// sum_i phi_T(l^{v-i}) (l^{k-1})^{v-i} a_{l^i}(f), for checking the expansion.
NFElem kohnen_phi_evaluate(const std::vector<Int>& phi, const EigenformData& f, i64 l);

struct StabilizationPolys {
  Poly<SatakeRing> phi;       // degree 2^{2n}
  Poly<SatakeRing> phi_star;  // phi / ((Y - psi_0)(Y - alpha^n))
  Poly<SatakeRing> psi_star;  // degree n + 1
};

// Divisibility psi_star | phi_star | phi is verified (InternalError otherwise).
StabilizationPolys hecke_stabilization_polys(const SatakeParam& s);
// Refuses (InvalidInput) a prime where f is not ordinary.
StabilizationPolys hecke_stabilization_polys(const EigenformData& f, i64 p, int n);

// (1 - (d/p) beta p^{-k}) c_{|d|}(h) alpha^{v_p(f) + n(n+1)} prod_{l != p} (...).
SatakeRing semi_ordinary_coeff(const EigenformData& f, const HalfIntegralForm& h, const HalfIntMatrix& T, int n, i64 p);

struct FourierTable {
  int genus = 0;
  int weight = 0;
  i64 level = 1;
  std::vector<std::pair<HalfIntMatrix, SatakeRing>> entries;
};

using CoefficientSupplier = std::function<SatakeRing(const HalfIntMatrix&)>;

// Entry at T becomes the coefficient at pT, as returned by the supplier.
FourierTable u_p0_apply(const FourierTable& table, i64 p, const CoefficientSupplier& supplier);
// sum_j c_j A(p^j T) for P(Y) = sum_j c_j Y^j.
SatakeRing apply_u_polynomial(const Poly<SatakeRing>& P, const HalfIntMatrix& T, i64 p, const CoefficientSupplier& A);

FourierTable lift_table(const EigenformData& f, const HalfIntegralForm& h, int genus, const std::vector<HalfIntMatrix>& classes);
FourierTable semi_ordinary_table(const EigenformData& f, const HalfIntegralForm& h, int genus, const std::vector<HalfIntMatrix>& classes, i64 p);

// (Psi*/Phi*)(alpha) Lift | Phi*(U_{p,0}); genus 2 only.
FourierTable stabilize_via_operator(const EigenformData& f, const HalfIntegralForm& h, i64 p, const std::vector<HalfIntMatrix>& classes);
// Lift | (U_{p,0} - psi_0) Phi*(U_{p,0}); genus 2 only.
FourierTable dagger_via_operator(const EigenformData& f, const HalfIntegralForm& h, i64 p, const std::vector<HalfIntMatrix>& classes);

// zeta(1 - m) = -B_m / m
Rat zeta_neg(int m);
// zeta(s)(1 - p^{-s}) at s = 1 - m
Rat zeta_p_neg(int m, i64 p);

// L(1-k, chi_d) prod_{l | f} F_l(T; l^{k-n-1}); T positive definite of genus 2n.
Rat eisenstein_siegel_coeff(int k, int n, const HalfIntMatrix& T);
// 2^{-n} zeta(1-k-n) prod_{i=1..n} zeta(1-2k-2n+2i)
Rat eisenstein_constant_term(int k, int n);
// Positive definite T: L^{(p)}(1-k, chi_d) prod_{l | f, l != p} F_l. T = 0: the
// zeta^{(p)} product. Other singular T raise Unsupported.
Rat eisenstein_stabilized_coeff(int k, int n, const HalfIntMatrix& T, i64 p);

// Both sides of the Euler factor identity as polynomials in u:
// (1-u) prod (1 - psi_i u)(1 - psi_i^{-1} u) and (1-u) prod (1 - alpha l^{i-k-n} u)(1 - beta l^{i-k-n} u).
std::pair<Poly<SatakeRing>, Poly<SatakeRing>> standard_L_euler_factors(const SatakeParam& s);
bool standard_L_factorization_check(const SatakeParam& s);
bool standard_L_factorization_check(const EigenformData& f, int n, i64 l);

std::string to_string(const FourierTable& t);

}  // namespace ikeda
