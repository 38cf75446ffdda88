#include "ikeda/lifting.hpp"

#include <sstream>

#include "ikeda/arith/ntheory.hpp"
#include "ikeda/errors.hpp"

namespace ikeda {

namespace {

SatakeRing scalar(const Rat& r) { return SatakeRing(NFElem(r)); }

Rat lpow(i64 l, long e) { return rpow(Rat(l), e); }

SatakeRing ring_pow(const SatakeRing& x, long e) {
  SatakeRing r(1);
  for (long i = 0; i < e; ++i) r = r * x;
  return r;
}

void check_parity(int k, int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  if ((k - n) % 2 != 0)
    throw InvalidInput("parity: k = " + std::to_string(k) + " and n = " + std::to_string(n) + " differ mod 2");
}

void check_prime(i64 l) {
  if (l < 2 || !is_prime(l)) throw InvalidInput("not a prime: " + std::to_string(l));
}

const NFElem& half_coeff(const HalfIntegralForm& h, i64 d) {
  std::size_t m = static_cast<std::size_t>(d < 0 ? -d : d);
  if (m >= h.precision())
    throw InvalidInput("c_" + std::to_string(m) + " is beyond the half-integral form's precision " +
                       std::to_string(h.precision()));
  return h.c(m);
}

void check_pair(const EigenformData& f, const HalfIntegralForm& h, const HalfIntMatrix& T, int n) {
  check_parity(f.k(), n);
  if (T.genus != 2 * n) throw InvalidInput("matrix genus " + std::to_string(T.genus) + " does not match n = " + std::to_string(n));
  if (h.k != f.k()) throw InvalidInput("half-integral weight does not match the eigenform");
  if (!T.positive_definite()) throw InvalidInput("matrix is not positive definite: " + T.to_string());
}

// Product over l | f_T, l != skip, of the symmetric local factors.
NFElem local_product(const EigenformData& f, const HalfIntMatrix& T, const DiscriminantData& dd, i64 skip) {
  NFElem out(1);
  for (const auto& [l, v] : dd.f_valuations) {
    if (l == skip) continue;
    SiegelSeriesPoly F = siegel_series(T, l);
    auto rel = satake_relation(f, l);
    SatakeRing a = SatakeRing::gen(rel);
    SatakeRing fac = ikeda_local_factor(F, a, a.conjugate(), f.k());
    auto w = fac.symmetric_witness();
    if (!w) throw InternalError("local factor at l = " + std::to_string(l) + " is not conjugation invariant for " + T.to_string());
    out *= *w;
  }
  return out;
}

bool is_ordinary_somewhere(const EigenformData& f, i64 p) {
  for (bool b : is_ordinary(f, p))
    if (b) return true;
  return false;
}

Poly<SatakeRing> lin(const SatakeRing& r) { return Poly<SatakeRing>::linear_root(r); }

// 1 - c u
Poly<SatakeRing> one_minus(const SatakeRing& c) { return Poly<SatakeRing>{SatakeRing(1), -c}; }

bool is_zero_matrix(const HalfIntMatrix& T) {
  for (i64 x : T.gram)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool SatakeParam::fundamental_equation() const {
  SatakeRing prod = psi.at(0);
  for (const auto& x : psi) prod = prod * x;
  return prod == scalar(lpow(l, 2L * n * (k + n) - static_cast<long>(n) * (2 * n + 1)));
}

SatakeParam satake_params(const SatakeRing& alpha, const SatakeRing& beta, i64 l, int k, int n, bool enforce_parity) {
  if (enforce_parity) check_parity(k, n);
  if (n < 1) throw InvalidInput("n must be positive");
  check_prime(l);
  SatakeParam s{l, k, n, alpha, beta, {}};
  s.psi.push_back(scalar(lpow(l, static_cast<long>(n) * k - static_cast<long>(n) * (n + 1) / 2)));
  for (int i = 1; i <= n; ++i) s.psi.push_back(alpha * scalar(lpow(l, i - k)));
  for (int i = n + 1; i <= 2 * n; ++i) s.psi.push_back(beta * scalar(lpow(l, i - k - n)));
  return s;
}

SatakeParam satake_params(const EigenformData& f, i64 l, int n) {
  check_prime(l);
  SatakeRing a = SatakeRing::gen(satake_relation(f, l));
  return satake_params(a, a.conjugate(), l, f.k(), n);
}

SatakeParam eisenstein_satake_params(int k, i64 l, int n) {
  return satake_params(SatakeRing(1), scalar(Rat(ipow(l, static_cast<unsigned long>(2 * k - 1)))), l, k, n);
}

SatakeRing ikeda_local_factor(const SiegelSeriesPoly& F, const SatakeRing& alpha, const SatakeRing& beta, int k) {
  int n = F.genus / 2;
  SatakeRing X = beta * scalar(lpow(F.l, -static_cast<long>(k) - n));
  return ring_pow(alpha, F.v) * F.poly.eval<SatakeRing>(X);
}

NFElem ikeda_coeff(const EigenformData& f, const HalfIntegralForm& h, const HalfIntMatrix& T, int n) {
  check_pair(f, h, T, n);
  DiscriminantData dd = discriminant_data(T);
  return half_coeff(h, dd.d) * local_product(f, T, dd, 0);
}

std::vector<Int> kohnen_phi_expansion(int k, const HalfIntMatrix& T, i64 l) {
  SiegelSeriesPoly F = siegel_series(T, l);
  int n = T.genus / 2;
  int v = F.v;
  if (v == 0) return {Int(1)};
  // Symmetric functions of alpha, beta as polynomials in a = alpha + beta, with alpha beta = P.
  using PR = Poly<Rat>;
  Rat P(ipow(l, static_cast<unsigned long>(2 * k - 1)));
  PR a{Rat(0), Rat(1)};
  std::vector<PR> power{PR{Rat(2)}, a};   // alpha^m + beta^m
  std::vector<PR> complete{PR{Rat(1)}, a};  // a_{l^m}
  for (int m = 2; m <= 2 * v; ++m) {
    power.push_back(a * power[m - 1] - P * power[m - 2]);
    complete.push_back(a * complete[m - 1] - P * complete[m - 2]);
  }
  // alpha^v F(beta X) has symmetric part sum_j c_j X^j (alpha^v beta^j + alpha^j beta^v) / 2.
  PR lhs;
  for (int j = 0; j <= 2 * v; ++j) {
    Rat c = Rat(F.poly.coeff(static_cast<std::size_t>(j))) * lpow(l, -static_cast<long>(j) * (k + n));
    if (c == 0) continue;
    PR sym = j <= v ? rpow(P, j) * power[static_cast<std::size_t>(v - j)]
                    : rpow(P, v) * power[static_cast<std::size_t>(j - v)];
    lhs += (c / 2) * sym;
  }
  std::vector<Int> phi(static_cast<std::size_t>(v) + 1);
  for (int i = v; i >= 0; --i) {
    Rat top = lhs.coeff(static_cast<std::size_t>(i));
    Rat val = top / Rat(ipow(l, static_cast<unsigned long>((k - 1) * (v - i))));
    if (val.get_den() != 1)
      throw InternalError("phi_T(" + std::to_string(l) + "^" + std::to_string(v - i) + ") = " + to_string(val) +
                          " is not integral for " + T.to_string());
    phi[static_cast<std::size_t>(v - i)] = val.get_num();
    lhs = lhs - top * complete[static_cast<std::size_t>(i)];
  }
  if (!lhs.is_zero()) throw InternalError("phi expansion leaves a remainder for " + T.to_string());
  return phi;
}

NFElem kohnen_phi_evaluate(const std::vector<Int>& phi, const EigenformData& f, i64 l) {
  int v = static_cast<int>(phi.size()) - 1;
  NFElem out(0);
  for (int i = 0; i <= v; ++i) {
    std::size_t m = static_cast<std::size_t>(ipow64(l, i));
    if (m >= f.precision()) throw InvalidInput("a_{l^i} beyond the eigenform's precision");
    Int w = phi[static_cast<std::size_t>(v - i)] * ipow(l, static_cast<unsigned long>((f.k() - 1) * (v - i)));
    out += NFElem(w) * f.a(m);
  }
  return out;
}

StabilizationPolys hecke_stabilization_polys(const SatakeParam& s) {
  int n = s.n;
  int m = 2 * n;
  const SatakeRing& psi0 = s.psi[0];
  Poly<SatakeRing> phi = lin(psi0);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    SatakeRing r = psi0;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) r = r * s.psi[static_cast<std::size_t>(i + 1)];
    phi *= lin(r);
  }
  SatakeRing an = ring_pow(s.alpha, n);
  auto [phi_star, rem] = divmod_monic(phi, lin(psi0) * lin(an));
  if (!rem.is_zero()) throw InternalError("(Y - psi_0)(Y - alpha^n) does not divide Phi");

  SatakeRing an1 = ring_pow(s.alpha, n - 1);
  Poly<SatakeRing> psi_star = lin(an1 * scalar(lpow(s.l, s.k + n - 1)));
  for (int i = 1; i <= n; ++i) psi_star *= lin(an1 * s.beta * scalar(lpow(s.l, 2 * i - 2)));
  auto [q, rem2] = divmod_monic(phi_star, psi_star);
  if (!rem2.is_zero()) throw InternalError("Psi* does not divide Phi*");
  return StabilizationPolys{std::move(phi), std::move(phi_star), std::move(psi_star)};
}

StabilizationPolys hecke_stabilization_polys(const EigenformData& f, i64 p, int n) {
  check_prime(p);
  if (!is_ordinary_somewhere(f, p)) throw InvalidInput("form is not ordinary at p = " + std::to_string(p));
  return hecke_stabilization_polys(satake_params(f, p, n));
}

SatakeRing semi_ordinary_coeff(const EigenformData& f, const HalfIntegralForm& h, const HalfIntMatrix& T, int n, i64 p) {
  check_pair(f, h, T, n);
  check_prime(p);
  DiscriminantData dd = discriminant_data(T);
  int k = f.k();
  SatakeRing alpha = SatakeRing::gen(satake_relation(f, p));
  SatakeRing beta = alpha.conjugate();
  int chi = kronecker(dd.d, p);
  SatakeRing euler = SatakeRing(1) - scalar(Rat(chi) * lpow(p, -k)) * beta;
  int vp = 0;
  if (auto it = dd.f_valuations.find(p); it != dd.f_valuations.end()) vp = it->second;
  NFElem rest = half_coeff(h, dd.d) * local_product(f, T, dd, p);
  return euler * SatakeRing(rest) * ring_pow(alpha, vp + n * (n + 1));
}

FourierTable u_p0_apply(const FourierTable& table, i64 p, const CoefficientSupplier& supplier) {
  check_prime(p);
  FourierTable out{table.genus, table.weight, p, {}};
  for (const auto& [T, c] : table.entries) {
    HalfIntMatrix pT = T.scaled(p);
    try {
      out.entries.emplace_back(T, supplier(pT));
    } catch (const Error& e) {
      throw Unsupported("cannot resolve the coefficient at " + pT.to_string() + ": " + e.what());
    }
  }
  return out;
}

SatakeRing apply_u_polynomial(const Poly<SatakeRing>& P, const HalfIntMatrix& T, i64 p, const CoefficientSupplier& A) {
  SatakeRing out(0);
  HalfIntMatrix cur = T;
  for (std::size_t j = 0; j < P.size(); ++j) {
    if (!is_zero(P.coeff(j))) out += P.coeff(j) * A(cur);
    if (j + 1 < P.size()) cur = cur.scaled(p);
  }
  return out;
}

FourierTable lift_table(const EigenformData& f, const HalfIntegralForm& h, int genus, const std::vector<HalfIntMatrix>& classes) {
  int n = genus / 2;
  check_parity(f.k(), n);
  FourierTable t{genus, f.k() + n, 1, {}};
  for (const auto& T : classes) t.entries.emplace_back(T, SatakeRing(ikeda_coeff(f, h, T, n)));
  return t;
}

FourierTable semi_ordinary_table(const EigenformData& f, const HalfIntegralForm& h, int genus,
                                 const std::vector<HalfIntMatrix>& classes, i64 p) {
  int n = genus / 2;
  check_parity(f.k(), n);
  check_prime(p);
  if (!is_ordinary_somewhere(f, p)) throw InvalidInput("form is not ordinary at p = " + std::to_string(p));
  FourierTable t{genus, f.k() + n, p, {}};
  for (const auto& T : classes) t.entries.emplace_back(T, semi_ordinary_coeff(f, h, T, n, p));
  return t;
}

namespace {

FourierTable operator_table(const EigenformData& f, const HalfIntegralForm& h, i64 p,
                            const std::vector<HalfIntMatrix>& classes, bool dagger) {
  for (const auto& T : classes)
    if (T.genus != 2) throw Unsupported("operator stabilization is implemented at genus 2 only");
  check_parity(f.k(), 1);
  StabilizationPolys polys = hecke_stabilization_polys(f, p, 1);
  SatakeParam s = satake_params(f, p, 1);
  Poly<SatakeRing> P = polys.phi_star;
  SatakeRing scale(1);
  if (dagger) {
    P = lin(s.psi[0]) * P;
  } else {
    SatakeRing a = s.alpha;
    scale = polys.psi_star.eval<SatakeRing>(a) * inverse(polys.phi_star.eval<SatakeRing>(a));
  }
  CoefficientSupplier A = [&](const HalfIntMatrix& T) { return SatakeRing(ikeda_coeff(f, h, T, 1)); };
  FourierTable t{2, f.k() + 1, p, {}};
  for (const auto& T : classes) t.entries.emplace_back(T, scale * apply_u_polynomial(P, T, p, A));
  return t;
}

}  // namespace

FourierTable stabilize_via_operator(const EigenformData& f, const HalfIntegralForm& h, i64 p,
                                    const std::vector<HalfIntMatrix>& classes) {
  return operator_table(f, h, p, classes, false);
}

FourierTable dagger_via_operator(const EigenformData& f, const HalfIntegralForm& h, i64 p,
                                 const std::vector<HalfIntMatrix>& classes) {
  return operator_table(f, h, p, classes, true);
}

Rat zeta_neg(int m) {
  if (m < 1) throw InvalidInput("zeta_neg needs m >= 1");
  if (m == 1) return Rat(-1, 2);
  return -bernoulli(static_cast<unsigned>(m)) / Rat(m);
}

Rat zeta_p_neg(int m, i64 p) {
  check_prime(p);
  return zeta_neg(m) * (Rat(1) - Rat(ipow(p, static_cast<unsigned long>(m - 1))));
}

namespace {

void check_eisenstein(int k, int n, const HalfIntMatrix& T) {
  check_parity(k, n);
  if (k <= n + 1) throw InvalidInput("Eisenstein series needs k > n + 1");
  if (T.genus != 2 * n) throw InvalidInput("matrix genus does not match n");
}

Rat eisenstein_product(int k, int n, const HalfIntMatrix& T, const DiscriminantData& dd, i64 skip) {
  Rat out(1);
  for (const auto& [l, v] : dd.f_valuations) {
    if (l == skip) continue;
    SiegelSeriesPoly F = siegel_series(T, l);
    out *= F.poly.eval<Rat>(lpow(l, k - n - 1));
  }
  return out;
}

}  // namespace

Rat eisenstein_siegel_coeff(int k, int n, const HalfIntMatrix& T) {
  check_eisenstein(k, n, T);
  if (!T.positive_definite()) throw InvalidInput("matrix is not positive definite: " + T.to_string());
  DiscriminantData dd = discriminant_data(T);
  return dirichlet_L_neg(k, dd.d) * eisenstein_product(k, n, T, dd, 0);
}

Rat eisenstein_constant_term(int k, int n) {
  check_parity(k, n);
  Rat out = make_rat(Int(1), ipow(2, static_cast<unsigned long>(n))) * zeta_neg(k + n);
  for (int i = 1; i <= n; ++i) out *= zeta_neg(2 * k + 2 * n - 2 * i);
  return out;
}

Rat eisenstein_stabilized_coeff(int k, int n, const HalfIntMatrix& T, i64 p) {
  check_eisenstein(k, n, T);
  check_prime(p);
  if (is_zero_matrix(T)) {
    Rat out = make_rat(Int(1), ipow(2, static_cast<unsigned long>(n))) * zeta_p_neg(k + n, p);
    for (int i = 1; i <= n; ++i) out *= zeta_p_neg(2 * k + 2 * n - 2 * i, p);
    return out;
  }
  if (T.det2T() == 0) throw Unsupported("singular T of intermediate rank is not supported: " + T.to_string());
  if (!T.positive_definite()) throw InvalidInput("matrix is not positive semidefinite: " + T.to_string());
  DiscriminantData dd = discriminant_data(T);
  Rat euler = Rat(1) - Rat(kronecker(dd.d, p)) * Rat(ipow(p, static_cast<unsigned long>(k - 1)));
  return dirichlet_L_neg(k, dd.d) * euler * eisenstein_product(k, n, T, dd, p);
}

std::pair<Poly<SatakeRing>, Poly<SatakeRing>> standard_L_euler_factors(const SatakeParam& s) {
  Poly<SatakeRing> lhs = one_minus(SatakeRing(1));
  Poly<SatakeRing> rhs = lhs;
  for (int i = 1; i <= 2 * s.n; ++i) {
    const SatakeRing& x = s.psi[static_cast<std::size_t>(i)];
    lhs *= one_minus(x) * one_minus(inverse(x));
    SatakeRing t = scalar(lpow(s.l, i - s.k - s.n));
    rhs *= one_minus(s.alpha * t) * one_minus(s.beta * t);
  }
  return {lhs, rhs};
}

bool standard_L_factorization_check(const SatakeParam& s) {
  auto [lhs, rhs] = standard_L_euler_factors(s);
  return lhs == rhs;
}

bool standard_L_factorization_check(const EigenformData& f, int n, i64 l) {
  check_prime(l);
  SatakeRing a = SatakeRing::gen(satake_relation(f, l));
  return standard_L_factorization_check(satake_params(a, a.conjugate(), l, f.k(), n, false));
}

std::string to_string(const FourierTable& t) {
  std::ostringstream os;
  os << "genus " << t.genus << " weight " << t.weight << " level " << t.level << "\n";
  for (const auto& [T, c] : t.entries) os << T.to_string() << " (D = " << T.disc() << "): " << to_string(c) << "\n";
  return os.str();
}

}  // namespace ikeda
