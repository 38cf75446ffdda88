#include "ikeda/padic.hpp"

#include <sstream>

#include "ikeda/arith/ntheory.hpp"
#include "ikeda/errors.hpp"

namespace ikeda {

namespace {

using IPoly = std::vector<Int>;

void trim(IPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

IPoly reduce_coeffs(IPoly a, const Int& mod) {
  for (auto& c : a) {
    c %= mod;
    if (sgn(c) < 0) c += mod;
  }
  trim(a);
  return a;
}

IPoly mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

IPoly sub(const IPoly& a, const IPoly& b) {
  IPoly c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// Remainder modulo a monic polynomial, exact over Z.
IPoly rem_monic(IPoly a, const IPoly& g) {
  trim(a);
  std::size_t d = g.size() - 1;
  while (a.size() > d) {
    Int t = a.back();
    std::size_t shift = a.size() - 1 - d;
    for (std::size_t j = 0; j <= d; ++j) a[shift + j] -= t * g[j];
    trim(a);
  }
  return a;
}

IPoly from_fp(const fp::PolyFp& a) {
  IPoly r;
  for (auto c : a) r.push_back(Int(static_cast<unsigned long>(c)));
  return r;
}

fp::PolyFp to_fp(const IPoly& a, fp::u64 p) {
  fp::PolyFp r;
  Int P(static_cast<unsigned long>(p));
  for (const auto& c : a) {
    Int x = c % P;
    if (sgn(x) < 0) x += P;
    r.push_back(x.get_ui());
  }
  fp::trim(r);
  return r;
}

IPoly integral_minpoly(const FieldPtr& field) {
  IPoly m;
  for (const Rat& c : field->minimal_polynomial().coeffs()) {
    if (c.get_den() != 1) throw Unsupported("minimal polynomial with non-integral coefficients");
    m.push_back(c.get_num());
  }
  return m;
}

Int rat_mod(const Rat& r, const Int& mod, long p) {
  if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
    throw InvalidInput("element is not p-integral");
  Int inv;
  mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), mod.get_mpz_t());
  Int x = (r.get_num() * inv) % mod;
  if (sgn(x) < 0) x += mod;
  return x;
}

}  // namespace

std::string PrimeIdealData::to_string() const {
  std::vector<Rat> c;
  for (auto v : local_factor) c.push_back(Rat(static_cast<unsigned long>(v)));
  return "(" + std::to_string(p) + ", " + poly_to_string(Poly<Rat>(c), "x", false) + ")";
}

std::vector<PrimeIdealData> split_prime(const FieldPtr& field, long p) {
  if (!is_prime(p)) throw InvalidInput("split_prime needs a prime");
  IPoly m = integral_minpoly(field);
  fp::u64 up = static_cast<fp::u64>(p);
  fp::PolyFp mp = to_fp(m, up);
  if (!fp::is_squarefree(mp, up))
    throw Unsupported("minimal polynomial is not squarefree mod " + std::to_string(p) + " (ramified or index-divisible prime)");
  std::vector<PrimeIdealData> out;
  for (auto& g : fp::factor_squarefree(mp, up)) out.push_back(PrimeIdealData{p, field, g});
  return out;
}

EmbeddingPtr local_embedding(const PrimeIdealData& ideal, int precision) {
  if (precision < 1) throw InvalidInput("p-adic precision must be positive");
  fp::u64 p = static_cast<fp::u64>(ideal.p);
  IPoly m = integral_minpoly(ideal.field);
  fp::PolyFp gp = ideal.local_factor;
  fp::PolyFp hp = fp::divmod(to_fp(m, p), gp, p).first;
  auto eg = fp::ext_gcd(gp, hp, p);  // s*g + t*h = 1
  if (fp::deg(eg.g) != 0) throw InternalError("local factor is not coprime to its cofactor");
  IPoly g = from_fp(gp), h = from_fp(hp);
  Int pj(static_cast<unsigned long>(p));
  for (int j = 1; j < precision; ++j) {
    IPoly diff = sub(m, mul(g, h));
    for (auto& c : diff) {
      if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) throw InternalError("Hensel step lost congruence");
      c /= pj;
    }
    fp::PolyFp e = to_fp(diff, p);
    fp::PolyFp dg = fp::rem(fp::mul(eg.t, e, p), gp, p);
    fp::PolyFp dh = fp::divmod(fp::sub(e, fp::mul(dg, hp, p), p), gp, p).first;
    IPoly dgi = from_fp(dg), dhi = from_fp(dh);
    g.resize(std::max(g.size(), dgi.size()), Int(0));
    h.resize(std::max(h.size(), dhi.size()), Int(0));
    for (std::size_t i = 0; i < dgi.size(); ++i) g[i] += pj * dgi[i];
    for (std::size_t i = 0; i < dhi.size(); ++i) h[i] += pj * dhi[i];
    pj *= static_cast<unsigned long>(p);
  }
  auto emb = std::make_shared<LocalEmbedding>();
  emb->ideal = ideal;
  emb->precision = precision;
  emb->modulus = pj;
  emb->lifted = reduce_coeffs(g, pj);
  if (sub(m, mul(g, h)).size() > 0) {
    for (const auto& c : sub(m, mul(g, h)))
      if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) throw InternalError("Hensel lift failed");
  }
  return emb;
}

PadicApprox::PadicApprox(EmbeddingPtr emb, std::vector<Int> coeffs, int precision)
    : emb_(std::move(emb)), c_(std::move(coeffs)), prec_(precision) {
  if (prec_ > emb_->precision) prec_ = emb_->precision;
  normalize();
}

PadicApprox PadicApprox::from_integer(const EmbeddingPtr& emb, const Int& a) {
  return PadicApprox(emb, {a}, emb->precision);
}

void PadicApprox::normalize() {
  if (prec_ < 0) prec_ = 0;
  Int mod = ipow(Int(emb_->ideal.p), static_cast<unsigned long>(prec_));
  IPoly r = rem_monic(c_, emb_->lifted);
  c_ = reduce_coeffs(r, mod);
}

std::optional<int> PadicApprox::valuation() const {
  std::optional<int> v;
  for (const auto& c : c_) {
    if (sgn(c) == 0) continue;
    int vc = ikeda::valuation(c, static_cast<unsigned long>(emb_->ideal.p));
    if (vc >= prec_) continue;
    if (!v || vc < *v) v = vc;
  }
  return v;
}

bool PadicApprox::is_unit() const {
  auto v = valuation();
  return v && *v == 0;
}

bool PadicApprox::congruent(const PadicApprox& b) const {
  int pr = std::min(prec_, b.prec_);
  PadicApprox d(emb_, sub(c_, b.c_), pr);
  return d.c_.empty();
}

PadicApprox PadicApprox::operator-() const {
  IPoly c = c_;
  for (auto& x : c) x = -x;
  return PadicApprox(emb_, c, prec_);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  IPoly c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return PadicApprox(a.emb_, c, std::min(a.prec_, b.prec_));
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  // A factor known to be divisible by p^v only needs prec - v digits of the other.
  return PadicApprox(a.emb_, mul(a.c_, b.c_), std::min(a.prec_, b.prec_));
}

PadicApprox PadicApprox::inverse() const {
  if (!is_unit()) throw InvalidInput("inverse of a non-unit p-adic element");
  fp::u64 p = static_cast<fp::u64>(emb_->ideal.p);
  fp::PolyFp g = emb_->ideal.local_factor;
  auto eg = fp::ext_gcd(to_fp(c_, p), g, p);
  if (fp::deg(eg.g) != 0) throw InternalError("unit without inverse mod p");
  PadicApprox x(emb_, from_fp(eg.s), 1);
  int known = 1;
  while (known < prec_) {
    known = std::min(2 * known, prec_);
    PadicApprox self(emb_, c_, known);
    PadicApprox xk(emb_, x.c_, known);
    PadicApprox two(emb_, {Int(2)}, known);
    x = xk * (two - self * xk);
  }
  return PadicApprox(emb_, x.c_, prec_);
}

PadicApprox PadicApprox::divide_by_p_power(int j) const {
  Int pj = ipow(Int(emb_->ideal.p), static_cast<unsigned long>(j));
  IPoly c = c_;
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), pj.get_mpz_t())) throw InvalidInput("element not divisible by p^j");
    x /= pj;
  }
  return PadicApprox(emb_, c, prec_ - j);
}

PadicApprox embed(const NFElem& a, const EmbeddingPtr& emb) {
  IPoly c;
  for (const Rat& r : a.coords()) c.push_back(rat_mod(r, emb->modulus, emb->ideal.p));
  return PadicApprox(emb, c, emb->precision);
}

std::string PadicValuation::to_string() const {
  return (lower_bound ? ">=" : "") + std::to_string(value);
}

PadicValuation padic_valuation(const NFElem& a, const PrimeIdealData& ideal, int precision) {
  if (a.is_zero()) throw InvalidInput("valuation of zero");
  Int den(1);
  for (const Rat& r : a.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
  int vd = valuation(den, static_cast<unsigned long>(ideal.p));
  NFElem scaled = a * NFElem(Rat(den));
  auto emb = local_embedding(ideal, precision + vd);
  auto v = embed(scaled, emb).valuation();
  if (!v) return {precision, true};
  return {*v - vd, false};
}

PadicApprox unit_root(const NFElem& a_p, const PrimeIdealData& ideal, int weight_exponent, int precision) {
  auto emb = local_embedding(ideal, precision);
  PadicApprox a = embed(a_p, emb);
  if (!a.is_unit()) throw InvalidInput("a_p is not a unit at this ideal (non-ordinary)");
  PadicApprox pw = PadicApprox::from_integer(emb, ipow(Int(ideal.p), static_cast<unsigned long>(weight_exponent)));
  PadicApprox alpha = a;
  for (int it = 0; it <= precision + 1; ++it) {
    PadicApprox next = a - pw * alpha.inverse();
    if (next.congruent(alpha)) return next;
    alpha = next;
  }
  return alpha;
}

std::string FactorReport::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  bool first = true;
  for (auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (cofactor != 1) {
    if (!first) os << " * ";
    os << "[" << cofactor.get_str() << " " << cofactor_tag << "]";
  } else if (first) {
    os << "1";
  }
  return os.str();
}

FactorReport factor_report(const Int& n, unsigned long trial_bound) {
  if (sgn(n) == 0) throw InvalidInput("factor_report of zero");
  FactorReport r;
  r.sign = sgn(n) < 0 ? -1 : 1;
  Int m = abs(n);
  for (i64 p : primes_upto(static_cast<i64>(trial_bound))) {
    unsigned long up = static_cast<unsigned long>(p);
    if (!mpz_divisible_ui_p(m.get_mpz_t(), up)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), up)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), up);
      ++e;
    }
    r.factors.emplace_back(Int(up), e);
    if (m == 1) break;
  }
  r.cofactor = m;
  if (m == 1) {
    r.cofactor_tag = "unit";
  } else if (m < Int(trial_bound) * Int(trial_bound)) {
    r.cofactor_tag = "prime";
  } else {
    r.cofactor_tag = mpz_probab_prime_p(m.get_mpz_t(), 30) ? "probable prime" : "composite";
  }
  return r;
}

}  // namespace ikeda
