#include "ikeda/arith/number_field.hpp"

#include <set>

#include "ikeda/arith/linalg.hpp"
#include "ikeda/arith/ntheory.hpp"
#include "ikeda/arith/polymodp.hpp"

namespace ikeda {

namespace {

// Factor degrees mod p must be compatible with any factorization over Q; a
// polynomial is irreducible once no proper degree survives every prime.
bool certify_irreducible(const Poly<Rat>& m) {
  int n = static_cast<int>(*m.degree());
  if (n == 1) return true;
  if (poly_gcd(m, m.derivative()).degree().value_or(0) > 0) return false;
  std::set<int> candidates;
  for (int d = 1; d < n; ++d) candidates.insert(d);
  for (i64 p : primes_upto(4000)) {
    fp::PolyFp f;
    try {
      f = fp::reduce(m, static_cast<fp::u64>(p));
    } catch (const InvalidInput&) {
      continue;
    }
    if (fp::deg(f) != n || !fp::is_squarefree(f, static_cast<fp::u64>(p))) continue;
    std::set<int> sums{0};
    for (auto& [g, d] : fp::distinct_degree(f, static_cast<fp::u64>(p))) {
      int count = fp::deg(g) / d;
      for (int c = 0; c < count; ++c) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
      }
    }
    std::set<int> keep;
    for (int d : candidates)
      if (sums.count(d)) keep.insert(d);
    candidates = std::move(keep);
    if (candidates.empty()) return true;
  }
  return false;
}

Poly<Rat> reduce_mod(const Poly<Rat>& a, const FieldPtr& field) {
  if (!field) return a;
  return divmod_monic(a, field->minimal_polynomial()).second;
}

std::vector<Rat> coords_of(const Poly<Rat>& a, std::size_t len) {
  std::vector<Rat> c(len, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.coeffs()[i];
  return c;
}

FieldPtr common_field(const NFElem& a, const NFElem& b) {
  if (!a.field()) return b.field();
  if (!b.field() || a.field() == b.field()) return a.field();
  if (a.field()->same_as(*b.field())) return a.field();
  // A degree one field is Q; its elements combine like rational constants.
  if (a.field()->degree() == 1) return b.field();
  if (b.field()->degree() == 1) return a.field();
  throw InvalidInput("number field mismatch");
}

NFElem make(const FieldPtr& f, const Poly<Rat>& rep) {
  if (!f) return NFElem(rep.coeff(0));
  return NFElem(f, coords_of(reduce_mod(rep, f), static_cast<std::size_t>(f->degree())));
}

}  // namespace

FieldPtr NumberField::create(const Poly<Rat>& m) {
  if (!m.degree() || *m.degree() == 0) throw InvalidInput("minimal polynomial must have positive degree");
  if (m.leading() != 1) throw InvalidInput("minimal polynomial must be monic");
  if (!certify_irreducible(m)) throw Unsupported("could not certify irreducibility of " + poly_to_string(m, "x", false));
  return FieldPtr(new NumberField(m));
}

NFElem::NFElem(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), c_(std::move(coords)) {
  if (!field_) {
    if (c_.size() > 1) {
      for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) throw InvalidInput("non-constant element without a field");
    }
    c_.resize(1, Rat(0));
    return;
  }
  std::size_t d = static_cast<std::size_t>(field_->degree());
  if (c_.size() > d) {
    c_ = coords_of(reduce_mod(Poly<Rat>(c_), field_), d);
  } else {
    c_.resize(d, Rat(0));
  }
}

NFElem NFElem::generator(const FieldPtr& field) {
  return make(field, Poly<Rat>(std::vector<Rat>{Rat(0), Rat(1)}));
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rat NFElem::to_rational() const {
  if (!is_rational()) throw InvalidInput("number field element is not rational");
  return c_[0];
}

bool NFElem::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

NFElem NFElem::in_field(const FieldPtr& target) const {
  if (field_ && target && (field_ == target || field_->same_as(*target))) return NFElem(target, c_);
  return NFElem(target, std::vector<Rat>{to_rational()});
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  FieldPtr f = common_field(a, b);
  std::size_t n = f ? static_cast<std::size_t>(f->degree()) : 1;
  std::vector<Rat> c(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) c[i] = a.coord(i) + b.coord(i);
  NFElem r;
  r.field_ = f;
  r.c_ = std::move(c);
  return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }

NFElem operator*(const NFElem& a, const NFElem& b) {
  FieldPtr f = common_field(a, b);
  if (a.is_rational() || b.is_rational()) {
    const NFElem& s = a.is_rational() ? a : b;
    const NFElem& o = a.is_rational() ? b : a;
    Rat k = s.c_[0];
    NFElem r;
    r.field_ = f;
    std::size_t n = f ? static_cast<std::size_t>(f->degree()) : 1;
    r.c_.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = k * o.coord(i);
    return r;
  }
  return make(f, a.representative() * b.representative());
}

bool operator==(const NFElem& a, const NFElem& b) {
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  if ((a.field_ && b.field_) && a.field_ != b.field_ && !a.field_->same_as(*b.field_) && a.field_->degree() > 1 &&
      b.field_->degree() > 1)
    return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.coord(i) != b.coord(i)) return false;
  return true;
}

NFElem inverse(const NFElem& a) {
  if (a.is_zero()) throw InvalidInput("inverse of zero");
  if (a.is_rational()) return NFElem(a.field(), std::vector<Rat>{1 / a.to_rational()});
  // extended Euclid: s*a + t*m = 1
  Poly<Rat> r0 = a.field()->minimal_polynomial(), r1 = a.representative();
  Poly<Rat> s0, s1 = Poly<Rat>::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<Rat> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (*r0.degree() != 0) throw InternalError("minimal polynomial shares a factor with an element");
  Rat c = 1 / r0.coeff(0);
  return make(a.field(), c * s0);
}

std::string to_string(const NFElem& a) { return poly_to_string(a.representative(), "x", false); }

NFElem parse_nfelem(const std::string& s, const FieldPtr& field) {
  Poly<Rat> p = parse_rational_poly(s, "x");
  if (!field && p.degree().value_or(0) > 0) throw InvalidInput("non-rational element without a field: " + s);
  return make(field, p);
}

Rat resultant(const Poly<Rat>& f, const Poly<Rat>& g) {
  if (f.is_zero() || g.is_zero()) return Rat(0);
  std::size_t m = *f.degree(), n = *g.degree(), N = m + n;
  if (N == 0) return Rat(1);
  Matrix<Rat> s = zero_matrix<Rat>(N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  return determinant(s);
}

Rat field_norm(const NFElem& a) {
  if (!a.field()) return a.to_rational();
  return resultant(a.field()->minimal_polynomial(), a.representative());
}

std::vector<std::vector<Rat>> multiplication_matrix(const NFElem& a) {
  if (!a.field()) return {{a.to_rational()}};
  std::size_t d = static_cast<std::size_t>(a.field()->degree());
  std::vector<std::vector<Rat>> mat;
  Poly<Rat> xi = Poly<Rat>::constant(Rat(1)), x({Rat(0), Rat(1)});
  for (std::size_t i = 0; i < d; ++i) {
    NFElem prod = a * make(a.field(), xi);
    mat.push_back(prod.coords());
    xi = xi * x;
  }
  return mat;
}

Rat field_trace(const NFElem& a) {
  auto m = multiplication_matrix(a);
  Rat t(0);
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace ikeda
