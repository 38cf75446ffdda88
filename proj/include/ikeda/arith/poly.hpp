#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/errors.hpp"

namespace ikeda {

// Dense univariate polynomial, coefficients ascending, trailing zeros trimmed.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
  static Poly monomial(const R& a, std::size_t deg) {
    std::vector<R> c(deg + 1, R(0));
    c[deg] = a;
    return Poly(std::move(c));
  }
  // Y - r
  static Poly linear_root(const R& r) { return Poly(std::vector<R>{-r, R(1)}); }

  // std::nullopt stands for the degree of the zero polynomial (-infinity).
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    std::vector<R> c = c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::elem_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> c = a.c_;
    for (auto& x : c) x = s * x;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  // Horner evaluation in any ring S that accepts R scalars.
  template <class S>
  S eval(const S& x) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> c(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = R(static_cast<long>(i)) * c_[i];
    return Poly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::elem_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

// Division by a monic divisor; works over any commutative ring.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod_monic(const Poly<R>& a, const Poly<R>& b) {
  auto db = b.degree();
  if (!db) throw InvalidInput("division by zero polynomial");
  if (!(b.leading() == R(1))) throw InvalidInput("divisor is not monic");
  std::vector<R> r = a.coeffs();
  if (r.size() <= *db) return {Poly<R>(), a};
  std::vector<R> q(r.size() - *db, R(0));
  for (std::size_t i = r.size(); i-- > *db;) {
    R t = r[i];
    if (is_zero(t)) continue;
    q[i - *db] = t;
    for (std::size_t j = 0; j <= *db; ++j) r[i - *db + j] = r[i - *db + j] - t * b.coeff(j);
  }
  r.resize(*db);
  return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

// Division over a field (R must provide inverse()).
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw InvalidInput("division by zero polynomial");
  R li = inverse(b.leading());
  auto [q, r] = divmod_monic(a, li * b);
  return {li * q, r};
}

// Monic gcd over a field.
template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return inverse(a.leading()) * a;
}

// Renders with var and "*" products, e.g. "1 - 1452*X + 161051*X^2" (ascending)
// or "x^2 - 39960*x - 2235350016" (descending). Coefficients must render through
// to_string(R) as a signed integer or rational.
template <class R>
std::string poly_to_string(const Poly<R>& p, const std::string& var, bool ascending) {
  if (p.is_zero()) return "0";
  std::string out;
  auto emit = [&](std::size_t i) {
    const R& c = p.coeffs()[i];
    if (is_zero(c)) return;
    std::string s = to_string(c);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) out += s;
    else if (s == "1") out += mono;
    else out += s + "*" + mono;
  };
  if (ascending)
    for (std::size_t i = 0; i < p.size(); ++i) emit(i);
  else
    for (std::size_t i = p.size(); i-- > 0;) emit(i);
  return out;
}

// Parses the format produced by poly_to_string over the rationals.
Poly<Rat> parse_rational_poly(const std::string& s, const std::string& var);

}  // namespace ikeda
