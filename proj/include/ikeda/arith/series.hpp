#pragma once

#include <cstddef>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/errors.hpp"

namespace ikeda {

// Truncated q-expansion sum_{m < precision} a_m q^m.
template <class R>
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t precision) : c_(precision, R(0)) {}
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {}

  std::size_t precision() const { return c_.size(); }
  const R& operator[](std::size_t m) const {
    if (m >= c_.size()) throw InvalidInput("coefficient index beyond series precision");
    return c_[m];
  }
  R& operator[](std::size_t m) {
    if (m >= c_.size()) throw InvalidInput("coefficient index beyond series precision");
    return c_[m];
  }
  const std::vector<R>& coeffs() const { return c_; }

  Series truncated(std::size_t n) const {
    if (n >= c_.size()) return *this;
    return Series(std::vector<R>(c_.begin(), c_.begin() + n));
  }

  bool is_zero() const {
    for (const auto& a : c_)
      if (!detail::elem_is_zero(a)) return false;
    return true;
  }

  friend Series operator+(const Series& a, const Series& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    std::vector<R> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.c_[i] + b.c_[i];
    return Series(std::move(c));
  }
  friend Series operator-(const Series& a, const Series& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    std::vector<R> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.c_[i] - b.c_[i];
    return Series(std::move(c));
  }
  friend Series operator*(const Series& a, const Series& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    std::vector<R> c(n, R(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (detail::elem_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (detail::elem_is_zero(b.c_[j])) continue;
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Series(std::move(c));
  }
  friend Series operator*(const R& s, const Series& a) {
    std::vector<R> c(a.precision());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return Series(std::move(c));
  }
  friend bool operator==(const Series& a, const Series& b) {
    if (a.precision() != b.precision()) return false;
    for (std::size_t i = 0; i < a.precision(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  std::vector<R> c_;
};

// q -> q^p: precision unchanged.
template <class R>
Series<R> series_Vp(const Series<R>& a, std::size_t p) {
  Series<R> out(a.precision());
  for (std::size_t m = 0; m * p < a.precision(); ++m) out[m * p] = a[m];
  return out;
}

// Coefficient of q^m becomes a_{pm}; precision floor(N/p).
template <class R>
Series<R> series_Up(const Series<R>& a, std::size_t p) {
  std::size_t n = a.precision() / p;
  Series<R> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = a[m * p];
  return out;
}

// Coefficientwise map into another ring.
template <class S, class R, class F>
Series<S> series_map(const Series<R>& a, F f) {
  std::vector<S> c;
  c.reserve(a.precision());
  for (const auto& x : a.coeffs()) c.push_back(f(x));
  return Series<S>(std::move(c));
}

}  // namespace ikeda
