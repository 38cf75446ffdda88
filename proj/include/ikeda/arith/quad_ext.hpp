#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ikeda/arith/integer.hpp"
#include "ikeda/errors.hpp"

namespace ikeda {

// Relation y^2 = e1*y - e2, i.e. y is a root of Y^2 - e1*Y + e2.
template <class Base>
struct QuadRelation {
  Base e1;
  Base e2;
};

template <class Base>
using QuadRelPtr = std::shared_ptr<const QuadRelation<Base>>;

template <class Base>
QuadRelPtr<Base> make_quad_relation(Base e1, Base e2) {
  return std::make_shared<const QuadRelation<Base>>(QuadRelation<Base>{std::move(e1), std::move(e2)});
}

// c0 + c1*y in Base[y]/(y^2 - e1*y + e2). Elements without a relation are scalars.
template <class Base>
class QuadExt {
 public:
  QuadExt() : c0_(0), c1_(0) {}
  QuadExt(int a) : c0_(a), c1_(0) {}
  QuadExt(const Base& a) : c0_(a), c1_(0) {}
  QuadExt(const Int& a) : c0_(Base(a)), c1_(0) {}
  QuadExt(QuadRelPtr<Base> rel, Base c0, Base c1)
      : rel_(std::move(rel)), c0_(std::move(c0)), c1_(std::move(c1)) {
    if (!rel_ && !is_zero(c1_)) throw InvalidInput("quadratic element needs a relation");
  }

  static QuadExt gen(const QuadRelPtr<Base>& rel) { return QuadExt(rel, Base(0), Base(1)); }

  const QuadRelPtr<Base>& relation() const { return rel_; }
  const Base& c0() const { return c0_; }
  const Base& c1() const { return c1_; }

  // y -> e1 - y
  QuadExt conjugate() const {
    if (!rel_) return *this;
    return QuadExt(rel_, c0_ + c1_ * rel_->e1, -c1_);
  }
  // Symmetric under y <-> e1 - y exactly when c1 = 0; the witness is then c0.
  std::optional<Base> symmetric_witness() const {
    if (is_zero(c1_)) return c0_;
    return std::nullopt;
  }
  // a * conj(a), lies in Base.
  Base norm() const {
    if (!rel_) return c0_ * c0_;
    return c0_ * c0_ + c0_ * c1_ * rel_->e1 + c1_ * c1_ * rel_->e2;
  }

  QuadExt operator-() const { return QuadExt(rel_, -c0_, -c1_); }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    return QuadExt(common(a, b), a.c0_ + b.c0_, a.c1_ + b.c1_);
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    return QuadExt(common(a, b), a.c0_ - b.c0_, a.c1_ - b.c1_);
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    auto rel = common(a, b);
    if (is_zero(a.c1_) || is_zero(b.c1_))
      return QuadExt(rel, a.c0_ * b.c0_, a.c0_ * b.c1_ + a.c1_ * b.c0_);
    Base t = a.c1_ * b.c1_;
    return QuadExt(rel, a.c0_ * b.c0_ - t * rel->e2, a.c0_ * b.c1_ + a.c1_ * b.c0_ + t * rel->e1);
  }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }
  QuadExt& operator+=(const QuadExt& b) { return *this = *this + b; }
  QuadExt& operator-=(const QuadExt& b) { return *this = *this - b; }
  QuadExt& operator*=(const QuadExt& b) { return *this = *this * b; }

 private:
  static QuadRelPtr<Base> common(const QuadExt& a, const QuadExt& b) {
    if (!a.rel_) return b.rel_;
    if (!b.rel_ || a.rel_ == b.rel_) return a.rel_;
    if (a.rel_->e1 == b.rel_->e1 && a.rel_->e2 == b.rel_->e2) return a.rel_;
    throw InvalidInput("quadratic ring mismatch");
  }

  QuadRelPtr<Base> rel_;
  Base c0_, c1_;
};

template <class Base>
bool is_zero(const QuadExt<Base>& a) {
  return is_zero(a.c0()) && is_zero(a.c1());
}

template <class Base>
QuadExt<Base> conjugate(const QuadExt<Base>& a) {
  return a.conjugate();
}

// Inverse via conj(a)/norm(a); the norm must be invertible in Base.
template <class Base>
QuadExt<Base> inverse(const QuadExt<Base>& a) {
  Base n = a.norm();
  if (is_zero(n)) throw InvalidInput("element of quadratic ring is not invertible");
  Base ni = inverse(n);
  QuadExt<Base> c = a.conjugate();
  return QuadExt<Base>(a.relation(), c.c0() * ni, c.c1() * ni);
}

template <class Base>
std::string to_string(const QuadExt<Base>& a) {
  return "(" + to_string(a.c0()) + ") + (" + to_string(a.c1()) + ")*y";
}

}  // namespace ikeda
