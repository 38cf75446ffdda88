#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/poly.hpp"

namespace ikeda {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[x]/(m(x)) with m monic and certified irreducible over Q.
class NumberField {
 public:
  // Throws InvalidInput if m is not monic, Unsupported if irreducibility cannot be certified.
  static FieldPtr create(const Poly<Rat>& minimal_polynomial);

  const Poly<Rat>& minimal_polynomial() const { return m_; }
  int degree() const { return static_cast<int>(*m_.degree()); }
  std::string to_string() const { return poly_to_string(m_, "x", false); }
  bool same_as(const NumberField& o) const { return m_ == o.m_; }

 private:
  explicit NumberField(Poly<Rat> m) : m_(std::move(m)) {}
  Poly<Rat> m_;
};

// Element of a number field. An element without a field is a rational constant and
// combines with elements of any field; mixing two different fields throws.
class NFElem {
 public:
  NFElem() : c_{Rat(0)} {}
  NFElem(int a) : c_{Rat(a)} {}
  NFElem(long a) : c_{Rat(a)} {}
  NFElem(const Int& a) : c_{Rat(a)} {}
  NFElem(const Rat& a) : c_{a} {}
  NFElem(FieldPtr field, std::vector<Rat> coords);

  static NFElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  // Coordinates on 1, x, ..., x^{d-1}; length 1 for field-less constants.
  const std::vector<Rat>& coords() const { return c_; }
  Rat coord(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  bool is_rational() const;
  Rat to_rational() const;  // throws unless is_rational()
  bool is_zero() const;

  // Same element regarded in another field (only rational elements move between fields).
  NFElem in_field(const FieldPtr& target) const;

  Poly<Rat> representative() const { return Poly<Rat>(c_); }

  NFElem operator-() const;
  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend bool operator==(const NFElem& a, const NFElem& b);
  NFElem& operator+=(const NFElem& b) { return *this = *this + b; }
  NFElem& operator-=(const NFElem& b) { return *this = *this - b; }
  NFElem& operator*=(const NFElem& b) { return *this = *this * b; }

 private:
  FieldPtr field_;
  std::vector<Rat> c_;
};

inline bool is_zero(const NFElem& a) { return a.is_zero(); }
NFElem inverse(const NFElem& a);
// Rendered as a polynomial in x, highest degree first, e.g. "432*x + 50220".
std::string to_string(const NFElem& a);
NFElem parse_nfelem(const std::string& s, const FieldPtr& field);

// Resultant of two polynomials over Q via the Sylvester determinant.
Rat resultant(const Poly<Rat>& f, const Poly<Rat>& g);
// Product of the conjugates: Res(m, a) for monic m.
Rat field_norm(const NFElem& a);
Rat field_trace(const NFElem& a);
// Matrix of multiplication by a on the basis 1, x, ..., x^{d-1} (row i = a * x^i).
std::vector<std::vector<Rat>> multiplication_matrix(const NFElem& a);

}  // namespace ikeda
