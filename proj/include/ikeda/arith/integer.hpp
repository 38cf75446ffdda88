#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ikeda {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

Int ipow(const Int& base, unsigned long e);
Int ipow(long base, unsigned long e);
// base^e for any integer e; base must be nonzero when e < 0.
Rat rpow(const Rat& base, long e);

Rat make_rat(const Int& num, const Int& den);

// Exponent of p in n; n must be nonzero.
int valuation(const Int& n, unsigned long p);
int valuation(const Rat& r, unsigned long p);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

Rat parse_rational(const std::string& s);

inline Rat inverse(const Rat& a) { return 1 / a; }

namespace detail {
// Lets class templates with an is_zero() member reach the free overloads via ADL.
template <class T>
bool elem_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

}  // namespace ikeda
