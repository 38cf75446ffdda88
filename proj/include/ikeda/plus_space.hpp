#pragma once

#include <cstddef>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/ntheory.hpp"
#include "ikeda/arith/number_field.hpp"
#include "ikeda/arith/series.hpp"
#include "ikeda/modforms.hpp"

namespace ikeda {

// A form of weight k + 1/2 on Gamma_0(4); qexp is over the Hecke field of the
// associated integral-weight form (field-less NFElem for rational forms).
struct HalfIntegralForm {
  int k = 0;
  FieldPtr field;
  Series<NFElem> qexp;
  bool plus_certified = false;

  const NFElem& c(std::size_t m) const { return qexp[m]; }
  std::size_t precision() const { return qexp.precision(); }
};

Series<Int> theta(std::size_t precision);
// sum over odd n of sigma_1(n) q^n
Series<Int> weight2_F(std::size_t precision);

// Plus condition: c_m may be nonzero only when (-1)^k m = 0, 1 mod 4.
bool plus_index_allowed(int k, std::size_t m);

std::size_t default_plus_certify_bound(int k);

// Echelonized basis of the plus space, leading exponents ascending.
std::vector<HalfIntegralForm> plus_space_basis(int k, std::size_t precision, std::size_t certify_bound = 0);

// L(1-k, chi_d) = -B_{k,chi_d}/k for a fundamental discriminant d.
Rat dirichlet_L_neg(int k, i64 d);

HalfIntegralForm cohen_eisenstein(int k, std::size_t precision);

// Cusp form h in the plus space matching f under the Shimura relation, scaled so
// that its first nonzero coefficient is 1.
HalfIntegralForm shimura_eigen_lift(const EigenformData& f, std::size_t precision);

}  // namespace ikeda
