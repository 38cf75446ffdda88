#pragma once

#include <cstddef>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/number_field.hpp"
#include "ikeda/arith/poly.hpp"
#include "ikeda/arith/quad_ext.hpp"
#include "ikeda/arith/series.hpp"

namespace ikeda {

// B_n with B_1 = -1/2; memoized.
Rat bernoulli(unsigned n);
Poly<Rat> bernoulli_polynomial(unsigned n);

// -B_{2k}/(4k) + sum sigma_{2k-1}(m) q^m.
Series<Rat> eisenstein_series(int weight, std::size_t precision);
// 1 + c sum sigma_{w-1}(m) q^m with constant term 1 (E4, E6, ...).
Series<Int> eisenstein_normalized(int weight, std::size_t precision);
Series<Int> delta(std::size_t precision);

int cusp_form_dimension(int weight);
// E4^a E6^b Delta^c with 4a + 6b + 12c = weight, c = 1..dim.
std::vector<Series<Int>> cusp_basis(int weight, std::size_t precision);

// Level-one T_l: c_m = a_{lm} + l^{w-1} a_{m/l}; output precision floor(N/l).
template <class R>
Series<R> hecke_Tl(const Series<R>& f, int weight, long l) {
  std::size_t n = f.precision() / static_cast<std::size_t>(l);
  Series<R> out(n);
  R lw(ipow(l, static_cast<unsigned long>(weight - 1)));
  for (std::size_t m = 0; m < n; ++m) {
    out[m] = f[m * static_cast<std::size_t>(l)];
    if (m % static_cast<std::size_t>(l) == 0) out[m] = out[m] + lw * f[m / static_cast<std::size_t>(l)];
  }
  return out;
}

struct EigenformData {
  int weight = 0;
  FieldPtr hecke_field;
  Series<NFElem> qexp;
  bool normalized = true;

  const NFElem& a(std::size_t m) const { return qexp[m]; }
  std::size_t precision() const { return qexp.precision(); }
  int k() const { return weight / 2; }
};

// One eigenform per Galois orbit, i.e. per irreducible factor of the T_2
// characteristic polynomial on the cusp space.
std::vector<EigenformData> eigenforms(int weight, std::size_t precision);
// Hecke matrix of T_l on the echelonized cusp basis (rows: images of basis forms).
std::vector<std::vector<Rat>> hecke_matrix(int weight, long l);

// Per prime ideal over p: true when a_p is a unit there.
std::vector<bool> is_ordinary(const EigenformData& f, long p);

using SatakeRing = QuadExt<NFElem>;

struct StabilizedForm {
  EigenformData base;
  long p = 0;
  QuadRelPtr<NFElem> relation;  // y^2 - a_p y + p^{2k-1}, y the alpha slot
  Series<SatakeRing> qexp;

  SatakeRing alpha() const { return SatakeRing::gen(relation); }
  SatakeRing beta() const { return alpha().conjugate(); }
};

QuadRelPtr<NFElem> satake_relation(const EigenformData& f, long p);

StabilizedForm ordinary_stabilize(const EigenformData& f, long p, std::size_t precision);

// E(z) - p^{w-1} E(pz).
Series<Rat> eisenstein_stabilize(int weight, long p, std::size_t precision);

}  // namespace ikeda
