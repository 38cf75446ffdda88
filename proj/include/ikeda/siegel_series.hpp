#pragma once

#include <string>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/poly.hpp"
#include "ikeda/quadforms.hpp"

namespace ikeda {

// F_l(T; X): integer polynomial with constant term 1 and degree 2 v_l(f_T).
struct SiegelSeriesPoly {
  i64 l = 0;
  int genus = 0;
  int v = 0;
  Poly<Int> poly;

  std::string to_string() const { return poly_to_string(poly, "X", true); }
};

// Closed form at genus 2, all valuations.
SiegelSeriesPoly kaufhold_genus2(const HalfIntMatrix& T, i64 l);

// #{[v] in P^{g-1}(F_l) : v^T T v = 0 mod l}.
i64 quadric_points(const HalfIntMatrix& T, i64 l);

// v_l(f_T) = 1 via the rank-one stratum: F = 1 + c1 X + l^{2n+1} X^2 with
// c1 = l N0 - (l^{2n} - 1)/(l - 1) + 1 - (d_T/l) l^n. Works at genus 2 and 4.
SiegelSeriesPoly rank_one_v1(const HalfIntMatrix& T, i64 l);
// Genus 4 entry point of the above.
SiegelSeriesPoly genus4_v1(const HalfIntMatrix& T, i64 l);

// Dispatch: v = 0 -> 1, genus 2 -> closed form, genus 4 with v = 1 -> rank one;
// genus 4 with v >= 2 raises Unsupported.
SiegelSeriesPoly siegel_series(const HalfIntMatrix& T, i64 l);

// F(p^2 T) - (p^2 X + p^3 X^2) F(pT) + p^5 X^3 F(T) == 1 - (d/p) p X
bool telescope_identity(const Poly<Int>& F0, const Poly<Int>& F1, const Poly<Int>& F2, i64 d, i64 p);
bool telescope_check(const HalfIntMatrix& T, i64 p);

// F(0) = 1, deg F = 2v and coeff_{2v-j} = l^{(2n+1)(v-j)} coeff_j.
bool functional_eq_check(const SiegelSeriesPoly& F);

// F(X) (1 - X) prod_{i=1..n} (1 - l^{2i} X^2) / (1 - (d/l) l^n X), coefficients of X^0..X^{order-1}.
std::vector<Rat> bl_assemble(const SiegelSeriesPoly& F, i64 d, std::size_t order);

}  // namespace ikeda
