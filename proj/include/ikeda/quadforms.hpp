#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/ntheory.hpp"

namespace ikeda {

// ---------------------------------------------------------------------------
// Half-integral symmetric matrices of genus 2 or 4, stored as the even Gram
// matrix 2T. Tuple order: genus 2 [t11,t22,2t12]; genus 4
// [t11,t22,t33,t44,2t12,2t13,2t23,2t14,2t24,2t34].

struct HalfIntMatrix {
  int genus = 0;
  std::vector<i64> gram;  // 2T, row-major

  static HalfIntMatrix from_tuple(int genus, const std::vector<i64>& t);
  static HalfIntMatrix from_gram(int genus, std::vector<i64> gram);
  std::vector<i64> tuple() const;

  i64 m(int i, int j) const { return gram[static_cast<std::size_t>(i * genus + j)]; }
  i64 t(int i) const { return m(i, i) / 2; }
  i64 det2T() const;
  // (-1)^n det(2T) for genus 2n
  i64 disc() const;
  bool positive_definite() const;
  HalfIntMatrix scaled(i64 s) const;
  std::string to_string() const;

  friend bool operator==(const HalfIntMatrix& a, const HalfIntMatrix& b) {
    return a.genus == b.genus && a.gram == b.gram;
  }
  friend bool operator<(const HalfIntMatrix& a, const HalfIntMatrix& b) {
    return a.tuple() < b.tuple();
  }
};

HalfIntMatrix parse_half_int_matrix(const std::string& s);

struct DiscriminantData {
  i64 D = 0;  // (-1)^n det(2T)
  i64 d = 0;  // fundamental part
  i64 f = 0;  // D = d f^2
  std::map<i64, int> f_valuations;
};

DiscriminantData discriminant_data(const HalfIntMatrix& T);
// Largest m with T/m half-integral.
i64 content(const HalfIntMatrix& T);

// Integer matrix U (genus x genus, row-major); returns U^T T U.
HalfIntMatrix transform(const HalfIntMatrix& T, const std::vector<i64>& U);

struct IsometryResult {
  bool isometric = false;
  std::vector<i64> witness;  // U with U^T A U = B
};
IsometryResult isometric(const HalfIntMatrix& a, const HalfIntMatrix& b);

// Integer vectors v with v^T (2T) v <= bound (v and -v both listed, 0 excluded).
std::vector<std::vector<i64>> short_vectors(const HalfIntMatrix& T, i64 bound);

// One representative per GL-class of positive definite T with disc() == D.
// Genus 2 needs D < 0, genus 4 needs D > 0.
std::vector<HalfIntMatrix> enumerate_classes(int genus, i64 D, i64 bound = 500);
// All classes with 0 < |disc| <= max_abs_disc, keyed by disc.
std::map<i64, std::vector<HalfIntMatrix>> enumerate_classes_upto(int genus, i64 max_abs_disc, i64 bound = 500);

// ---------------------------------------------------------------------------
// Binary quadratic forms [a,b,c] = a x^2 + b xy + c y^2.

using Mat2 = std::array<Int, 4>;  // [[m0, m1], [m2, m3]]

Mat2 mat2_identity();
Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Mat2 mat2_inverse(const Mat2& x);  // SL2 only

struct BinaryQF {
  i64 a = 0, b = 0, c = 0;

  i64 disc() const { return b * b - 4 * a * c; }
  i64 content() const;
  Int eval(const Int& x, const Int& y) const { return Int(a) * x * x + Int(b) * x * y + Int(c) * y * y; }
  // (Q o M)(v) = Q(M v)
  BinaryQF act(const Mat2& m) const;
  std::string to_string() const;

  friend bool operator==(const BinaryQF& x, const BinaryQF& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
  friend bool operator<(const BinaryQF& x, const BinaryQF& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  }
};

BinaryQF parse_binary_qf(const std::string& s);

struct Reduction {
  BinaryQF form;  // reduced
  Mat2 transform;  // form = Q o transform
};

// Definite (positive) forms: the unique reduced form; indefinite: a reduced form on the cycle.
Reduction reduce_form(const BinaryQF& q);
// SL2(Z)-equivalence: g with q o g = r.
std::optional<Mat2> sl2_equivalence(const BinaryQF& q, const BinaryQF& r);
std::optional<Mat2> gamma0_equivalence(const BinaryQF& q, const BinaryQF& r, i64 p);
// Generators of the SL2(Z)-stabilizer of q modulo -1 (indefinite: the fundamental automorph).
std::vector<Mat2> stabilizer(const BinaryQF& q);

enum class FormGroup { SL2, Gamma0 };

// Class set of L(D) (all forms of discriminant D; positive definite when D < 0)
// or, for the Gamma_0(p) group, of L_p(D) = {a = 0 mod p}. With p_primitive only
// forms whose content is prime to p are kept.
std::vector<BinaryQF> binary_class_set(i64 D, FormGroup group = FormGroup::SL2, i64 p = 0, bool p_primitive = false);

// Generalized genus character chi_d(Q); throws Inconclusive if no represented r
// prime to d exists with |x|, |y| <= search_bound.
int genus_character(const BinaryQF& q, i64 d, i64 search_bound = 200);

struct Lemma36Step {
  BinaryQF form;
  Mat2 transform;  // form = input o transform
};
Lemma36Step lemma36_i(const BinaryQF& q, i64 p);
Lemma36Step lemma36_ii(const BinaryQF& q, i64 p);

struct Lemma36Report {
  std::string variant;
  i64 D = 0, p = 0;
  bool bijective = false;
  std::size_t gamma0_classes = 0, sl2_classes = 0;
  std::vector<std::pair<BinaryQF, BinaryQF>> pairs;  // (L_p(D)/Gamma0(p) rep, image class rep)
};
// (iii): [a,b,c] -> [a,b,c]; (iv): [a,b,c] -> [a/p,b,pc]. Only p-primitive forms.
Lemma36Report lemma36_iii(i64 D, i64 p);
Lemma36Report lemma36_iv(i64 D, i64 p);

}  // namespace ikeda
