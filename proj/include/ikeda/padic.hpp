#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/number_field.hpp"
#include "ikeda/arith/polymodp.hpp"

namespace ikeda {

// A prime ideal (p, g(x)) of Z[x]/(m(x)) with g an irreducible factor of m mod p.
struct PrimeIdealData {
  long p = 0;
  FieldPtr field;
  fp::PolyFp local_factor;
  int residue_degree() const { return fp::deg(local_factor); }
  std::string to_string() const;
};

// Refuses (Unsupported) when m mod p is not squarefree: ramified or index-divisible p.
std::vector<PrimeIdealData> split_prime(const FieldPtr& field, long p);

// The completion at an ideal, realised as (Z/p^M)[t]/(G(t)) with G the Hensel lift
// of the local factor.
struct LocalEmbedding {
  PrimeIdealData ideal;
  int precision = 0;
  Int modulus;             // p^precision
  std::vector<Int> lifted; // monic G, ascending coefficients in [0, p^precision)
};
using EmbeddingPtr = std::shared_ptr<const LocalEmbedding>;

EmbeddingPtr local_embedding(const PrimeIdealData& ideal, int precision);

// Element of the local ring known modulo p^precision().
class PadicApprox {
 public:
  PadicApprox(EmbeddingPtr emb, std::vector<Int> coeffs, int precision);
  static PadicApprox from_integer(const EmbeddingPtr& emb, const Int& a);

  const EmbeddingPtr& embedding() const { return emb_; }
  int precision() const { return prec_; }
  const std::vector<Int>& coeffs() const { return c_; }
  // std::nullopt when the element vanishes to the known precision.
  std::optional<int> valuation() const;
  bool is_unit() const;
  // Known digits agree with b's up to the smaller precision.
  bool congruent(const PadicApprox& b) const;

  PadicApprox operator-() const;
  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
  PadicApprox inverse() const;  // units only
  // Exact division by p^j, losing j digits.
  PadicApprox divide_by_p_power(int j) const;

 private:
  void normalize();
  EmbeddingPtr emb_;
  std::vector<Int> c_;
  int prec_;
};

// Image of a p-integral field element.
PadicApprox embed(const NFElem& a, const EmbeddingPtr& emb);

struct PadicValuation {
  int value = 0;
  bool lower_bound = false;  // true: the valuation is at least value
  std::string to_string() const;
};
PadicValuation padic_valuation(const NFElem& a, const PrimeIdealData& ideal, int precision);

// Unit root of X^2 - a_p X + p^{weight_exponent} in the completion.
PadicApprox unit_root(const NFElem& a_p, const PrimeIdealData& ideal, int weight_exponent, int precision);

struct FactorReport {
  std::vector<std::pair<Int, int>> factors;  // primes below the trial bound
  Int cofactor;                              // positive, unfactored remainder
  std::string cofactor_tag;                  // "unit", "probable prime" or "composite"
  Int sign;                                  // +1 or -1
  std::string to_string() const;
};
FactorReport factor_report(const Int& n, unsigned long trial_bound = 1000000);

}  // namespace ikeda
