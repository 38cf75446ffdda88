#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/number_field.hpp"
#include "ikeda/lifting.hpp"
#include "ikeda/modforms.hpp"
#include "ikeda/padic.hpp"

namespace ikeda {

struct CongruenceEntry {
  HalfIntMatrix T;
  NFElem difference;
  Rat norm;                                   // field norm of the difference
  std::vector<std::optional<PadicValuation>> valuation;  // per ideal; nullopt for a zero difference
};

struct CongruenceReport {
  i64 p = 0;
  int precision = 0;
  std::vector<PrimeIdealData> ideals;
  std::vector<CongruenceEntry> entries;

  // v_p(norm) >= 1 (or the difference vanishes) on every entry.
  bool norms_divisible() const;
  // Valuation >= 1 at ideals[i] on every entry.
  bool holds_at(std::size_t i) const;
  // Entries with v_p(norm) < 1.
  std::vector<HalfIntMatrix> violations() const;
};

// Entry-wise comparison of two tables over the same class list. Each entry must
// be conjugation invariant (a Hecke field element); the fields must agree or one
// side must be rational.
CongruenceReport congruence_scan(const FourierTable& a, const FourierTable& b, i64 p, int precision = 30);

struct EllipticCongruence {
  i64 p = 0;
  std::vector<PrimeIdealData> ideals;
  std::vector<int> min_valuation;  // per ideal, over m <= bound (capped at the precision)
  std::size_t bound = 0;
};

// a_m(f) - a_m(g) for 1 <= m <= bound.
EllipticCongruence elliptic_congruence_scan(const EigenformData& f, const EigenformData& g, i64 p, std::size_t bound,
                                            int precision = 30);

}  // namespace ikeda
