#include "ikeda/congruence.hpp"

#include "ikeda/errors.hpp"

namespace ikeda {

namespace {

FieldPtr larger_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || a->degree() == 1) return b;
  if (!b || b->degree() == 1) return a;
  if (a == b || a->same_as(*b)) return a;
  throw Unsupported("no embedding between " + a->to_string() + " and " + b->to_string());
}

FieldPtr field_of(const FourierTable& t) {
  FieldPtr f;
  for (const auto& e : t.entries) f = larger_field(f, e.second.c0().field());
  return f;
}

NFElem entry_value(const SatakeRing& x, const HalfIntMatrix& T) {
  auto w = x.symmetric_witness();
  if (!w) throw InvalidInput("table entry at " + T.to_string() + " is not a Hecke field element");
  return *w;
}

bool norm_divisible(const Rat& norm, i64 p) {
  if (norm == 0) return true;
  return valuation(norm, static_cast<unsigned long>(p)) >= 1;
}

}  // namespace

bool CongruenceReport::norms_divisible() const {
  for (const auto& e : entries)
    if (!norm_divisible(e.norm, p)) return false;
  return true;
}

bool CongruenceReport::holds_at(std::size_t i) const {
  for (const auto& e : entries) {
    const auto& v = e.valuation.at(i);
    if (v && v->value < 1) return false;
  }
  return true;
}

std::vector<HalfIntMatrix> CongruenceReport::violations() const {
  std::vector<HalfIntMatrix> out;
  for (const auto& e : entries)
    if (!norm_divisible(e.norm, p)) out.push_back(e.T);
  return out;
}

CongruenceReport congruence_scan(const FourierTable& a, const FourierTable& b, i64 p, int precision) {
  if (a.entries.size() != b.entries.size()) throw InvalidInput("class sets differ in size");
  FieldPtr K = larger_field(field_of(a), field_of(b));
  CongruenceReport r;
  r.p = p;
  r.precision = precision;
  if (K) {
    r.ideals = split_prime(K, p);
  } else {
    r.ideals.push_back(PrimeIdealData{p, nullptr, {}});
  }
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const HalfIntMatrix& T = a.entries[i].first;
    if (!(T == b.entries[i].first)) throw InvalidInput("class mismatch at " + T.to_string());
    NFElem d = entry_value(a.entries[i].second, T) - entry_value(b.entries[i].second, T);
    if (K) d = d.in_field(K);
    CongruenceEntry e{T, d, field_norm(d), {}};
    for (const auto& ideal : r.ideals) {
      if (d.is_zero()) {
        e.valuation.emplace_back(std::nullopt);
      } else if (!K) {
        e.valuation.emplace_back(PadicValuation{valuation(d.to_rational(), static_cast<unsigned long>(p)), false});
      } else {
        e.valuation.emplace_back(padic_valuation(d, ideal, precision));
      }
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

EllipticCongruence elliptic_congruence_scan(const EigenformData& f, const EigenformData& g, i64 p, std::size_t bound,
                                            int precision) {
  if (bound >= f.precision() || bound >= g.precision()) throw InvalidInput("scan bound beyond the q-expansion precision");
  FieldPtr K = larger_field(f.hecke_field, g.hecke_field);
  EllipticCongruence out;
  out.p = p;
  out.bound = bound;
  out.ideals = split_prime(K, p);
  out.min_valuation.assign(out.ideals.size(), precision);
  for (std::size_t m = 1; m <= bound; ++m) {
    NFElem d = (f.a(m) - g.a(m)).in_field(K);
    if (d.is_zero()) continue;
    for (std::size_t i = 0; i < out.ideals.size(); ++i) {
      auto v = padic_valuation(d, out.ideals[i], precision);
      if (!v.lower_bound && v.value < out.min_valuation[i]) out.min_valuation[i] = v.value;
    }
  }
  return out;
}

}  // namespace ikeda
