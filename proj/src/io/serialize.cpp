#include "ikeda/serialize.hpp"

#include <sstream>

#include "ikeda/errors.hpp"

namespace ikeda {

namespace {

FieldPtr field_from_string(const std::string& s) {
  if (s.empty() || s == "x") return nullptr;
  return NumberField::create(parse_rational_poly(s, "x"));
}

std::string field_string(const FieldPtr& f) { return f ? f->to_string() : ""; }

FieldPtr table_field(const FourierTable& t) {
  for (const auto& [T, c] : t.entries) {
    if (c.c0().field()) return c.c0().field();
    if (c.c1().field()) return c.c1().field();
  }
  return nullptr;
}

QuadRelPtr<NFElem> table_relation(const FourierTable& t) {
  for (const auto& [T, c] : t.entries)
    if (c.relation() && !is_zero(c.c1())) return c.relation();
  return nullptr;
}

std::string verdict(const CongruenceEntry& e, i64 p) {
  if (e.norm == 0) return "ok";
  return valuation(e.norm, static_cast<unsigned long>(p)) >= 1 ? "ok" : "fail";
}

std::string norm_valuation(const CongruenceEntry& e, i64 p) {
  if (e.norm == 0) return "inf";
  return std::to_string(valuation(e.norm, static_cast<unsigned long>(p)));
}

}  // namespace

std::string satake_to_string(const SatakeRing& a) {
  if (is_zero(a.c1())) return to_string(a.c0());
  return to_string(a.c0()) + " + " + "(" + to_string(a.c1()) + ")*y";
}

SatakeRing parse_satake(const std::string& s, const FieldPtr& field, const QuadRelPtr<NFElem>& rel) {
  auto pos = s.rfind(")*y");
  if (pos == std::string::npos || pos + 3 != s.size()) return SatakeRing(parse_nfelem(s, field));
  // c0 + (c1)*y: find the opening parenthesis matching the final one.
  int depth = 0;
  std::size_t open = std::string::npos;
  for (std::size_t i = pos + 1; i-- > 0;) {
    if (s[i] == ')') ++depth;
    if (s[i] == '(' && --depth == 0) {
      open = i;
      break;
    }
  }
  if (open == std::string::npos || open < 3 || s.compare(open - 3, 3, " + ") != 0)
    throw InvalidInput("malformed quadratic-ring element: " + s);
  if (!rel) throw InvalidInput("quadratic-ring element without a relation: " + s);
  NFElem c0 = parse_nfelem(s.substr(0, open - 3), field);
  NFElem c1 = parse_nfelem(s.substr(open + 1, pos - open - 1), field);
  return SatakeRing(rel, c0, c1);
}

json eigenform_to_json(const EigenformData& f) {
  json j;
  j["weight"] = f.weight;
  j["field"] = field_string(f.hecke_field);
  json c = json::array();
  for (std::size_t m = 1; m < f.precision(); ++m) c.push_back(json::array({m, to_string(f.a(m))}));
  j["coeffs"] = c;
  return j;
}

EigenformData eigenform_from_json(const json& j) {
  EigenformData f;
  f.weight = j.at("weight").get<int>();
  f.hecke_field = field_from_string(j.at("field").get<std::string>());
  const auto& c = j.at("coeffs");
  f.qexp = Series<NFElem>(c.size() + 1);
  for (const auto& e : c) f.qexp[e.at(0).get<std::size_t>()] = parse_nfelem(e.at(1).get<std::string>(), f.hecke_field);
  return f;
}

json halfint_to_json(const HalfIntegralForm& h) {
  json j;
  j["k"] = h.k;
  j["weight"] = std::to_string(2 * h.k + 1) + "/2";
  j["field"] = field_string(h.field);
  j["precision"] = h.precision();
  j["plus_certified"] = h.plus_certified;
  json c = json::array();
  for (std::size_t m = 0; m < h.precision(); ++m)
    if (!h.c(m).is_zero()) c.push_back(json::array({m, to_string(h.c(m))}));
  j["coeffs"] = c;
  return j;
}

HalfIntegralForm halfint_from_json(const json& j) {
  HalfIntegralForm h;
  h.k = j.at("k").get<int>();
  h.field = field_from_string(j.at("field").get<std::string>());
  h.plus_certified = j.at("plus_certified").get<bool>();
  h.qexp = Series<NFElem>(j.at("precision").get<std::size_t>());
  for (const auto& e : j.at("coeffs")) h.qexp[e.at(0).get<std::size_t>()] = parse_nfelem(e.at(1).get<std::string>(), h.field);
  return h;
}

std::string matrix_tuple_string(const HalfIntMatrix& T) {
  std::ostringstream o;
  o << "[";
  auto t = T.tuple();
  for (std::size_t i = 0; i < t.size(); ++i) o << (i ? "," : "") << t[i];
  o << "]";
  return o.str();
}

json table_to_json(const FourierTable& t) {
  json j;
  j["genus"] = t.genus;
  j["weight"] = t.weight;
  j["level"] = t.level;
  j["field"] = field_string(table_field(t));
  if (auto rel = table_relation(t)) j["relation"] = {{"e1", to_string(rel->e1)}, {"e2", to_string(rel->e2)}};
  json es = json::array();
  for (const auto& [T, c] : t.entries) {
    json e;
    e["matrix"] = T.tuple();
    e["disc"] = T.disc();
    e["coeff"] = satake_to_string(c);
    es.push_back(e);
  }
  j["entries"] = es;
  return j;
}

FourierTable table_from_json(const json& j) {
  FourierTable t;
  t.genus = j.at("genus").get<int>();
  t.weight = j.at("weight").get<int>();
  t.level = j.at("level").get<i64>();
  FieldPtr field = field_from_string(j.at("field").get<std::string>());
  QuadRelPtr<NFElem> rel;
  if (j.contains("relation"))
    rel = make_quad_relation<NFElem>(parse_nfelem(j["relation"].at("e1").get<std::string>(), field),
                                     parse_nfelem(j["relation"].at("e2").get<std::string>(), field));
  for (const auto& e : j.at("entries")) {
    HalfIntMatrix T = HalfIntMatrix::from_tuple(t.genus, e.at("matrix").get<std::vector<i64>>());
    if (T.disc() != e.at("disc").get<i64>()) throw InvalidInput("disc does not match matrix " + T.to_string());
    t.entries.emplace_back(T, parse_satake(e.at("coeff").get<std::string>(), field, rel));
  }
  return t;
}

json siegel_series_to_json(const HalfIntMatrix& T, const SiegelSeriesPoly& F) {
  json j;
  j["matrix"] = T.tuple();
  j["disc"] = T.disc();
  j["prime"] = F.l;
  j["v"] = F.v;
  json c = json::array();
  for (const auto& x : F.poly.coeffs()) c.push_back(to_string(x));
  j["coeffs"] = c;
  j["polynomial"] = F.to_string();
  return j;
}

json congruence_to_json(const CongruenceReport& r) {
  json j;
  j["prime"] = r.p;
  j["precision"] = r.precision;
  json ids = json::array();
  for (const auto& id : r.ideals) ids.push_back(id.field ? id.to_string() : "(" + std::to_string(r.p) + ")");
  j["ideals"] = ids;
  json es = json::array();
  for (const auto& e : r.entries) {
    json x;
    x["matrix"] = e.T.tuple();
    x["disc"] = e.T.disc();
    x["difference"] = to_string(e.difference);
    x["norm"] = to_string(e.norm);
    x["valuation"] = norm_valuation(e, r.p);
    json iv = json::array();
    for (const auto& v : e.valuation) iv.push_back(v ? v->to_string() : "inf");
    x["ideal_valuations"] = iv;
    x["verdict"] = verdict(e, r.p);
    es.push_back(x);
  }
  j["entries"] = es;
  json holds = json::array();
  for (std::size_t i = 0; i < r.ideals.size(); ++i) holds.push_back(r.holds_at(i));
  j["holds_at_ideal"] = holds;
  j["verdict"] = r.norms_divisible() ? "all >= 1" : "violations";
  json viol = json::array();
  for (const auto& T : r.violations()) viol.push_back(T.tuple());
  j["violations"] = viol;
  return j;
}

std::string congruence_to_csv(const CongruenceReport& r) {
  std::ostringstream o;
  o << "disc,matrix,valuation,verdict\n";
  for (const auto& e : r.entries)
    o << e.T.disc() << ",\"" << matrix_tuple_string(e.T) << "\"," << norm_valuation(e, r.p) << "," << verdict(e, r.p) << "\n";
  return o.str();
}

json lemma36_to_json(const Lemma36Report& r) {
  json j;
  j["variant"] = r.variant;
  j["D"] = r.D;
  j["p"] = r.p;
  j["bijective"] = r.bijective;
  j["gamma0_classes"] = r.gamma0_classes;
  j["sl2_classes"] = r.sl2_classes;
  json ps = json::array();
  for (const auto& [a, b] : r.pairs) ps.push_back(json::array({a.to_string(), b.to_string()}));
  j["pairs"] = ps;
  return j;
}

}  // namespace ikeda
