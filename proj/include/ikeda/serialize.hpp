#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ikeda/congruence.hpp"
#include "ikeda/lifting.hpp"
#include "ikeda/modforms.hpp"
#include "ikeda/plus_space.hpp"
#include "ikeda/quadforms.hpp"
#include "ikeda/siegel_series.hpp"

namespace ikeda {

using json = nlohmann::ordered_json;

// "c0 + c1*y" strings; a symmetric element is written as its Hecke field value.
std::string satake_to_string(const SatakeRing& a);
SatakeRing parse_satake(const std::string& s, const FieldPtr& field, const QuadRelPtr<NFElem>& rel);

json eigenform_to_json(const EigenformData& f);
EigenformData eigenform_from_json(const json& j);

json halfint_to_json(const HalfIntegralForm& h);
HalfIntegralForm halfint_from_json(const json& j);

// {"genus","weight","level","field","relation"?,"entries":[{"matrix","disc","coeff"}]}
json table_to_json(const FourierTable& t);
FourierTable table_from_json(const json& j);

json siegel_series_to_json(const HalfIntMatrix& T, const SiegelSeriesPoly& F);
json congruence_to_json(const CongruenceReport& r);
// disc,matrix,valuation,verdict; valuation is v_p of the norm ("inf" for a zero difference)
std::string congruence_to_csv(const CongruenceReport& r);
json lemma36_to_json(const Lemma36Report& r);

std::string matrix_tuple_string(const HalfIntMatrix& T);

}  // namespace ikeda
