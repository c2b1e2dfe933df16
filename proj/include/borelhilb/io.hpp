#pragma once

#include "borelhilb/classify.hpp"
#include "borelhilb/enumerate.hpp"
#include "borelhilb/monomial.hpp"
#include "borelhilb/tangent.hpp"

#include <json.hpp>

#include <string>

namespace borel {

using json = nlohmann::json;

/// Parses "(x0^2, x0*x1, x1^3)" in k[x0..xn]; "()" is the zero ideal.
MonomialIdeal parse_ideal(const std::string& text, int n);

/// {"n": n, "exps": [[...], ...], "text": "(...)"}.
json ideal_to_json(const MonomialIdeal& I);

/// Accepts {"n", "gens": [text...]} or {"exps": [[...]]} (n optional there),
/// or a bare generator string "(x0, x1^2)" together with "n".
/// Throws ContractError on malformed input.
MonomialIdeal ideal_from_json(const json& j);

json enumeration_to_json(const EnumerationResult& r, bool with_stats);
json family_to_json(const FamilyTag& tag);
json general_point_to_json(const GeneralPoint& g);
json claim_to_json(const Claim& c);
json tangent_to_json(const TangentReport& t);
json scheme_report_to_json(const SchemeReport& r);

} // namespace borel
