#include "borelhilb/io.hpp"
#include "borelhilb/error.hpp"

#include <cctype>

namespace borel {

MonomialIdeal parse_ideal(const std::string& text, int n) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("ideal must be enclosed in parentheses", 0);
  s = s.substr(1, s.size() - 2);
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos)
      comma = s.size();
    if (comma == start)
      throw ParseError("empty generator", start + 1);
    gens.push_back(parse_monomial(s.substr(start, comma - start), n));
    start = comma + 1;
    if (comma + 1 == s.size())
      throw ParseError("trailing comma", comma + 1);
  }
  return MonomialIdeal(n, std::move(gens));
}

json ideal_to_json(const MonomialIdeal& I) {
  json exps = json::array();
  for (const auto& g : I.gens())
    exps.push_back(std::vector<int>(g.exps().begin(), g.exps().end()));
  return {{"n", I.ambient()}, {"exps", exps}, {"text", I.to_string()}};
}

MonomialIdeal ideal_from_json(const json& j) {
  if (!j.is_object())
    throw ContractError("ideal JSON must be an object");
  int n = -1;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 0)
      throw ContractError("ideal JSON: \"n\" must be a nonnegative integer");
    n = j["n"].get<int>();
  }
  std::vector<Monomial> gens;
  if (j.contains("exps")) {
    if (!j["exps"].is_array())
      throw ContractError("ideal JSON: \"exps\" must be an array");
    for (const auto& e : j["exps"]) {
      if (!e.is_array() || e.empty())
        throw ContractError("ideal JSON: each exponent vector must be a nonempty array");
      std::vector<int> v;
      for (const auto& x : e) {
        if (!x.is_number_integer() || x.get<int>() < 0)
          throw ContractError("ideal JSON: exponents must be nonnegative integers");
        v.push_back(x.get<int>());
      }
      if (n < 0)
        n = static_cast<int>(v.size()) - 1;
      if (static_cast<int>(v.size()) != n + 1)
        throw ContractError("ideal JSON: exponent vector length must be n+1");
      gens.emplace_back(std::move(v));
    }
    if (n < 0)
      throw ContractError("ideal JSON: \"n\" is required for an empty generator list");
    return MonomialIdeal(n, std::move(gens));
  }
  if (n < 0)
    throw ContractError("ideal JSON: \"n\" is required with \"gens\"");
  if (!j.contains("gens"))
    throw ContractError("ideal JSON needs \"exps\" or \"gens\"");
  const json& g = j["gens"];
  if (g.is_string())
    return parse_ideal(g.get<std::string>(), n);
  if (!g.is_array())
    throw ContractError("ideal JSON: \"gens\" must be an array or a string");
  for (const auto& t : g) {
    if (!t.is_string())
      throw ContractError("ideal JSON: generators must be strings");
    gens.push_back(parse_monomial(t.get<std::string>(), n));
  }
  return MonomialIdeal(n, std::move(gens));
}

json enumeration_to_json(const EnumerationResult& r, bool with_stats) {
  json ideals = json::array();
  for (const auto& I : r.ideals)
    ideals.push_back(ideal_to_json(I));
  json out = {{"poly", r.poly.to_string()}, {"n", r.n}, {"count", r.ideals.size()}, {"ideals", ideals}};
  if (with_stats) {
    json st = json::array();
    for (const auto& s : r.stats)
      st.push_back({{"level", s.level},
                    {"inputs", s.inputs},
                    {"skipped", s.skipped},
                    {"expansions", s.expansions},
                    {"outputs", s.outputs}});
    out["stats"] = st;
  }
  return out;
}

json family_to_json(const FamilyTag& tag) {
  json j = {{"kind", to_string(tag.kind)}, {"text", tag.to_string()}};
  if (tag.is_two()) {
    j["d"] = tag.d;
    j["a_d"] = tag.a_d;
    if (tag.kind == FamilyKind::TwoPoly2)
      j["r"] = tag.r;
  }
  if (tag.kind == FamilyKind::ThreeKnown)
    j["label"] = tag.label;
  return j;
}

json general_point_to_json(const GeneralPoint& g) {
  json pieces = json::array();
  for (const auto& p : g.pieces)
    pieces.push_back({{"plane", p.plane}, {"degree", p.degree}});
  return {{"pieces", pieces}, {"isolated_points", g.isolated_points}, {"text", g.to_string()}};
}

json claim_to_json(const Claim& c) { return {{"text", c.text}, {"source", c.source}, {"guard", c.guard}}; }

json tangent_to_json(const TangentReport& t) {
  return {{"ideal", ideal_to_json(t.ideal)},
          {"dim_hom", t.dim_hom},
          {"dim_trivial", t.dim_trivial},
          {"dim_nontrivial", t.dim_nontrivial},
          {"comparison", to_string(t.comparison)},
          {"modular_rank_agrees", t.modular_rank_agrees},
          {"trivial_in_hom", t.trivial_in_hom}};
}

json scheme_report_to_json(const SchemeReport& r) {
  json ideals = json::array();
  for (const auto& I : r.ideals)
    ideals.push_back(ideal_to_json(I));
  json out = {{"poly", r.poly.to_string()},
              {"n", r.n},
              {"borel_count", r.borel_count},
              {"family", family_to_json(r.family)},
              {"ideals", ideals}};
  if (r.pair)
    out["distinguished"] = {{"lex", ideal_to_json(r.pair->lex)}, {"exp", ideal_to_json(r.pair->exp)}};
  out["general_point"] = r.general_point ? general_point_to_json(*r.general_point) : json(nullptr);
  json claims = json::array();
  for (const auto& c : r.claims)
    claims.push_back(claim_to_json(c));
  out["claims"] = claims;
  json tangent = json::array();
  for (const auto& t : r.tangent)
    tangent.push_back(tangent_to_json(t));
  out["tangent"] = tangent;
  return out;
}

} // namespace borel
