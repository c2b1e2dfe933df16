#include "borelhilb/facts.hpp"
#include "borelhilb/classify.hpp"
#include "borelhilb/enumerate.hpp"
#include "borelhilb/error.hpp"
#include "borelhilb/hilbert.hpp"
#include "borelhilb/io.hpp"
#include "borelhilb/macaulay.hpp"
#include "borelhilb/parse.hpp"
#include "borelhilb/tangent.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace borel {

namespace {

const std::set<std::string> kKinds = {"enumeration", "expansions",     "lex_ideal",   "hilbert_poly",
                                      "polynomial",  "classification", "tangent_dim", "trivial_dim"};

struct Mismatch {
  std::string detail;
};

template <class A, class B> void check(const std::string& what, const A& got, const B& want) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    throw Mismatch{os.str()};
  }
}

void check_text(const std::string& what, const std::string& got, const std::string& want) {
  if (got != want)
    throw Mismatch{what + ": got \"" + got + "\", expected \"" + want + "\""};
}

int n_of(const Fact& f) { return f.input.at("n").get<int>(); }
HilbertPoly poly_of(const Fact& f) { return parse_poly(f.input.at("poly").get<std::string>()); }
MonomialIdeal ideal_of(const Fact& f) { return parse_ideal(f.input.at("ideal").get<std::string>(), n_of(f)); }

std::string render(const std::set<MonomialIdeal, CanonicalLess>& s) {
  std::string out = "{";
  for (const auto& I : s)
    out += (out.size() > 1 ? ", " : "") + I.to_string();
  return out + "}";
}

// Compares an ideal list with the expected "count" and optional "ideals".
void check_ideals(const Fact& f, const std::vector<MonomialIdeal>& got, int n) {
  if (f.expected.contains("count"))
    check("count", got.size(), f.expected["count"].get<std::size_t>());
  if (!f.expected.contains("ideals"))
    return;
  std::set<MonomialIdeal, CanonicalLess> want, have(got.begin(), got.end());
  for (const auto& t : f.expected["ideals"])
    want.insert(parse_ideal(t.get<std::string>(), n));
  if (want != have)
    throw Mismatch{"ideals: got " + render(have) + ", expected " + render(want)};
}

void run_classification(const Fact& f) {
  const HilbertPoly P = poly_of(f);
  const int n = n_of(f);
  const json& e = f.expected;
  SchemeReport r = scheme_report(P, n, false);
  if (e.contains("borel_count"))
    check("borel_count", r.borel_count, e["borel_count"].get<std::size_t>());
  if (e.contains("unique"))
    check("unique", is_unique_borel(P, n), e["unique"].get<bool>());
  if (e.contains("family"))
    check_text("family", to_string(r.family.kind), e["family"].get<std::string>());
  if (e.contains("d"))
    check("d", r.family.d, e["d"].get<int>());
  if (e.contains("r"))
    check("r", r.family.r, e["r"].get<int>());
  if (e.contains("a_d"))
    check("a_d", r.family.a_d, e["a_d"].get<long>());
  if (e.contains("label"))
    check_text("label", r.family.label, e["label"].get<std::string>());
  if (e.contains("general_point")) {
    if (!r.general_point)
      throw Mismatch{"general_point: none computed"};
    check_text("general_point", r.general_point->to_string(), e["general_point"].get<std::string>());
  }
  if (e.contains("lex") || e.contains("exp")) {
    if (!r.pair)
      throw Mismatch{"distinguished pair: none for family " + r.family.to_string()};
    if (e.contains("lex"))
      check("lex", r.pair->lex, parse_ideal(e["lex"].get<std::string>(), n));
    if (e.contains("exp"))
      check("exp", r.pair->exp, parse_ideal(e["exp"].get<std::string>(), n));
  }
  if (e.contains("claim_contains")) {
    for (const auto& want : e["claim_contains"]) {
      const std::string w = want.get<std::string>();
      bool found = false;
      for (const auto& c : r.claims)
        found = found || c.text.find(w) != std::string::npos;
      if (!found)
        throw Mismatch{"no attached claim contains \"" + w + "\""};
    }
  }
}

void run_body(const Fact& f) {
  const json& e = f.expected;
  if (f.kind == "enumeration") {
    EnumerationResult r = enumerate_borel(poly_of(f), n_of(f));
    check_ideals(f, r.ideals, n_of(f));
  } else if (f.kind == "expansions") {
    auto got = all_expansion_sequences(ideal_of(f), f.input.at("steps").get<int>());
    check_ideals(f, got, n_of(f));
  } else if (f.kind == "lex_ideal") {
    check("lex_ideal", lex_ideal(poly_of(f), n_of(f)), parse_ideal(e.at("ideal").get<std::string>(), n_of(f)));
  } else if (f.kind == "hilbert_poly") {
    check("hilbert_poly", hilbert_polynomial(ideal_of(f)), parse_poly(e.at("poly").get<std::string>()));
  } else if (f.kind == "polynomial") {
    check("polynomial", poly_of(f), parse_poly(e.at("poly").get<std::string>()));
  } else if (f.kind == "classification") {
    run_classification(f);
  } else if (f.kind == "tangent_dim") {
    TangentReport t = tangent_report(ideal_of(f));
    if (e.contains("dim_hom"))
      check("dim_hom", t.dim_hom, e["dim_hom"].get<std::size_t>());
    if (e.contains("dim_nontrivial"))
      check("dim_nontrivial", t.dim_nontrivial, e["dim_nontrivial"].get<std::size_t>());
  } else if (f.kind == "trivial_dim") {
    TangentReport t = tangent_report(ideal_of(f));
    check("dim_trivial", t.dim_trivial, e.at("dim_trivial").get<std::size_t>());
    if (e.contains("dim_hom"))
      check("dim_hom", t.dim_hom, e["dim_hom"].get<std::size_t>());
  }
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

} // namespace

std::string default_facts_path() { return BORELHILB_FACTS_PATH; }

std::vector<Fact> facts_from_json(const json& j) {
  if (!j.is_object() || !j.contains("facts") || !j["facts"].is_array())
    throw ContractError("facts file must be an object with a \"facts\" array");
  std::vector<Fact> out;
  std::set<std::string> ids;
  for (const auto& row : j["facts"]) {
    Fact f;
    try {
      f.id = row.at("id").get<std::string>();
      f.kind = row.at("kind").get<std::string>();
      f.input = row.at("input");
      f.expected = row.at("expected");
      f.citation = row.at("citation").get<std::string>();
    } catch (const json::exception& e) {
      throw ContractError(std::string("malformed fact row: ") + e.what());
    }
    if (!kKinds.count(f.kind))
      throw ContractError("fact " + f.id + ": unknown kind " + f.kind);
    if (f.citation.empty())
      throw ContractError("fact " + f.id + ": empty citation");
    if (!ids.insert(f.id).second)
      throw ContractError("duplicate fact id " + f.id);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Fact> load_facts(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ContractError("cannot open facts file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ContractError("facts file " + path + ": " + e.what());
  }
  return facts_from_json(j);
}

FactOutcome run_fact(const Fact& f) {
  FactOutcome o{f.id, f.kind, false, "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    run_body(f);
    o.passed = true;
  } catch (const Mismatch& m) {
    o.detail = m.detail;
  } catch (const std::exception& e) {
    o.detail = std::string("error: ") + e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

std::vector<FactOutcome> run_facts(const std::vector<Fact>& facts, const std::string& filter) {
  std::vector<FactOutcome> out;
  for (const auto& f : facts)
    if (filter.empty() || f.id.find(filter) != std::string::npos)
      out.push_back(run_fact(f));
  return out;
}

void write_junit(const std::vector<FactOutcome>& outcomes, const std::string& path) {
  std::ofstream os(path);
  if (!os)
    throw ContractError("cannot write " + path);
  std::size_t failures = 0;
  double total = 0;
  for (const auto& o : outcomes) {
    failures += !o.passed;
    total += o.seconds;
  }
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuite name=\"facts\" tests=\"" << outcomes.size() << "\" failures=\"" << failures << "\" time=\""
     << total << "\">\n";
  for (const auto& o : outcomes) {
    os << "  <testcase classname=\"" << xml_escape(o.kind) << "\" name=\"" << xml_escape(o.id) << "\" time=\""
       << o.seconds << "\"";
    if (o.passed)
      os << "/>\n";
    else
      os << ">\n    <failure message=\"" << xml_escape(o.detail) << "\"/>\n  </testcase>\n";
  }
  os << "</testsuite>\n";
}

} // namespace borel
