#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace borel {

/// One executable row of the regression corpus.
/// Kinds: enumeration, expansions, lex_ideal, hilbert_poly, polynomial,
/// classification, tangent_dim, trivial_dim.
struct Fact {
  std::string id;
  std::string kind;
  nlohmann::json input;
  nlohmann::json expected;
  std::string citation;
};

struct FactOutcome {
  std::string id;
  std::string kind;
  bool passed = false;
  std::string detail; // mismatch or error description; empty on success
  double seconds = 0;
};

/// Path of the corpus shipped with the source tree.
std::string default_facts_path();

/// Throws ContractError on malformed rows, duplicate ids or unknown kinds.
std::vector<Fact> load_facts(const std::string& path);
std::vector<Fact> facts_from_json(const nlohmann::json& j);

FactOutcome run_fact(const Fact& f);

/// Runs every fact whose id contains filter (all when empty).
std::vector<FactOutcome> run_facts(const std::vector<Fact>& facts, const std::string& filter = "");

void write_junit(const std::vector<FactOutcome>& outcomes, const std::string& path);

} // namespace borel
