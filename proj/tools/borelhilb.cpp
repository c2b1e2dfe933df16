#include "borelhilb/census.hpp"
#include "borelhilb/classify.hpp"
#include "borelhilb/enumerate.hpp"
#include "borelhilb/error.hpp"
#include "borelhilb/facts.hpp"
#include "borelhilb/io.hpp"
#include "borelhilb/macaulay.hpp"
#include "borelhilb/parse.hpp"
#include "borelhilb/tangent.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace borel;

namespace {

enum Exit { kOk = 0, kUsage = 2, kInadmissible = 3, kMismatch = 4, kResource = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j, bool compact) { std::cout << (compact ? j.dump() : j.dump(2)) << '\n'; }

json read_ideal_json(const std::string& file, const std::string& inline_text) {
  if (!file.empty() == !inline_text.empty())
    throw UsageError("tangent needs exactly one of --ideal FILE or --inline JSON");
  try {
    if (!inline_text.empty())
      return json::parse(inline_text);
    std::ifstream in(file);
    if (!in)
      throw UsageError("cannot open " + file);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel-fixed points of Hilbert schemes: enumeration, classification, tangent spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--compact", compact, "Single-line JSON output");

  std::string poly;
  int n = 0;
  unsigned jobs = 1;

  auto* lex = app.add_subcommand("lex", "Saturated lexicographic ideal");
  lex->add_option("--poly", poly, "Hilbert polynomial, e.g. \"3t+1\" or \"Q(2,1;3,1)+1\"")->required();
  lex->add_option("--n", n, "Ambient P^n")->required()->check(CLI::NonNegativeNumber);

  bool stats = false;
  auto* en = app.add_subcommand("enum", "All saturated Borel-fixed ideals");
  en->add_option("--poly", poly, "Hilbert polynomial")->required();
  en->add_option("--n", n, "Ambient P^n")->required()->check(CLI::NonNegativeNumber);
  en->add_flag("--stats", stats, "Per-level counters");
  en->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  bool with_tangent = false;
  auto* cl = app.add_subcommand("classify", "Family, distinguished pair, general point and claims");
  cl->add_option("--poly", poly, "Hilbert polynomial")->required();
  cl->add_option("--n", n, "Ambient P^n")->required()->check(CLI::NonNegativeNumber);
  cl->add_flag("--tangent", with_tangent, "Add tangent reports at every Borel ideal");
  cl->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string ideal_file, ideal_inline, source = "taylor";
  auto* tg = app.add_subcommand("tangent", "Degree-zero Hom(I, S/I) and its trivial part");
  tg->add_option("--ideal", ideal_file, "JSON file with {\"n\", \"gens\"} or {\"exps\"}");
  tg->add_option("--inline", ideal_inline, "The same JSON given inline");
  tg->add_option("--source", source, "Syzygy source")->check(CLI::IsMember({"taylor", "ek"}));
  int truncate = -1;
  tg->add_option("--truncate", truncate, "Also report Hom of the truncation in this degree");

  CensusOptions copt;
  std::string out_path;
  bool no_tangent = false;
  auto* cs = app.add_subcommand("census", "Sweep over two-parameter families, JSONL output");
  cs->add_option("--n-min", copt.n_min)->required();
  cs->add_option("--n-max", copt.n_max)->required();
  cs->add_option("--d-max", copt.d_max)->required();
  cs->add_option("--q-max", copt.q_max)->required();
  cs->add_option("--r-max", copt.r_max)->required();
  cs->add_option("--out", out_path, "Output file (.jsonl)")->required();
  cs->add_option("--jobs", copt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cs->add_flag("--no-tangent", no_tangent, "Skip tangent computations");

  std::string filter, junit, facts_path = default_facts_path();
  auto* vf = app.add_subcommand("verify-facts", "Run the regression corpus");
  vf->alias("verify-paper");
  vf->add_option("--filter", filter, "Only facts whose id contains this text");
  vf->add_option("--junit", junit, "Write a JUnit XML report");
  vf->add_option("--facts", facts_path, "Corpus file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*lex) {
      emit({{"poly", parse_poly(poly).to_string()}, {"n", n}, {"ideal", ideal_to_json(lex_ideal(parse_poly(poly), n))}},
           compact);
    } else if (*en) {
      emit(enumeration_to_json(enumerate_borel(parse_poly(poly), n, jobs), stats), compact);
    } else if (*cl) {
      emit(scheme_report_to_json(scheme_report(parse_poly(poly), n, with_tangent, jobs)), compact);
    } else if (*tg) {
      MonomialIdeal I = ideal_from_json(read_ideal_json(ideal_file, ideal_inline));
      auto src = source == "ek" ? SyzygySource::EliahouKervaire : SyzygySource::Taylor;
      json out = tangent_to_json(tangent_report(I, src));
      if (truncate >= 0)
        out["dim_truncated"] = {{"degree", truncate}, {"dim", hom_truncated(I, truncate, src).dim}};
      emit(out, compact);
    } else if (*cs) {
      if (copt.n_min > copt.n_max || copt.d_max < 0 || copt.q_max < 1 || copt.r_max < 0)
        throw UsageError("census ranges are empty or negative");
      copt.tangent = !no_tangent;
      auto rows = run_census(copt);
      std::ofstream os(out_path);
      if (!os)
        throw UsageError("cannot write " + out_path);
      write_census(rows, os);
      std::cerr << rows.size() << " rows written to " << out_path << '\n';
    } else if (*vf) {
      auto outcomes = run_facts(load_facts(facts_path), filter);
      std::size_t failed = 0;
      for (const auto& o : outcomes) {
        std::cout << (o.passed ? "PASS " : "FAIL ") << o.id;
        if (!o.passed) {
          std::cout << "  " << o.detail;
          ++failed;
        }
        std::cout << '\n';
      }
      std::cout << outcomes.size() - failed << "/" << outcomes.size() << " facts passed\n";
      if (!junit.empty())
        write_junit(outcomes, junit);
      if (outcomes.empty()) {
        std::cerr << "no facts matched filter \"" << filter << "\"\n";
        return kUsage;
      }
      return failed ? kMismatch : kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InadmissibleError& e) {
    std::cerr << "inadmissible: " << e.what() << '\n';
    return kInadmissible;
  } catch (const ContractError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInadmissible;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  }
  return kOk;
}
