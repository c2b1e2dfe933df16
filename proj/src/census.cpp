#include "borelhilb/census.hpp"
#include "borelhilb/error.hpp"
#include "borelhilb/io.hpp"
#include "borelhilb/macaulay.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

namespace borel {

std::vector<std::pair<int, HilbertPoly>> census_inputs(const CensusOptions& opt) {
  std::map<std::pair<int, std::string>, HilbertPoly> rows;
  for (int n = std::max(opt.n_min, 2); n <= opt.n_max; ++n) {
    for (int d = 0; d <= std::min(opt.d_max, n - 2); ++d) {
      for (long a = 1; a <= opt.q_max; ++a) {
        HilbertPoly p1 = q_to_poly(QNotation{{d}, {a}, 1});
        rows.emplace(std::make_pair(n, p1.to_string()), p1);
        for (int r = 0; r <= std::min(opt.r_max, d - 1); ++r) {
          HilbertPoly p2 = q_to_poly(QNotation{{d, r}, {a, 1}, 1});
          rows.emplace(std::make_pair(n, p2.to_string()), p2);
        }
      }
    }
  }
  std::vector<std::pair<int, HilbertPoly>> out;
  for (auto& [key, p] : rows)
    out.emplace_back(key.first, p);
  return out;
}

namespace {

CensusRow compute_row(int n, const HilbertPoly& P, bool with_tangent) {
  auto start = std::chrono::steady_clock::now();
  CensusRow row;
  row.poly = P.to_string();
  row.n = n;
  EnumerationResult e = enumerate_borel(P, n);
  row.borel_count = e.ideals.size();
  row.family = classify_two_borel(P, n);
  if (with_tangent) {
    for (const auto& I : e.ideals) {
      CensusTangent t{I, std::nullopt, std::nullopt, ""};
      try {
        TangentReport rep = tangent_report(I);
        t.dim_hom = rep.dim_hom;
        t.dim_trivial = rep.dim_trivial;
      } catch (const ResourceError& err) {
        t.error = err.what();
      }
      row.tangent.push_back(std::move(t));
    }
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

} // namespace

std::vector<CensusRow> run_census(const CensusOptions& opt) {
  const auto inputs = census_inputs(opt);
  std::vector<CensusRow> rows(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
      try {
        rows[i] = compute_row(inputs[i].first, inputs[i].second, opt.tangent);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return rows;
}

json census_row_to_json(const CensusRow& row, bool with_time) {
  json tangent = json::array();
  for (const auto& t : row.tangent) {
    json j = {{"ideal", t.ideal.to_string()}};
    j["dim_hom"] = t.dim_hom ? json(*t.dim_hom) : json(nullptr);
    j["dim_trivial"] = t.dim_trivial ? json(*t.dim_trivial) : json(nullptr);
    if (!t.error.empty())
      j["error"] = t.error;
    tangent.push_back(j);
  }
  json out = {{"poly", row.poly},
              {"n", row.n},
              {"borel_count", row.borel_count},
              {"family", family_to_json(row.family)},
              {"tangent", tangent}};
  if (with_time)
    out["wall_seconds"] = row.seconds;
  return out;
}

void write_census(const std::vector<CensusRow>& rows, std::ostream& os) {
  for (const auto& r : rows)
    os << census_row_to_json(r).dump() << '\n';
}

} // namespace borel
