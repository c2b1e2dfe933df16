#pragma once

#include "borelhilb/classify.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace borel {

struct CensusOptions {
  int n_min = 2;
  int n_max = 4;
  int d_max = 2;
  int q_max = 3;
  int r_max = 1;
  unsigned jobs = 1;
  bool tangent = true;
};

struct CensusTangent {
  MonomialIdeal ideal;
  std::optional<std::size_t> dim_hom; // empty when the size guard tripped
  std::optional<std::size_t> dim_trivial;
  std::string error;
};

struct CensusRow {
  std::string poly;
  int n = 0;
  std::size_t borel_count = 0;
  FamilyTag family;
  std::vector<CensusTangent> tangent;
  double seconds = 0;
};

/// Every Q(d;a)+1 and Q(d,r;a,1)+1 with 0 <= d <= d_max, 1 <= a <= q_max,
/// r <= min(r_max, d-1) and d <= n-2, sorted by (n, polynomial text).
std::vector<std::pair<int, HilbertPoly>> census_inputs(const CensusOptions& opt);

/// Computes the rows on a pool of opt.jobs threads; order is that of census_inputs.
std::vector<CensusRow> run_census(const CensusOptions& opt);

nlohmann::json census_row_to_json(const CensusRow& row, bool with_time = true);

/// One JSON object per line.
void write_census(const std::vector<CensusRow>& rows, std::ostream& os);

} // namespace borel
