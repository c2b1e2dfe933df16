#pragma once

#include "borelhilb/hilbert_poly.hpp"
#include "borelhilb/monomial.hpp"

#include <cstddef>
#include <vector>

namespace borel {

/// Work done at one level j of the recursion (ring k[x0..x_{n-j}]).
struct LevelStats {
  int level = 0;
  std::size_t inputs = 0;   // ideals lifted into this level (seed: 1)
  std::size_t skipped = 0;  // lifts whose Hilbert polynomial overshoots
  std::size_t expansions = 0; // expansion steps performed (pre-dedup)
  std::size_t outputs = 0;  // distinct ideals kept
};

struct EnumerationResult {
  int n = 0;
  HilbertPoly poly;
  std::vector<MonomialIdeal> ideals; // canonical order
  std::vector<LevelStats> stats;     // from level d down to 0
};

/// Every ideal reachable from I by exactly a expansions. Canonically sorted.
std::vector<MonomialIdeal> all_expansion_sequences(const MonomialIdeal& I, int a, unsigned jobs = 1,
                                                   std::size_t* expansions = nullptr);

/// All saturated Borel-fixed ideals of k[x0..xn] with Hilbert polynomial P.
/// Throws InadmissibleError for inadmissible P or deg P > n-1.
EnumerationResult enumerate_borel(const HilbertPoly& P, int n, unsigned jobs = 1);

/// Expansion at the lex-smallest minimal generator of degree d.
/// Throws ContractError when I has no minimal generator of degree d.
MonomialIdeal expand_lex_smallest(const MonomialIdeal& I, int d);

} // namespace borel
