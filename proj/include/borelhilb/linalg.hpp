#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace borel {

/// Sparse vector: (column, value) pairs with strictly increasing columns
/// and no zero values.
using SparseVec = std::vector<std::pair<std::size_t, mpq_class>>;

/// Row-echelon elimination over Q. Rows are added one at a time.
class SparseEchelon {
public:
  explicit SparseEchelon(std::size_t ncols) : ncols_(ncols), pivot_of_col_(ncols, npos) {}

  /// Reduces the row against the current pivots; returns true if it was
  /// independent (and is kept as a new pivot row).
  bool add_row(SparseVec row);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return ncols_; }

  /// Basis of { v : row . v = 0 for every added row }.
  std::vector<SparseVec> nullspace() const;

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  SparseVec reduce(SparseVec row) const;

  std::size_t ncols_;
  std::vector<SparseVec> rows_;          // leading entry 1
  std::vector<std::size_t> pivot_of_col_; // column -> index into rows_
};

/// a + c*b for sparse vectors.
SparseVec axpy(const SparseVec& a, const mpq_class& c, const SparseVec& b);

mpq_class dot(const SparseVec& a, const SparseVec& b);

std::size_t rank_exact(const std::vector<SparseVec>& rows, std::size_t ncols);

/// Rank over F_p. Entries must be integers; throws ContractError otherwise.
std::size_t rank_mod_p(const std::vector<SparseVec>& rows, std::size_t ncols, std::uint64_t p);

} // namespace borel
