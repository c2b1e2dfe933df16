#include "borelhilb/linalg.hpp"
#include "borelhilb/error.hpp"

#include <algorithm>
#include <map>

namespace borel {

SparseVec axpy(const SparseVec& a, const mpq_class& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      mpq_class v = a[i].second + c * b[j].second;
      if (v != 0)
        out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

mpq_class dot(const SparseVec& a, const SparseVec& b) {
  mpq_class s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else
      s += a[i++].second * b[j++].second;
  }
  return s;
}

SparseVec SparseEchelon::reduce(SparseVec row) const {
  // Eliminate pivot columns left to right; every step removes the smallest
  // remaining pivot column and only adds larger columns.
  std::size_t k = 0;
  while (k < row.size()) {
    const std::size_t col = row[k].first;
    const std::size_t p = pivot_of_col_[col];
    if (p == npos) {
      ++k;
      continue;
    }
    mpq_class c = -row[k].second;
    SparseVec head(row.begin(), row.begin() + k);
    SparseVec tail(row.begin() + k, row.end());
    tail = axpy(tail, c, rows_[p]);
    head.insert(head.end(), tail.begin(), tail.end());
    row = std::move(head);
  }
  return row;
}

bool SparseEchelon::add_row(SparseVec row) {
  for (const auto& [c, v] : row)
    if (c >= ncols_)
      throw ContractError("sparse row column out of range");
  row = reduce(std::move(row));
  if (row.empty())
    return false;
  mpq_class inv = 1 / row.front().second;
  for (auto& e : row)
    e.second *= inv;
  pivot_of_col_[row.front().first] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

std::vector<SparseVec> SparseEchelon::nullspace() const {
  // Back-substitute to reduced echelon form.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
  std::vector<SparseVec> rref = rows_;
  for (std::size_t idx : order) {
    SparseVec& r = rref[idx];
    std::size_t k = 1;
    while (k < r.size()) {
      const std::size_t p = pivot_of_col_[r[k].first];
      if (p == npos) {
        ++k;
        continue;
      }
      r = axpy(r, -r[k].second, rref[p]); // rref[p] is already fully reduced
    }
  }
  // Free column f: v_f = 1, v_pivot = -rref[pivot][f].
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> by_col(ncols_);
  for (const auto& r : rref)
    for (std::size_t k = 1; k < r.size(); ++k)
      by_col[r[k].first].emplace_back(r.front().first, -r[k].second);
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (pivot_of_col_[f] != npos)
      continue;
    SparseVec v = by_col[f];
    v.emplace_back(f, 1);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_exact(const std::vector<SparseVec>& rows, std::size_t ncols) {
  SparseEchelon e(ncols);
  for (const auto& r : rows)
    e.add_row(r);
  return e.rank();
}

std::size_t rank_mod_p(const std::vector<SparseVec>& rows, std::size_t ncols, std::uint64_t p) {
  using Row = std::map<std::size_t, std::uint64_t>;
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1)
        r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  const mpz_class P(std::to_string(p));
  std::vector<Row> pivots(ncols);
  std::vector<bool> has(ncols, false);
  std::size_t rank = 0;
  for (const auto& src : rows) {
    Row row;
    for (const auto& [c, v] : src) {
      if (v.get_den() != 1)
        throw ContractError("rank_mod_p needs integer entries");
      mpz_class r = v.get_num() % P;
      if (r < 0)
        r += P;
      if (r != 0)
        row[c] = std::stoull(r.get_str());
    }
    while (!row.empty()) {
      auto [col, val] = *row.begin();
      if (!has[col]) {
        const std::uint64_t inv = powmod(val, p - 2);
        for (auto& e : row)
          e.second = mulmod(e.second, inv);
        pivots[col] = std::move(row);
        has[col] = true;
        ++rank;
        break;
      }
      const std::uint64_t f = val;
      for (const auto& [c2, v2] : pivots[col]) {
        std::uint64_t sub = mulmod(f, v2);
        std::uint64_t& cur = row[c2];
        cur = (cur + p - sub) % p;
        if (cur == 0)
          row.erase(c2);
      }
    }
  }
  return rank;
}

} // namespace borel
