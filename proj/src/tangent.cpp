#include "borelhilb/tangent.hpp"
#include "borelhilb/error.hpp"
#include "borelhilb/hilbert.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace borel {

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL; // 2^61 - 1
constexpr std::size_t kDefaultMaxCells = 200'000'000;

using MonoIndex = std::map<Monomial, std::size_t, LexGreater>;

struct System {
  std::vector<std::pair<std::size_t, Monomial>> labels;
  std::vector<MonoIndex> index; // per generator: standard monomial -> unknown
  std::vector<SparseVec> rows;
};

System build_system(const MonomialIdeal& I, SyzygySource source) {
  if (I.is_zero())
    throw ContractError("Hom(I, S/I) needs a nonzero ideal");
  const auto& g = I.gens();
  System sys;
  sys.index.resize(g.size());
  std::map<int, std::vector<Monomial>> std_by_degree;
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto it = std_by_degree.find(g[k].degree());
    if (it == std_by_degree.end())
      it = std_by_degree.emplace(g[k].degree(), standard_monomials(I, g[k].degree())).first;
    for (const auto& w : it->second) {
      sys.index[k].emplace(w, sys.labels.size());
      sys.labels.emplace_back(k, w);
    }
  }

  std::vector<SyzygyRelation> rels =
      source == SyzygySource::Taylor ? taylor_syzygies(I) : ek_first_syzygies(I);
  const double cells = static_cast<double>(sys.labels.size()) * static_cast<double>(rels.size());
  if (cells > static_cast<double>(max_cells()))
    throw ResourceError("tangent system too large: " + std::to_string(sys.labels.size()) + " unknowns x " +
                        std::to_string(rels.size()) + " relations exceeds " + std::to_string(max_cells()) +
                        " cells (set BOREL_HILB_MAX_CELLS to raise)");

  for (const auto& rel : rels) {
    std::map<Monomial, SparseVec, LexGreater> eqs;
    for (const auto& term : rel.terms) {
      for (const auto& [w, col] : sys.index[term.gen]) {
        Monomial t = term.coeff * w;
        if (I.contains(t))
          continue;
        eqs[t].emplace_back(col, term.sign);
      }
    }
    for (auto& [t, row] : eqs) {
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVec merged;
      for (auto& e : row) {
        if (!merged.empty() && merged.back().first == e.first)
          merged.back().second += e.second;
        else
          merged.push_back(std::move(e));
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
                   merged.end());
      if (!merged.empty())
        sys.rows.push_back(std::move(merged));
    }
  }
  return sys;
}

MonomialIdeal lemma_ideal(int n, int q, int p) {
  std::vector<Monomial> gens;
  const Monomial x0 = Monomial::var(n, 0);
  for (int i = 0; i <= n - 1; ++i)
    gens.push_back(x0.times_var(i));
  const Monomial x1q = Monomial::one(n).times_var(1, q);
  for (int i = 1; i <= p; ++i)
    gens.push_back(x1q.times_var(i));
  return MonomialIdeal(n, std::move(gens));
}

} // namespace

std::vector<SyzygyRelation> taylor_syzygies(const MonomialIdeal& I) {
  if (I.is_zero())
    throw ContractError("taylor_syzygies needs a nonzero ideal");
  const auto& g = I.gens();
  std::vector<SyzygyRelation> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      Monomial l = g[u].lcm(g[v]);
      out.push_back({{{u, l / g[u], 1}, {v, l / g[v], -1}}});
    }
  return out;
}

std::pair<Monomial, Monomial> ek_decompose(const MonomialIdeal& I, const Monomial& m) {
  if (!I.contains(m))
    throw ContractError(m.to_string() + " is not in " + I.to_string());
  const int n = I.ambient();
  Monomial prefix = Monomial::one(n);
  for (int i = 0; i <= n; ++i)
    for (int e = 0; e < m[i]; ++e) {
      if (I.contains(prefix))
        return {prefix, m / prefix};
      prefix = prefix.times_var(i);
    }
  return {prefix, Monomial::one(n)};
}

std::vector<SyzygyRelation> ek_first_syzygies(const MonomialIdeal& I) {
  if (!is_borel_fixed(I))
    throw ContractError("Eliahou-Kervaire syzygies need a Borel-fixed ideal, got " + I.to_string());
  const auto& g = I.gens();
  std::map<Monomial, std::size_t, LexGreater> pos;
  for (std::size_t k = 0; k < g.size(); ++k)
    pos.emplace(g[k], k);
  std::vector<SyzygyRelation> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (int j = 0; j < g[k].max_index(); ++j) {
      auto [h, y] = ek_decompose(I, g[k].times_var(j));
      out.push_back({{{k, Monomial::var(I.ambient(), j), 1}, {pos.at(h), y, -1}}});
    }
  }
  return out;
}

std::size_t max_cells() {
  if (const char* env = std::getenv("BOREL_HILB_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return kDefaultMaxCells;
}

HomResult hom_degree_zero(const MonomialIdeal& I, SyzygySource source) {
  System sys = build_system(I, source);
  HomResult res;
  res.unknowns = sys.labels.size();
  res.equations = sys.rows.size();
  SparseEchelon ech(res.unknowns);
  for (const auto& r : sys.rows)
    ech.add_row(r);
  res.rank = ech.rank();
  res.dim = res.unknowns - res.rank;
  res.modular_rank_agrees = rank_mod_p(sys.rows, res.unknowns, kPrime) == res.rank;
  res.basis = ech.nullspace();
  res.labels = std::move(sys.labels);
  return res;
}

TrivialResult trivial_deformations(const MonomialIdeal& I, SyzygySource source) {
  System sys = build_system(I, source);
  const int n = I.ambient();
  const auto& g = I.gens();
  TrivialResult res;
  SparseEchelon ech(sys.labels.size());
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      if (a == b)
        continue;
      SparseVec v;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k][b] == 0)
          continue;
        Monomial t = g[k].times_var(b, -1).times_var(a);
        auto it = sys.index[k].find(t);
        if (it != sys.index[k].end())
          v.emplace_back(it->second, g[k][b]);
      }
      if (v.empty())
        continue;
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& row : sys.rows)
        if (dot(row, v) != 0)
          res.all_in_hom = false;
      if (ech.add_row(v))
        res.basis.push_back(std::move(v));
    }
  res.dim = ech.rank();
  return res;
}

std::string to_string(Comparison c) {
  switch (c) {
  case Comparison::Lemma:
    return "lemma";
  case Comparison::Regularity:
    return "regularity";
  default:
    return "unknown";
  }
}

Comparison comparison_flag(const MonomialIdeal& I) {
  const int n = I.ambient();
  if (n >= 2 && !I.is_zero()) {
    const int top = I.max_generator_degree();
    for (int q = 1; q + 1 <= top; ++q)
      for (int p = 1; p <= n - 1; ++p) {
        if (!(p <= n - 2 || q == 1))
          continue;
        if (I == lemma_ideal(n, q, p))
          return Comparison::Lemma;
      }
  }
  if (I.is_zero() || I.is_unit() || !is_borel_fixed(I) || !is_saturated_borel(I))
    return Comparison::Unknown;
  const int e = I.gens().front().degree();
  for (const auto& m : I.gens())
    if (m.degree() != e)
      return Comparison::Unknown;
  if (hilbert_function(I, e) == hilbert_polynomial(I).at(e))
    return Comparison::Regularity;
  return Comparison::Unknown;
}

HomResult hom_truncated(const MonomialIdeal& I, int e, SyzygySource source) {
  if (e < I.max_generator_degree())
    throw ContractError("truncation degree " + std::to_string(e) + " is below the generator degree of " +
                        I.to_string());
  std::vector<Monomial> gens;
  for (const auto& m : monomials_of_degree(I.ambient(), e))
    if (I.contains(m))
      gens.push_back(m);
  return hom_degree_zero(MonomialIdeal(I.ambient(), std::move(gens)), source);
}

TangentReport tangent_report(const MonomialIdeal& I, SyzygySource source) {
  TangentReport r;
  r.ideal = I;
  HomResult h = hom_degree_zero(I, source);
  TrivialResult t = trivial_deformations(I, source);
  r.dim_hom = h.dim;
  r.dim_trivial = t.dim;
  r.dim_nontrivial = h.dim - t.dim;
  r.comparison = comparison_flag(I);
  r.modular_rank_agrees = h.modular_rank_agrees;
  r.trivial_in_hom = t.all_in_hom;
  return r;
}

} // namespace borel
