#include "borelhilb/enumerate.hpp"
#include "borelhilb/error.hpp"
#include "borelhilb/hilbert.hpp"
#include "borelhilb/macaulay.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace borel {

namespace {

using IdealSet = std::set<MonomialIdeal, CanonicalLess>;

std::vector<MonomialIdeal> one_step(const MonomialIdeal& I) {
  std::vector<MonomialIdeal> out;
  for (const auto& g : I.gens())
    if (is_expandable(I, g))
      out.push_back(expand(I, g));
  return out;
}

// Expands every ideal of the frontier once; threads work on strided slices
// and the results are merged through the ordered set.
IdealSet step_frontier(const std::vector<MonomialIdeal>& frontier, unsigned jobs, std::size_t& count) {
  IdealSet next;
  if (jobs <= 1 || frontier.size() < 2 * jobs) {
    for (const auto& I : frontier)
      for (auto& J : one_step(I)) {
        ++count;
        next.insert(std::move(J));
      }
    return next;
  }
  std::vector<std::vector<MonomialIdeal>> local(jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < frontier.size(); k += jobs)
        for (auto& J : one_step(frontier[k]))
          local[t].push_back(std::move(J));
    });
  for (auto& th : pool)
    th.join();
  for (auto& v : local) {
    count += v.size();
    for (auto& J : v)
      next.insert(std::move(J));
  }
  return next;
}

EnumerationResult enumerate_low_degree(const HilbertPoly& P, int n, unsigned jobs) {
  const int d = P.degree();
  std::vector<HilbertPoly> tower{P};
  for (int j = 1; j <= d; ++j)
    tower.push_back(delta(tower.back()));

  EnumerationResult res;
  res.n = n;
  res.poly = P;

  LevelStats seed;
  seed.level = d;
  seed.inputs = 1;
  const long c = tower[d].at(0).get_si();
  std::vector<MonomialIdeal> current =
      all_expansion_sequences(MonomialIdeal::unit(n - d), static_cast<int>(c), jobs, &seed.expansions);
  seed.outputs = current.size();
  res.stats.push_back(seed);

  for (int j = d - 1; j >= 0; --j) {
    LevelStats st;
    st.level = j;
    st.inputs = current.size();
    IdealSet next;
    for (const auto& I : current) {
      MonomialIdeal L = I.lifted();
      HilbertPoly diff = tower[j] - hilbert_polynomial(L);
      if (diff.degree() > 0 || (diff.degree() == 0 && diff.leading() < 0)) {
        ++st.skipped;
        continue;
      }
      const long a = diff.is_zero() ? 0 : diff.at(0).get_si();
      for (auto& J : all_expansion_sequences(L, static_cast<int>(a), jobs, &st.expansions))
        next.insert(std::move(J));
    }
    current.assign(next.begin(), next.end());
    st.outputs = current.size();
    res.stats.push_back(st);
  }
  res.ideals = std::move(current);
  return res;
}

} // namespace

std::vector<MonomialIdeal> all_expansion_sequences(const MonomialIdeal& I, int a, unsigned jobs,
                                                   std::size_t* expansions) {
  if (a < 0)
    throw ContractError("number of expansions must be nonnegative");
  std::vector<MonomialIdeal> frontier{I};
  std::size_t count = 0;
  for (int step = 0; step < a && !frontier.empty(); ++step) {
    IdealSet next = step_frontier(frontier, jobs, count);
    frontier.assign(next.begin(), next.end());
  }
  if (expansions)
    *expansions += count;
  return frontier;
}

EnumerationResult enumerate_borel(const HilbertPoly& P, int n, unsigned jobs) {
  MacaulayExpansion e = macaulay_expansion(P);
  const int d = e.d();
  if (n < 1)
    throw InadmissibleError("ambient dimension must be at least 1");
  if (d > n - 1)
    throw InadmissibleError("deg P = " + std::to_string(d) + " exceeds n-1 = " + std::to_string(n - 1) +
                            "; codimension-zero components are not supported");
  if (d < n - 1)
    return enumerate_low_degree(P, n, jobs);

  // Codimension one: I = x0^a J with J of the stripped polynomial.
  const long a = e.a[d];
  QNotation q = poly_to_q(P);
  q.indices.erase(q.indices.begin());
  q.values.erase(q.values.begin());
  EnumerationResult res;
  if (q.indices.empty()) {
    res.ideals.push_back(MonomialIdeal(n, {Monomial::one(n).times_var(0, static_cast<int>(a))}));
  } else {
    res = enumerate_low_degree(q_to_poly(q), n, jobs);
    for (auto& J : res.ideals) {
      std::vector<Monomial> g;
      for (const auto& m : J.gens())
        g.push_back(m.times_var(0, static_cast<int>(a)));
      J = MonomialIdeal(n, std::move(g));
    }
    std::sort(res.ideals.begin(), res.ideals.end(), CanonicalLess{});
  }
  res.n = n;
  res.poly = P;
  return res;
}

MonomialIdeal expand_lex_smallest(const MonomialIdeal& I, int d) {
  const Monomial* pick = nullptr;
  for (const auto& g : I.gens())
    if (g.degree() == d)
      pick = &g; // generators are lex-descending, so the last one wins
  if (!pick)
    throw ContractError("no minimal generator of degree " + std::to_string(d) + " in " + I.to_string());
  return expand(I, *pick);
}

} // namespace borel
