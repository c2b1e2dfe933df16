#include "borelhilb/hilbert.hpp"
#include "borelhilb/error.hpp"

#include <algorithm>

namespace borel {

namespace {

void add_shifted(SeriesNumerator& acc, const SeriesNumerator& p, int shift, int sign) {
  if (acc.size() < p.size() + shift)
    acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sign > 0)
      acc[i + shift] += p[i];
    else
      acc[i + shift] -= p[i];
  }
}

void trim(SeriesNumerator& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

SeriesNumerator multiply(const SeriesNumerator& a, const SeriesNumerator& b) {
  if (a.empty() || b.empty())
    return {};
  SeriesNumerator r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

bool pairwise_coprime(const std::vector<Monomial>& g) {
  const std::size_t nv = g.front().nvars();
  std::vector<int> seen(nv, 0);
  for (const auto& m : g)
    for (std::size_t i = 0; i < nv; ++i)
      if (m[i] > 0 && seen[i]++)
        return false;
  return true;
}

// Numerator of S/(gens); gens are minimal.
SeriesNumerator numerator(const std::vector<Monomial>& gens) {
  if (gens.empty())
    return {1};
  if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); }))
    return {};
  if (pairwise_coprime(gens)) {
    SeriesNumerator acc{1};
    for (const auto& m : gens) {
      SeriesNumerator f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] = -1;
      acc = multiply(acc, f);
    }
    return acc;
  }

  const int n = gens.front().ambient();
  // Pivot on the variable occurring in the most generators.
  int best = -1;
  std::size_t best_count = 0;
  for (int i = 0; i <= n; ++i) {
    std::size_t c = std::count_if(gens.begin(), gens.end(), [i](const Monomial& m) { return m[i] > 0; });
    if (c > best_count) {
      best_count = c;
      best = i;
    }
  }
  std::vector<int> exps;
  int pure_power = 0; // exponent of a generator x_best^a, if any
  for (const auto& m : gens) {
    if (m[best] == 0)
      continue;
    exps.push_back(m[best]);
    if (m.degree() == m[best])
      pure_power = m[best];
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (pure_power > 0)
    e = std::min(e, pure_power - 1);
  e = std::max(e, 1);

  const Monomial p = Monomial::one(n).times_var(best, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens)
    colon.push_back(m / m.gcd(p));

  SeriesNumerator r = numerator(MonomialIdeal(n, std::move(plus)).gens());
  SeriesNumerator c = numerator(MonomialIdeal(n, std::move(colon)).gens());
  add_shifted(r, c, e, +1);
  trim(r);
  return r;
}

mpz_class binomial(long top, long k) {
  if (k < 0 || top < k)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return r;
}

} // namespace

mpz_class hilbert_function(const MonomialIdeal& I, int d) {
  mpz_class count = 0;
  for (const auto& m : monomials_of_degree(I.ambient(), d))
    if (!I.contains(m))
      ++count;
  return count;
}

SeriesNumerator hilbert_series_numerator(const MonomialIdeal& I) { return numerator(I.gens()); }

mpz_class hilbert_function_from_series(const SeriesNumerator& num, int n, int d) {
  mpz_class v = 0;
  for (int j = 0; j < static_cast<int>(num.size()) && j <= d; ++j)
    v += num[j] * binomial(d - j + n, n);
  return v;
}

HilbertPoly hilbert_polynomial(const MonomialIdeal& I) {
  SeriesNumerator num = hilbert_series_numerator(I);
  int poles = I.ambient() + 1;
  // Cancel (1-u) factors: synthetic division by (u - 1) while N(1) == 0.
  while (!num.empty() && poles > 0) {
    mpz_class at_one = 0;
    for (const auto& c : num)
      at_one += c;
    if (at_one != 0)
      break;
    // N(u) = (1-u) M(u): M_k = sum_{j<=k} N_j.
    SeriesNumerator m(num.size() - 1);
    mpz_class run = 0;
    for (std::size_t k = 0; k + 1 < num.size(); ++k) {
      run += num[k];
      m[k] = run;
    }
    num = std::move(m);
    --poles;
  }
  if (num.empty() || poles == 0)
    return HilbertPoly();
  // Coefficient of u^t in 1/(1-u)^D is binom(t + D - 1, D - 1).
  HilbertPoly p;
  for (std::size_t j = 0; j < num.size(); ++j) {
    HilbertPoly term = binom_poly(poles - 1 - static_cast<long>(j), poles - 1);
    term *= mpq_class(num[j]);
    p += term;
  }
  return p;
}

int regularity_borel(const MonomialIdeal& I) {
  if (!is_borel_fixed(I))
    throw ContractError("regularity_borel requires a Borel-fixed ideal, got " + I.to_string());
  return I.max_generator_degree();
}

} // namespace borel
