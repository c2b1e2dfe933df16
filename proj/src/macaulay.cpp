#include "borelhilb/macaulay.hpp"
#include "borelhilb/error.hpp"

namespace borel {

namespace {

HilbertPoly macaulay_term(int i, long m) {
  return binom_poly(i, i + 1) - binom_poly(i - m, i + 1);
}

long to_long_checked(const mpz_class& z, const std::string& what) {
  if (!z.fits_slong_p())
    throw InadmissibleError(what + " does not fit in a machine integer");
  return z.get_si();
}

} // namespace

MacaulayExpansion macaulay_expansion(const HilbertPoly& P) {
  if (P.is_zero())
    throw InadmissibleError("not a Hilbert polynomial: the zero polynomial is rejected");
  const int d = P.degree();
  MacaulayExpansion e;
  e.m.assign(d + 1, 0);
  HilbertPoly rem = P;
  mpz_class fact = 1;
  for (int i = 2; i <= d; ++i)
    fact *= i;
  for (int i = d; i >= 0; --i) {
    mpq_class c = rem.coeff(i) * mpq_class(fact);
    if (c.get_den() != 1)
      throw InadmissibleError("not a Hilbert polynomial " + P.to_string() + ": m_" + std::to_string(i) +
                              " = " + c.get_str() + " is not an integer");
    long mi = to_long_checked(c.get_num(), "m_" + std::to_string(i));
    if (mi < 1)
      throw InadmissibleError("not a Hilbert polynomial " + P.to_string() + ": m_" + std::to_string(i) +
                              " = " + std::to_string(mi) + " is not positive");
    if (i < d && mi < e.m[i + 1])
      throw InadmissibleError("not a Hilbert polynomial " + P.to_string() + ": m_" + std::to_string(i) +
                              " = " + std::to_string(mi) + " < m_" + std::to_string(i + 1) + " = " +
                              std::to_string(e.m[i + 1]));
    e.m[i] = mi;
    rem -= macaulay_term(i, mi);
    if (i > 0)
      fact /= i;
  }
  if (!rem.is_zero())
    throw InadmissibleError("not a Hilbert polynomial " + P.to_string() + ": nonzero remainder " + rem.to_string());
  e.a.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i)
    e.a[i] = (i == d) ? e.m[i] : e.m[i] - e.m[i + 1];
  return e;
}

HilbertPoly reconstruct(const std::vector<long>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || (i + 1 < m.size() && m[i] < m[i + 1]))
      throw ContractError("Macaulay vector must be nonnegative and weakly decreasing");
  }
  HilbertPoly p;
  for (std::size_t i = 0; i < m.size(); ++i)
    p += macaulay_term(static_cast<int>(i), m[i]);
  return p;
}

QNotation QNotation::normalized() const {
  QNotation q;
  q.indices = indices;
  q.values = values;
  if (plus_constant != 0) {
    if (!q.indices.empty() && q.indices.back() == 0)
      q.values.back() += plus_constant;
    else {
      q.indices.push_back(0);
      q.values.push_back(plus_constant);
    }
  }
  return q;
}

std::vector<long> QNotation::a_vector() const {
  QNotation q = normalized();
  if (q.indices.empty())
    return {};
  std::vector<long> a(q.indices.front() + 1, 0);
  for (std::size_t k = 0; k < q.indices.size(); ++k)
    a[q.indices[k]] = q.values[k];
  return a;
}

std::string QNotation::to_string() const {
  std::string s = "Q(";
  for (std::size_t k = 0; k < indices.size(); ++k)
    s += (k ? "," : "") + std::to_string(indices[k]);
  s += ";";
  for (std::size_t k = 0; k < values.size(); ++k)
    s += (k ? "," : "") + std::to_string(values[k]);
  s += ")";
  if (plus_constant > 0)
    s += "+" + std::to_string(plus_constant);
  return s;
}

bool QNotation::operator==(const QNotation& o) const {
  QNotation a = normalized(), b = o.normalized();
  return a.indices == b.indices && a.values == b.values;
}

HilbertPoly q_to_poly(const QNotation& q) {
  if (q.indices.size() != q.values.size())
    throw ContractError("Q-notation needs as many values as indices");
  for (std::size_t k = 0; k < q.indices.size(); ++k) {
    if (q.indices[k] < 0 || (k > 0 && q.indices[k] >= q.indices[k - 1]))
      throw ContractError("Q-notation indices must be nonnegative and strictly decreasing");
    if (q.values[k] < 1)
      throw ContractError("Q-notation values must be positive");
  }
  if (q.plus_constant < 0)
    throw ContractError("Q-notation offset must be nonnegative");
  std::vector<long> a = q.a_vector();
  if (a.empty())
    return HilbertPoly();
  std::vector<long> m(a.size(), 0);
  long run = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    run += a[i];
    m[i] = run;
  }
  return reconstruct(m);
}

QNotation poly_to_q(const HilbertPoly& P) {
  MacaulayExpansion e = macaulay_expansion(P);
  QNotation q;
  for (int i = e.d(); i >= 0; --i) {
    if (e.a[i] != 0) {
      q.indices.push_back(i);
      q.values.push_back(e.a[i]);
    }
  }
  return q;
}

QNotation delta_q(const QNotation& q) {
  QNotation n = q.normalized();
  QNotation r;
  for (std::size_t k = 0; k < n.indices.size(); ++k) {
    if (n.indices[k] == 0)
      continue;
    r.indices.push_back(n.indices[k] - 1);
    r.values.push_back(n.values[k]);
  }
  return r;
}

MonomialIdeal lex_ideal(const HilbertPoly& P, int n) {
  MacaulayExpansion e = macaulay_expansion(P);
  const int d = e.d();
  if (d > n - 1)
    throw InadmissibleError("lex ideal needs deg P <= n-1, got deg " + std::to_string(d) + " in P^" +
                            std::to_string(n));
  std::vector<Monomial> gens;
  for (int i = 0; i <= n - d - 2; ++i)
    gens.push_back(Monomial::var(n, i));
  // Variables x_{v_0}, ..., x_{v_d} with v_k = n-d-1+k carry a_d, ..., a_0.
  Monomial prefix = Monomial::one(n);
  for (int k = 0; k <= d; ++k) {
    const int v = n - d - 1 + k;
    const long ak = e.a[d - k];
    if (k < d)
      gens.push_back(prefix.times_var(v, static_cast<int>(ak + 1)));
    prefix = prefix.times_var(v, static_cast<int>(ak));
  }
  gens.push_back(prefix);
  return MonomialIdeal(n, std::move(gens));
}

bool is_lex_segment_ideal(const MonomialIdeal& I, int max_degree) {
  for (int deg = 0; deg <= max_degree; ++deg) {
    bool outside = false;
    for (const auto& m : monomials_of_degree(I.ambient(), deg)) {
      const bool in = I.contains(m);
      if (in && outside)
        return false;
      if (!in)
        outside = true;
    }
  }
  return true;
}

} // namespace borel
