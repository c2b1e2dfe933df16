#include "borelhilb/classify.hpp"
#include "borelhilb/error.hpp"
#include "borelhilb/macaulay.hpp"

namespace borel {

namespace {

void require_codim2(const HilbertPoly& P, int n, const char* op) {
  if (P.degree() > n - 2)
    throw InadmissibleError(std::string(op) + " needs deg P <= n-2, got deg " + std::to_string(P.degree()) +
                            " in P^" + std::to_string(n));
}

// Strictly decreasing run of variables x_from, ..., x_to as generators times m.
void push_times(std::vector<Monomial>& gens, const Monomial& m, int from, int to) {
  for (int i = from; i <= to; ++i)
    gens.push_back(m.times_var(i));
}

HilbertPoly linear(long a, long b) { return HilbertPoly::t() * HilbertPoly(a) + HilbertPoly(b); }

std::optional<std::string> known_three(const HilbertPoly& P, int n) {
  if (P == linear(3, 1))
    return "3t+1";
  if ((n == 2 && P == HilbertPoly(5)) || (n == 3 && P == HilbertPoly(4)))
    return "points";
  if (n == 3 && P == linear(2, 3))
    return "2t+3";
  if (n == 3 && P.degree() == 1 && P.leading().get_den() == 1) {
    const long d = P.leading().get_num().get_si();
    if (d >= 5 && P == linear(d, 3 - (d - 1) * (d - 2) / 2))
      return "plane-curve-two-points";
  }
  if (n >= 3 && P == binom_poly(n - 2, n - 2) + HilbertPoly(3))
    return "linear-space-three-points";
  for (int d = 2; d <= n - 2; ++d) {
    QNotation q{{d, 1}, {2, 1}, 1};
    if (P == q_to_poly(q))
      return "quadric-fold-and-line";
  }
  return std::nullopt;
}

} // namespace

std::string to_string(FamilyKind k) {
  switch (k) {
  case FamilyKind::Unique:
    return "unique";
  case FamilyKind::TwoPoly1:
    return "two_poly1";
  case FamilyKind::TwoPoly2:
    return "two_poly2";
  case FamilyKind::ThreeKnown:
    return "three_known";
  default:
    return "unclassified";
  }
}

std::string FamilyTag::to_string() const {
  switch (kind) {
  case FamilyKind::TwoPoly1:
    return "Q(" + std::to_string(d) + ";" + std::to_string(a_d) + ")+1";
  case FamilyKind::TwoPoly2:
    return "Q(" + std::to_string(d) + "," + std::to_string(r) + ";" + std::to_string(a_d) + ",1)+1";
  case FamilyKind::ThreeKnown:
    return "three:" + label;
  default:
    return borel::to_string(kind);
  }
}

bool is_unique_borel(const HilbertPoly& P, int n) {
  require_codim2(P, n, "is_unique_borel");
  if (P == HilbertPoly(1))
    return true; // a single point; a_0 = 1 but (x_0,...,x_{n-1}) is the only ideal
  MacaulayExpansion e = macaulay_expansion(P);
  if (e.a[0] == 0)
    return true;
  const int b = P.degree();
  return P == binom_poly(b, b) + HilbertPoly(1);
}

FamilyTag classify_two_borel(const HilbertPoly& P, int n) {
  require_codim2(P, n, "classify_two_borel");
  macaulay_expansion(P); // admissibility
  FamilyTag tag;
  if (is_unique_borel(P, n)) {
    tag.kind = FamilyKind::Unique;
    return tag;
  }
  // a_0 >= 1 here, so P - 1 is admissible.
  QNotation q = poly_to_q(P - HilbertPoly(1));
  if (q.indices.size() == 1) {
    const int d = q.indices[0];
    const long A = q.values[0];
    if ((d == 0 && A == 2) || (d == 1 && A != 1 && A != 3) || (d >= 2 && A >= 2)) {
      tag.kind = FamilyKind::TwoPoly1;
      tag.d = d;
      tag.a_d = A;
      return tag;
    }
  } else if (q.indices.size() == 2 && q.values[1] == 1) {
    const int d = q.indices[0], r = q.indices[1];
    const long A = q.values[0];
    if ((r == 0 && A == 1) || (r == 1 && A != 2) || r >= 2) {
      tag.kind = FamilyKind::TwoPoly2;
      tag.d = d;
      tag.r = r;
      tag.a_d = A;
      return tag;
    }
  }
  if (auto label = known_three(P, n)) {
    tag.kind = FamilyKind::ThreeKnown;
    tag.label = *label;
  }
  return tag;
}

DistinguishedPair distinguished_pair(const FamilyTag& tag, int n) {
  if (!tag.is_two())
    throw ContractError("distinguished_pair needs a two-point family, got " + tag.to_string());
  const int d = tag.d;
  const int A = static_cast<int>(tag.a_d);
  if (n < d + 2 || A < 1)
    throw ContractError("family " + tag.to_string() + " is out of range in P^" + std::to_string(n));
  const Monomial one = Monomial::one(n);
  const int s = n - d - 1; // the variable carrying a_d
  const Monomial xa = one.times_var(s, A);

  std::vector<Monomial> lex, exp;
  push_times(exp, one, 0, n - d - 3);
  push_times(exp, Monomial::var(n, n - d - 2), n - d - 2, n - 1);
  push_times(lex, one, 0, n - d - 2);
  if (tag.kind == FamilyKind::TwoPoly1) {
    exp.push_back(xa);
    push_times(lex, xa, s, n - 1);
  } else {
    const int r = tag.r;
    if (r < 0 || r >= d)
      throw ContractError("family " + tag.to_string() + " needs 0 <= r < d");
    push_times(exp, xa, s, n - r - 1);
    push_times(lex, xa, s, n - r - 2);
    push_times(lex, xa.times_var(n - r - 1), n - r - 1, n - 1);
  }
  return {MonomialIdeal(n, std::move(lex)), MonomialIdeal(n, std::move(exp))};
}

std::string GeneralPoint::to_string() const {
  std::string s;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    if (!s.empty())
      s += " union ";
    if (it->degree == 1)
      s += std::to_string(it->plane - 1) + "-plane";
    else
      s += "degree-" + std::to_string(it->degree) + " hypersurface in P^" + std::to_string(it->plane);
  }
  if (isolated_points > 0) {
    if (!s.empty())
      s += " union ";
    s += std::to_string(isolated_points) + (isolated_points == 1 ? " point" : " points");
  }
  return s;
}

GeneralPoint describe_general_point(const HilbertPoly& P, int n) {
  require_codim2(P, n, "describe_general_point");
  MacaulayExpansion e = macaulay_expansion(P);
  GeneralPoint g;
  for (int i = 1; i <= e.d(); ++i)
    if (e.a[i] != 0)
      g.pieces.push_back({i + 1, e.a[i]});
  g.isolated_points = e.a[0];
  return g;
}

SchemeReport scheme_report(const HilbertPoly& P, int n, bool with_tangent, unsigned jobs) {
  SchemeReport rep;
  EnumerationResult en = enumerate_borel(P, n, jobs);
  rep.poly = P;
  rep.n = n;
  rep.ideals = std::move(en.ideals);
  rep.stats = std::move(en.stats);
  rep.borel_count = rep.ideals.size();
  if (P.degree() <= n - 2) {
    rep.family = classify_two_borel(P, n);
    rep.general_point = describe_general_point(P, n);
    if (rep.family.is_two())
      rep.pair = distinguished_pair(rep.family, n);
  }
  rep.claims = matching_claims(P, n, rep.family, rep.borel_count);
  if (with_tangent)
    for (const auto& I : rep.ideals)
      rep.tangent.push_back(tangent_report(I));
  return rep;
}

} // namespace borel
