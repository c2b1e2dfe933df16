#pragma once

#include "borelhilb/enumerate.hpp"
#include "borelhilb/hilbert_poly.hpp"
#include "borelhilb/monomial.hpp"
#include "borelhilb/tangent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace borel {

enum class FamilyKind { Unique, TwoPoly1, TwoPoly2, ThreeKnown, Unclassified };

std::string to_string(FamilyKind k);

/// Closed-form family of a Hilbert polynomial. For the two-point kinds
/// P = Q(d;a_d)+1 (poly1) or P = Q(d,r;a_d,1)+1 (poly2); for ThreeKnown the
/// label names the family.
struct FamilyTag {
  FamilyKind kind = FamilyKind::Unclassified;
  int d = -1;
  int r = -1;
  long a_d = 0;
  std::string label;

  std::string to_string() const;
  bool is_two() const { return kind == FamilyKind::TwoPoly1 || kind == FamilyKind::TwoPoly2; }
};

/// P = binom(t+b, b) + 1 or a_0 = 0. Throws InadmissibleError if deg P > n-2.
bool is_unique_borel(const HilbertPoly& P, int n);

/// Unique, two-point (with parameters), a known three-point family, or
/// unclassified. Throws InadmissibleError if P is inadmissible or deg P > n-2.
FamilyTag classify_two_borel(const HilbertPoly& P, int n);

struct DistinguishedPair {
  MonomialIdeal lex;
  MonomialIdeal exp;
};

/// Closed-form lexicographic and expansive ideals of a two-point family.
/// Throws ContractError for other tags or when n < d + 2.
DistinguishedPair distinguished_pair(const FamilyTag& tag, int n);

/// One piece of the general point of the lexicographic component.
struct GeneralPiece {
  int plane = 0;   // ambient linear space P^plane
  long degree = 0; // hypersurface degree; 1 means a linear space of dimension plane-1
};

struct GeneralPoint {
  std::vector<GeneralPiece> pieces; // by increasing plane dimension
  long isolated_points = 0;
  std::string to_string() const;
};

/// Flag-and-hypersurfaces description from the nonzero a_i.
/// Throws InadmissibleError if deg P > n-2.
GeneralPoint describe_general_point(const HilbertPoly& P, int n);

/// A literature statement attached to a polynomial family. Never computed.
struct Claim {
  std::string text;
  std::string source;
  std::string guard;
};

/// Claims whose guard matches (P, n, tag, borel_count).
std::vector<Claim> matching_claims(const HilbertPoly& P, int n, const FamilyTag& tag, std::size_t borel_count);

/// The full claims table with guards rendered as text.
std::vector<Claim> all_claims();

struct SchemeReport {
  HilbertPoly poly;
  int n = 0;
  std::size_t borel_count = 0;
  FamilyTag family;
  std::vector<MonomialIdeal> ideals;
  std::optional<DistinguishedPair> pair;
  std::optional<GeneralPoint> general_point;
  std::vector<Claim> claims;
  std::vector<TangentReport> tangent;
  std::vector<LevelStats> stats;
};

/// Enumeration, classification, description, claims and optional tangent
/// reports. Supports deg P <= n-1; family and description need deg P <= n-2.
SchemeReport scheme_report(const HilbertPoly& P, int n, bool with_tangent, unsigned jobs = 1);

} // namespace borel
