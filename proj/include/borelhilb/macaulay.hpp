#pragma once

#include "borelhilb/hilbert_poly.hpp"
#include "borelhilb/monomial.hpp"

#include <string>
#include <vector>

namespace borel {

/// P(t) = sum_{i=0}^{d} binom(t+i, i+1) - binom(t+i-m_i, i+1)
/// with m_0 >= m_1 >= ... >= m_d >= 1, and a_d = m_d, a_i = m_i - m_{i+1}.
struct MacaulayExpansion {
  std::vector<long> m;
  std::vector<long> a;

  int d() const noexcept { return static_cast<int>(m.size()) - 1; }
  bool operator==(const MacaulayExpansion&) const = default;
};

/// Top-down extraction. Throws InadmissibleError when P is not the Hilbert
/// polynomial of a nonempty subscheme (P <= 0 included).
MacaulayExpansion macaulay_expansion(const HilbertPoly& P);

/// Inverse of macaulay_expansion. Throws ContractError unless m is weakly
/// decreasing and nonnegative.
HilbertPoly reconstruct(const std::vector<long>& m);

/// Q(i_1, ..., i_l; a_{i_1}, ..., a_{i_l}) + plus_constant.
struct QNotation {
  std::vector<int> indices; // strictly decreasing
  std::vector<long> values; // each >= 1
  long plus_constant = 0;

  /// Same polynomial with plus_constant folded into a_0.
  QNotation normalized() const;
  /// Dense a-vector (a_0, ..., a_d) after folding.
  std::vector<long> a_vector() const;
  /// "Q(2,1;3,1)+1" style text.
  std::string to_string() const;

  /// Equality of the represented polynomials.
  bool operator==(const QNotation& o) const;
};

/// Throws ContractError on malformed notation.
HilbertPoly q_to_poly(const QNotation& q);
/// Nonzero a_i of the Macaulay expansion, plus_constant 0.
QNotation poly_to_q(const HilbertPoly& P);

/// Delta of a Q-notation: shift indices down by one, dropping index 0.
QNotation delta_q(const QNotation& q);

/// The saturated lexicographic ideal of k[x0..xn] with Hilbert polynomial P.
/// Throws InadmissibleError if P is inadmissible or deg P > n-1.
MonomialIdeal lex_ideal(const HilbertPoly& P, int n);

/// True iff every graded piece of I in degrees 0..max_degree is an initial
/// lex segment of the monomials of that degree.
bool is_lex_segment_ideal(const MonomialIdeal& I, int max_degree);

} // namespace borel
