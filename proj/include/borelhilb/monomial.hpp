#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace borel {

/// A monomial x0^e0 * ... * xn^en in the homogeneous coordinate ring of P^n.
/// The ambient dimension n is implied by the length of the exponent vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps);

  /// The constant monomial 1 in k[x0..xn].
  static Monomial one(int n);
  /// The variable x_i in k[x0..xn].
  static Monomial var(int n, int i);

  int ambient() const noexcept { return static_cast<int>(exps_.size()) - 1; }
  std::size_t nvars() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const int> exps() const noexcept { return exps_; }

  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Indices of the variables dividing this monomial, ascending.
  std::vector<int> support() const;
  /// Largest / smallest index in the support; -1 for the constant monomial.
  int max_index() const noexcept;
  int min_index() const noexcept;

  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the divisor must divide this monomial.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Multiply by x_i^k (k may be negative as long as the result is a monomial).
  Monomial times_var(int i, int k = 1) const;

  /// The same exponents viewed in k[x0..x_{n+extra}].
  Monomial lifted(int extra = 1) const;
  /// Drop trailing variables down to k[x0..x_m]; they must not occur.
  Monomial restricted(int m) const;

  std::string to_string() const;

  bool operator==(const Monomial& other) const = default;

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Lexicographic comparison with x0 > x1 > ... > xn. Monomials of different
/// degree compare by degree first. Throws ContractError on dimension mismatch.
std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b);

/// Strict weak order placing lex-larger monomials first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp_lex(a, b) > 0; }
};

/// The set { m*x_{i+1}/x_i : x_i | m, 0 <= i <= n-1 }, lex-descending.
std::vector<Monomial> right_shifts(const Monomial& m);

/// All monomials of degree d in k[x0..xn], lex-descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// A monomial ideal of k[x0..xn] stored by its minimal generators in
/// descending lex order (degree first). Equality is equality of these lists.
class MonomialIdeal {
public:
  /// The zero ideal of k[x0..xn].
  explicit MonomialIdeal(int n = 0) : n_(n) {}

  /// Minimalizes and sorts the given generators.
  MonomialIdeal(int n, std::vector<Monomial> gens);

  static MonomialIdeal unit(int n);

  int ambient() const noexcept { return n_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;
  bool is_minimal_generator(const Monomial& m) const;
  int max_generator_degree() const noexcept;

  /// Same generators in k[x0..x_{n+1}].
  MonomialIdeal lifted() const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const = default;

private:
  int n_;
  std::vector<Monomial> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

/// Total order on ideals: ambient, then generator count, then generators
/// pairwise in lex-descending order. Used for canonical sorting of results.
bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b);

struct CanonicalLess {
  bool operator()(const MonomialIdeal& a, const MonomialIdeal& b) const {
    return canonical_less(a, b);
  }
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& I) const noexcept;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, int n);

/// Exchange-property test on the minimal generators.
bool is_borel_fixed(const MonomialIdeal& I);

/// True iff no minimal generator involves x_n. Requires a Borel-fixed ideal.
bool is_saturated_borel(const MonomialIdeal& I);

/// Saturation of a Borel-fixed ideal (set x_n = 1 and re-minimalize).
MonomialIdeal saturate_borel(const MonomialIdeal& I);

/// Degree-d monomials outside I, lex-descending.
std::vector<Monomial> standard_monomials(const MonomialIdeal& I, int d);

/// A minimal generator is expandable iff none of its right shifts is a
/// minimal generator. Throws ContractError when m is not a minimal generator.
bool is_expandable(const MonomialIdeal& I, const Monomial& m);

/// Replace the expandable generator m by m*x_r, ..., m*x_{n-1} where r is the
/// largest index dividing m. The generator 1 of the unit ideal expands to
/// (x0, ..., x_{n-1}).
MonomialIdeal expand(const MonomialIdeal& I, const Monomial& m);

/// Writes a nonzero Borel-fixed ideal as x0^a * J. Returns (a, J).
std::pair<int, MonomialIdeal> factor_power_x0(const MonomialIdeal& I);

/// Parses "x0^2*x1" style monomial text in k[x0..xn]. "1" is the constant.
Monomial parse_monomial(const std::string& text, int n);

} // namespace borel
