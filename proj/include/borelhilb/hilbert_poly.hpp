#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

namespace borel {

/// A polynomial in one variable t with exact rational coefficients.
/// Coefficient of t^i sits at index i; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class HilbertPoly {
public:
  HilbertPoly() = default;
  explicit HilbertPoly(std::vector<mpq_class> coeffs);
  HilbertPoly(long constant); // NOLINT: integers convert implicitly

  static HilbertPoly t();

  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  mpq_class coeff(int i) const;
  mpq_class leading() const;

  mpq_class operator()(const mpq_class& x) const;
  mpz_class at(long x) const; // throws if the value is not an integer

  /// P(t + s).
  HilbertPoly shifted(long s) const;

  HilbertPoly& operator+=(const HilbertPoly& o);
  HilbertPoly& operator-=(const HilbertPoly& o);
  HilbertPoly& operator*=(const HilbertPoly& o);
  HilbertPoly& operator*=(const mpq_class& c);
  friend HilbertPoly operator+(HilbertPoly a, const HilbertPoly& b) { return a += b; }
  friend HilbertPoly operator-(HilbertPoly a, const HilbertPoly& b) { return a -= b; }
  friend HilbertPoly operator*(HilbertPoly a, const HilbertPoly& b) { return a *= b; }
  HilbertPoly operator-() const;

  bool operator==(const HilbertPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Human-readable, e.g. "1/2*t^2 + 3/2*t + 1". Re-parses with parse_poly.
  std::string to_string() const;

private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HilbertPoly& p);

/// binom(t + shift, k) = prod_{j<k} (t + shift - j) / k!. binom(., 0) = 1.
HilbertPoly binom_poly(long shift, int k);

/// P(t) - P(t - 1).
HilbertPoly delta(const HilbertPoly& p);

} // namespace borel
