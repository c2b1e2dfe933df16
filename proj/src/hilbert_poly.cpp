#include "borelhilb/hilbert_poly.hpp"
#include "borelhilb/error.hpp"

#include <algorithm>

namespace borel {

HilbertPoly::HilbertPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_)
    c.canonicalize();
  trim();
}

HilbertPoly::HilbertPoly(long constant) {
  if (constant != 0)
    coeffs_.emplace_back(constant);
}

HilbertPoly HilbertPoly::t() { return HilbertPoly({mpq_class(0), mpq_class(1)}); }

void HilbertPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

mpq_class HilbertPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[i];
}

mpq_class HilbertPoly::leading() const { return coeffs_.empty() ? mpq_class(0) : coeffs_.back(); }

mpq_class HilbertPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

mpz_class HilbertPoly::at(long x) const {
  mpq_class v = (*this)(mpq_class(x));
  if (v.get_den() != 1)
    throw ContractError("polynomial " + to_string() + " is not integral at t=" + std::to_string(x));
  return v.get_num();
}

HilbertPoly HilbertPoly::shifted(long s) const {
  // Horner in the polynomial ring: P(t+s) = (...(c_d (t+s) + c_{d-1})(t+s) ...)
  HilbertPoly ts({mpq_class(s), mpq_class(1)});
  HilbertPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= ts;
    acc += HilbertPoly({*it});
  }
  return acc;
}

HilbertPoly& HilbertPoly::operator+=(const HilbertPoly& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

HilbertPoly& HilbertPoly::operator-=(const HilbertPoly& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

HilbertPoly& HilbertPoly::operator*=(const HilbertPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(r);
  trim();
  return *this;
}

HilbertPoly& HilbertPoly::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_)
    x *= c;
  trim();
  return *this;
}

HilbertPoly HilbertPoly::operator-() const {
  HilbertPoly r = *this;
  for (auto& x : r.coeffs_)
    x = -x;
  return r;
}

std::string HilbertPoly::to_string() const {
  if (is_zero())
    return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0)
      continue;
    mpq_class a = abs(c);
    if (s.empty())
      s += (c < 0 ? "-" : "");
    else
      s += (c < 0 ? " - " : " + ");
    if (i == 0)
      s += a.get_str();
    else {
      if (a != 1)
        s += a.get_str() + "*";
      s += "t";
      if (i > 1)
        s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const HilbertPoly& p) { return os << p.to_string(); }

HilbertPoly binom_poly(long shift, int k) {
  if (k < 0)
    throw ContractError("binom_poly needs k >= 0, got " + std::to_string(k));
  HilbertPoly acc(1);
  mpz_class fact = 1;
  for (int j = 0; j < k; ++j) {
    acc *= HilbertPoly({mpq_class(shift - j), mpq_class(1)});
    fact *= j + 1;
  }
  acc *= mpq_class(1, 1) / mpq_class(fact);
  return acc;
}

HilbertPoly delta(const HilbertPoly& p) { return p - p.shifted(-1); }

} // namespace borel
