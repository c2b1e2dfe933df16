#include "borelhilb/monomial.hpp"
#include "borelhilb/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace borel {

namespace {

int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r))
    throw ResourceError("monomial exponent overflow");
  return r;
}

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw ContractError("monomials live in different rings: " + a.to_string() + " vs " +
                        b.to_string());
}

} // namespace

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty())
    throw ContractError("a monomial needs at least one variable");
  for (int e : exps_) {
    if (e < 0)
      throw ContractError("negative exponent in monomial");
    degree_ = checked_add(degree_, e);
  }
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n + 1, 0)); }

Monomial Monomial::var(int n, int i) {
  std::vector<int> e(n + 1, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0)
      s.push_back(static_cast<int>(i));
  return s;
}

int Monomial::max_index() const noexcept {
  for (int i = static_cast<int>(exps_.size()) - 1; i >= 0; --i)
    if (exps_[i] > 0)
      return i;
  return -1;
}

int Monomial::min_index() const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0)
      return static_cast<int>(i);
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(*this, other);
  if (degree_ > other.degree_)
    return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ambient(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = checked_add(r.exps_[i], other.exps_[i]);
  r.degree_ = checked_add(degree_, other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this))
    throw ContractError(other.to_string() + " does not divide " + to_string());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ambient(*this, other);
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_ambient(*this, other);
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::times_var(int i, int k) const {
  Monomial r = *this;
  int& e = r.exps_.at(i);
  e = checked_add(e, k);
  if (e < 0)
    throw ContractError("x" + std::to_string(i) + " does not divide " + to_string());
  r.degree_ = checked_add(r.degree_, k);
  return r;
}

Monomial Monomial::lifted(int extra) const {
  std::vector<int> e = exps_;
  e.resize(e.size() + extra, 0);
  return Monomial(std::move(e));
}

Monomial Monomial::restricted(int m) const {
  for (std::size_t i = m + 1; i < exps_.size(); ++i)
    if (exps_[i] != 0)
      throw ContractError("cannot restrict " + to_string() + " to k[x0..x" + std::to_string(m) +
                          "]");
  return Monomial(std::vector<int>(exps_.begin(), exps_.begin() + m + 1));
}

std::string Monomial::to_string() const {
  if (is_one())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += 'x' + std::to_string(i);
    if (exps_[i] > 1)
      s += '^' + std::to_string(exps_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::vector<Monomial> right_shifts(const Monomial& m) {
  std::vector<Monomial> out;
  const int n = m.ambient();
  for (int i = 0; i <= n - 1; ++i)
    if (m[i] > 0)
      out.push_back(m.times_var(i, -1).times_var(i + 1));
  std::sort(out.begin(), out.end(), LexGreater{});
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0)
    return out;
  std::vector<int> e(n + 1, 0);
  // Lex-descending: fill from x0 with as much as possible.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      e[n] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, int n) {
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  for (const auto& g : gens)
    if (g.ambient() != n)
      throw ContractError("generator " + g.to_string() + " is not in k[x0..x" + std::to_string(n) +
                          "]");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return cmp_lex(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant)
      gens_.push_back(std::move(g));
  }
  std::reverse(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_minimal_generator(const Monomial& m) const {
  return std::find(gens_.begin(), gens_.end(), m) != gens_.end();
}

int MonomialIdeal::max_generator_degree() const noexcept {
  int d = 0;
  for (const auto& g : gens_)
    d = std::max(d, g.degree());
  return d;
}

MonomialIdeal MonomialIdeal::lifted() const {
  std::vector<Monomial> g;
  g.reserve(gens_.size());
  for (const auto& m : gens_)
    g.push_back(m.lifted());
  MonomialIdeal out(n_ + 1);
  out.gens_ = std::move(g); // order and minimality are preserved
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i)
      s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << I.to_string(); }

bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient())
    return a.ambient() < b.ambient();
  if (a.size() != b.size())
    return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = cmp_lex(a.gens()[i], b.gens()[i]);
    if (c != 0)
      return c > 0;
  }
  return false;
}

std::size_t MonomialIdealHash::operator()(const MonomialIdeal& I) const noexcept {
  std::size_t h = std::hash<int>{}(I.ambient());
  for (const auto& g : I.gens())
    for (int e : g.exps())
      h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool is_borel_fixed(const MonomialIdeal& I) {
  for (const auto& m : I.gens()) {
    for (int j = 1; j < static_cast<int>(m.nvars()); ++j) {
      if (m[j] == 0)
        continue;
      for (int i = 0; i < j; ++i)
        if (!I.contains(m.times_var(j, -1).times_var(i)))
          return false;
    }
  }
  return true;
}

bool is_saturated_borel(const MonomialIdeal& I) {
  if (!is_borel_fixed(I))
    throw ContractError("is_saturated_borel requires a Borel-fixed ideal, got " + I.to_string());
  const int n = I.ambient();
  return std::none_of(I.gens().begin(), I.gens().end(),
                      [n](const Monomial& g) { return g[n] > 0; });
}

MonomialIdeal saturate_borel(const MonomialIdeal& I) {
  if (!is_borel_fixed(I))
    throw ContractError("saturate_borel requires a Borel-fixed ideal, got " + I.to_string());
  const int n = I.ambient();
  std::vector<Monomial> g;
  for (const auto& m : I.gens())
    g.push_back(m[n] > 0 ? m.times_var(n, -m[n]) : m);
  return MonomialIdeal(n, std::move(g));
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& I, int d) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(I.ambient(), d))
    if (!I.contains(m))
      out.push_back(std::move(m));
  return out;
}

bool is_expandable(const MonomialIdeal& I, const Monomial& m) {
  if (!I.is_minimal_generator(m))
    throw ContractError(m.to_string() + " is not a minimal generator of " + I.to_string());
  for (const auto& s : right_shifts(m))
    if (I.is_minimal_generator(s))
      return false;
  return true;
}

MonomialIdeal expand(const MonomialIdeal& I, const Monomial& m) {
  if (!is_expandable(I, m))
    throw ContractError(m.to_string() + " is not expandable in " + I.to_string());
  const int n = I.ambient();
  const int r = m.is_one() ? 0 : m.max_index();
  std::vector<Monomial> g;
  g.reserve(I.size() + n);
  for (const auto& h : I.gens())
    if (h != m)
      g.push_back(h);
  for (int i = r; i <= n - 1; ++i)
    g.push_back(m.times_var(i));
  return MonomialIdeal(n, std::move(g));
}

std::pair<int, MonomialIdeal> factor_power_x0(const MonomialIdeal& I) {
  if (I.is_zero())
    throw ContractError("factor_power_x0 is undefined on the zero ideal");
  if (!is_borel_fixed(I))
    throw ContractError("factor_power_x0 requires a Borel-fixed ideal, got " + I.to_string());
  int a = std::numeric_limits<int>::max();
  for (const auto& g : I.gens())
    a = std::min(a, g[0]);
  std::vector<Monomial> j;
  for (const auto& g : I.gens())
    j.push_back(g.times_var(0, -a));
  return {a, MonomialIdeal(I.ambient(), std::move(j))};
}

Monomial parse_monomial(const std::string& text, int n) {
  std::vector<int> e(n + 1, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto read_int = [&]() -> long {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i)
      throw ParseError("expected integer in monomial '" + text + "'", start);
    return std::stol(text.substr(start, i - start));
  };
  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size())
      throw ParseError("trailing input in monomial '" + text + "'", i);
    return Monomial(std::move(e));
  }
  while (true) {
    skip_ws();
    if (i >= text.size() || text[i] != 'x')
      throw ParseError("expected variable in monomial '" + text + "'", i);
    ++i;
    std::size_t vpos = i;
    long v = read_int();
    if (v < 0 || v > n)
      throw ParseError("variable x" + std::to_string(v) + " outside k[x0..x" + std::to_string(n) +
                           "]",
                       vpos);
    long p = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      p = read_int();
    }
    e[v] = checked_add(e[v], static_cast<int>(p));
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '*')
      throw ParseError("expected '*' in monomial '" + text + "'", i);
    ++i;
  }
  return Monomial(std::move(e));
}

} // namespace borel
