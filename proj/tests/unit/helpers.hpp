#pragma once

#include "borelhilb/io.hpp"
#include "borelhilb/parse.hpp"

#include <set>
#include <string>
#include <vector>

inline borel::MonomialIdeal J(const std::string& text, int n) { return borel::parse_ideal(text, n); }
inline borel::Monomial M(const std::string& text, int n) { return borel::parse_monomial(text, n); }
inline borel::HilbertPoly P(const std::string& text) { return borel::parse_poly(text); }

inline std::set<std::string> texts(const std::vector<borel::MonomialIdeal>& v) {
  std::set<std::string> s;
  for (const auto& I : v)
    s.insert(I.to_string());
  return s;
}

inline std::set<std::string> texts(std::initializer_list<borel::MonomialIdeal> v) {
  return texts(std::vector<borel::MonomialIdeal>(v));
}
