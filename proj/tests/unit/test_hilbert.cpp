#include "../oracles.hpp"
#include "helpers.hpp"

#include "borelhilb/error.hpp"
#include "borelhilb/hilbert.hpp"
#include "borelhilb/macaulay.hpp"

#include <doctest.h>

#include <algorithm>

using namespace borel;

TEST_CASE("binomial polynomials") {
  CHECK(binom_poly(1, 2) == P("(t^2+t)/2"));
  CHECK(binom_poly(0, 1) == P("t"));
  CHECK(binom_poly(2, 2) == P("(t^2+3t+2)/2"));
  CHECK(binom_poly(5, 0) == P("1"));
  CHECK_THROWS_AS(binom_poly(0, -1), ContractError);
  for (long s = -3; s <= 3; ++s)
    for (int k = 0; k <= 4; ++k)
      for (long t = std::max(0L, -s); t <= 6; ++t)
        CHECK(binom_poly(s, k).at(t) == oracle::binom(t + s, k));
}

TEST_CASE("polynomial arithmetic and printing") {
  HilbertPoly p = P("3/2*t^2 + 5/2*t");
  CHECK(p.to_string() == "3/2*t^2 + 5/2*t");
  CHECK(P(p.to_string()) == p);
  CHECK(P("t+1").shifted(2) == P("t+3"));
  CHECK(delta(P("3t+1")) == P("3"));
  CHECK(delta(P("7")).is_zero());
  CHECK_THROWS_AS(P("t/2").at(1), ContractError);
}

TEST_CASE("Hilbert function") {
  CHECK(hilbert_function(J("(x0, x1, x2^4)", 3), 10) == 4);
  CHECK(hilbert_function(MonomialIdeal(2), 2) == 6);
  CHECK(hilbert_function(J("(x0, x1^3, x1^2*x2)", 3), 5) == 12);
}

TEST_CASE("Hilbert series numerator") {
  CHECK(hilbert_series_numerator(J("(x0)", 1)) == SeriesNumerator{1, -1});
  CHECK(hilbert_series_numerator(J("(x0^2, x0*x1, x1^2)", 2)) == SeriesNumerator{1, 0, -3, 2});
  CHECK(hilbert_series_numerator(MonomialIdeal(3)) == SeriesNumerator{1});
}

TEST_CASE("series numerator agrees with inclusion-exclusion") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    MonomialIdeal I = oracle::random_ideal(rng, 1 + k % 4, 7, 5);
    CHECK(hilbert_series_numerator(I) == oracle::inclusion_exclusion(I));
  }
}

TEST_CASE("Hilbert polynomial") {
  CHECK(hilbert_polynomial(J("(x0^2, x0*x1, x1^2, x0*x2^2)", 3)) == P("2t+3"));
  CHECK(hilbert_polynomial(J("(x0)", 3)) == P("binom(t+2,2)"));
  CHECK(hilbert_polynomial(J("(x0, x1^4, x1^3*x2)", 3)) == P("3t+1"));
  CHECK(hilbert_polynomial(MonomialIdeal::unit(3)).is_zero());
  CHECK(hilbert_polynomial(MonomialIdeal(2)) == P("binom(t+2,2)"));
}

TEST_CASE("Hilbert polynomial matches the Hilbert function in high degree") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    MonomialIdeal I = oracle::borel_closure(oracle::random_ideal(rng, 1 + k % 4, 4, 4));
    HilbertPoly p = hilbert_polynomial(I);
    const int reg = regularity_borel(I);
    for (int d = reg; d <= reg + 4; ++d)
      CHECK(p.at(d) == oracle::hf(I, d));
  }
}

TEST_CASE("regularity of Borel ideals") {
  CHECK(regularity_borel(J("(x0, x1^4, x1^3*x2)", 3)) == 4);
  CHECK(regularity_borel(J("(x0)", 3)) == 1);
  CHECK(regularity_borel(J("(x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2)", 3)) == 2);
  CHECK_THROWS_AS(regularity_borel(J("(x1)", 2)), ContractError);
}

TEST_CASE("Macaulay expansion") {
  auto e = macaulay_expansion(P("3t+1"));
  CHECK(e.m == std::vector<long>{4, 3});
  CHECK(e.a == std::vector<long>{1, 3});
  auto f = macaulay_expansion(P("2t+2"));
  CHECK(f.m == std::vector<long>{3, 2});
  CHECK(f.a == std::vector<long>{1, 2});
  CHECK_THROWS_AS(macaulay_expansion(P("t^2")), InadmissibleError);
  CHECK_THROWS_AS(macaulay_expansion(P("0")), InadmissibleError);
  CHECK_THROWS_AS(macaulay_expansion(P("-2")), InadmissibleError);
  CHECK_THROWS_AS(macaulay_expansion(P("t/2")), InadmissibleError);
  CHECK(reconstruct({4, 3}) == P("3t+1"));
  CHECK_THROWS_AS(reconstruct({2, 3}), ContractError);
}

TEST_CASE("Macaulay expansion is the Hilbert polynomial of the lex ideal") {
  for (long m1 = 1; m1 <= 4; ++m1)
    for (long m0 = m1; m0 <= m1 + 4; ++m0) {
      HilbertPoly p = reconstruct({m0, m1});
      CHECK(hilbert_polynomial(lex_ideal(p, 3)) == p);
    }
}

TEST_CASE("Q-notation") {
  CHECK(q_to_poly(QNotation{{1}, {2}, 0}) == P("2t+1"));
  CHECK(q_to_poly(QNotation{{1}, {2}, 1}) == P("2t+2"));
  CHECK(q_to_poly(QNotation{{1, 0}, {1, 1}, 1}) == P("t+3"));
  CHECK(q_to_poly(QNotation{{2, 1}, {2, 1}, 1}) == P("2binom(t+2,2)-1"));
  CHECK(poly_to_q(P("3t+1")).to_string() == "Q(1,0;3,1)");
  CHECK(QNotation{{1}, {2}, 1} == QNotation{{1, 0}, {2, 1}, 0});
  CHECK_THROWS_AS(q_to_poly(QNotation{{1, 1}, {2, 1}, 0}), ContractError);
  CHECK_THROWS_AS(q_to_poly(QNotation{{1}, {0}, 0}), ContractError);
}

TEST_CASE("Delta of Q-notation") {
  CHECK(delta(P("3t+1")) == P("3"));
  CHECK(delta(P("5")).is_zero());
  QNotation q{{2, 1}, {3, 1}, 0};
  CHECK(delta_q(q) == QNotation{{1, 0}, {3, 1}, 0});
  CHECK(delta(q_to_poly(q)) == q_to_poly(delta_q(q)));
  QNotation z{{2, 0}, {2, 5}, 0};
  CHECK(delta_q(z) == QNotation{{1}, {2}, 0});
  CHECK(delta(q_to_poly(z)) == q_to_poly(delta_q(z)));
}

TEST_CASE("lex ideals") {
  CHECK(lex_ideal(P("3t+1"), 3) == J("(x0, x1^4, x1^3*x2)", 3));
  CHECK(lex_ideal(P("4"), 3) == J("(x0, x1, x2^4)", 3));
  CHECK(lex_ideal(P("2t+2"), 3) == J("(x0, x1^3, x1^2*x2)", 3));
  CHECK(lex_ideal(P("1"), 2) == J("(x0, x1)", 2));
  CHECK(lex_ideal(P("binom(t+2,2)"), 3) == J("(x0)", 3));
  CHECK_THROWS_AS(lex_ideal(P("t^2"), 3), InadmissibleError);
  CHECK_THROWS_AS(lex_ideal(P("binom(t+3,3)"), 3), InadmissibleError);
}

TEST_CASE("lex ideals are lex segments with the right polynomial") {
  for (int n = 2; n <= 4; ++n)
    for (long m2 = 0; m2 <= 2; ++m2)
      for (long m1 = std::max(m2, 1L); m1 <= 3; ++m1)
        for (long m0 = m1; m0 <= m1 + 3; ++m0) {
          std::vector<long> m{m0, m1};
          if (m2 > 0)
            m.push_back(m2);
          if (static_cast<int>(m.size()) - 1 > n - 1)
            continue;
          HilbertPoly p = reconstruct(m);
          MonomialIdeal L = lex_ideal(p, n);
          CHECK(is_borel_fixed(L));
          CHECK(is_saturated_borel(L));
          CHECK(is_lex_segment_ideal(L, L.max_generator_degree() + 1));
          CHECK(hilbert_polynomial(L) == p);
        }
  CHECK_FALSE(is_lex_segment_ideal(J("(x0^2, x0*x1, x1^2)", 2), 2));
}
