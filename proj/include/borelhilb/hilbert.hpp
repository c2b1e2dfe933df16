#pragma once

#include "borelhilb/hilbert_poly.hpp"
#include "borelhilb/monomial.hpp"

#include <gmpxx.h>

#include <vector>

namespace borel {

/// Dense integer polynomial in a formal variable u; index = power of u.
using SeriesNumerator = std::vector<mpz_class>;

/// dim_k (S/I)_d by counting standard monomials.
mpz_class hilbert_function(const MonomialIdeal& I, int d);

/// N(u) with sum_d dim (S/I)_d u^d = N(u) / (1-u)^{n+1}, by pivot splitting.
SeriesNumerator hilbert_series_numerator(const MonomialIdeal& I);

/// Coefficient of u^d in N(u) / (1-u)^{n+1}.
mpz_class hilbert_function_from_series(const SeriesNumerator& num, int n, int d);

HilbertPoly hilbert_polynomial(const MonomialIdeal& I);

/// Castelnuovo-Mumford regularity of a Borel-fixed ideal: the largest degree
/// of a minimal generator. Throws ContractError on non-Borel input.
int regularity_borel(const MonomialIdeal& I);

} // namespace borel
