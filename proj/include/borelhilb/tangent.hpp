#pragma once

#include "borelhilb/linalg.hpp"
#include "borelhilb/monomial.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace borel {

struct SyzygyTerm {
  std::size_t gen;   // index into I.gens()
  Monomial coeff;
  int sign = 1;
};

/// sum_u sign_u * coeff_u * e_u with sum_u sign_u * coeff_u * g_u = 0.
struct SyzygyRelation {
  std::vector<SyzygyTerm> terms;
};

enum class SyzygySource { Taylor, EliahouKervaire };

/// Pairwise relations (lcm/g_u) e_u - (lcm/g_v) e_v. Throws on the zero ideal.
std::vector<SyzygyRelation> taylor_syzygies(const MonomialIdeal& I);

/// m = g * y with g a minimal generator and max index of g <= min index of y.
/// Requires a Borel-fixed I; throws ContractError when m is not in I.
std::pair<Monomial, Monomial> ek_decompose(const MonomialIdeal& I, const Monomial& m);

/// x_j e_g - y e_{g'} for every generator g and j < max index of g.
std::vector<SyzygyRelation> ek_first_syzygies(const MonomialIdeal& I);

/// Default limit on unknowns * relations; BOREL_HILB_MAX_CELLS overrides it.
std::size_t max_cells();

struct HomResult {
  std::size_t dim = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool modular_rank_agrees = true;
  /// Unknown k is the coefficient of labels[k].second in phi(gens[labels[k].first]).
  std::vector<std::pair<std::size_t, Monomial>> labels;
  std::vector<SparseVec> basis;
};

/// Degree-zero Hom(I, S/I) as the solution space of the syzygy constraints.
/// Throws ResourceError when the system exceeds max_cells().
HomResult hom_degree_zero(const MonomialIdeal& I, SyzygySource source = SyzygySource::Taylor);

/// Degree-zero Hom of the truncation I_{>=e} into S/I_{>=e}. For e at least
/// the Gotzmann number this is the tangent space of the Hilbert scheme at I,
/// which can exceed Hom(I, S/I)_0 when S/I has depth 1.
/// Throws ContractError when e is below the top generator degree.
HomResult hom_truncated(const MonomialIdeal& I, int e, SyzygySource source = SyzygySource::Taylor);

struct TrivialResult {
  std::size_t dim = 0;
  bool all_in_hom = true; // every derivation vector satisfies the constraints
  std::vector<SparseVec> basis;
};

/// Span of the vectors induced by x_a d/dx_b, a != b.
TrivialResult trivial_deformations(const MonomialIdeal& I, SyzygySource source = SyzygySource::Taylor);

enum class Comparison { Lemma, Regularity, Unknown };
std::string to_string(Comparison c);

/// "lemma" when I = x0(x0..x_{n-1}) + x1^q(x1..x_p) with q >= 1, 1 <= p <= n-2
/// or q = 1, p = n-1; "regularity" when I is saturated Borel, generated in one
/// degree e and HF(e) = HP(e); otherwise unknown.
Comparison comparison_flag(const MonomialIdeal& I);

struct TangentReport {
  MonomialIdeal ideal;
  std::size_t dim_hom = 0;
  std::size_t dim_trivial = 0;
  std::size_t dim_nontrivial = 0;
  Comparison comparison = Comparison::Unknown;
  bool modular_rank_agrees = true;
  bool trivial_in_hom = true;
};

TangentReport tangent_report(const MonomialIdeal& I, SyzygySource source = SyzygySource::Taylor);

} // namespace borel
