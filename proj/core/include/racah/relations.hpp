#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "racah/ncpoly.hpp"
#include "racah/rewrite.hpp"

namespace racah {

// ---- generators -----------------------------------------------------------

NCPoly gen_C(const std::vector<int>& I, int n);
NCPoly gen_C_mask(std::uint16_t mask, int n);
NCPoly gen_P(int i, int j, int n);
// Canonical sorted D word and the sign of the sorting permutation:
// D_{ijk} = sign * D_{sorted}.
std::pair<NCPoly, int> gen_D(int i, int j, int k, int n);
// sign * D_sorted as a single polynomial.
NCPoly D_of(int i, int j, int k, int n);

// Pentagon labels for rank 4: Omega_i, omega_i as contiguous C's and
// Gamma_i = 1/2 [Omega_{i+2}, Omega_{i-2}].
NCPoly pentagon_assign(Kind kind, int label);
GeneratorId pentagon_C(Kind kind, int label);  // Omega/omega only
NCPoly Om(int i);
NCPoly om(int i);
NCPoly Ga(int i);

// The ten contiguous generators of R(4).
const std::vector<GeneratorId>& contiguous_basis();
bool is_contiguous(std::uint16_t mask);
// C_I as a linear combination of the contiguous basis (rank 4 only).
NCPoly decompose_to_basis(std::uint16_t mask);

// Letter rewrites into other alphabets.
NCPoly expand_to_P(const NCPoly& p);      // C -> sum of P's (pentagon via C)
NCPoly expand_to_C(const NCPoly& p);      // P -> C_ij - C_i - C_j, D -> 1/2[C_ij, C_jk]
NCPoly expand_to_basis(const NCPoly& p);  // everything -> contiguous C's (rank 4)

// ---- relation catalog -------------------------------------------------------

enum class Family {
  central,
  decomposition,
  quad,
  quadB,
  d_cyclic,
  ddef,
  inner_P,
  outer_P,
  outer_lemma_c,
  dd,
  dd_op,
  dd_one_overlap,
  dd_disjoint,
  pdt,
  pd_pair,
  pd_flip,
  pd_shift,
  pd_switch,
  pdi,
  pdi_op,
  gamma_def,
  gamma_sum,
  omega_central,
  omega_commute,
  omega_gamma_commute,
  omega_inner,
  omega_inner_mirror,
  omega_outer,
  omega_outer_mirror,
  pres_rank1,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
std::string family_anchor(Family f);
const std::vector<Family>& all_families();

// Index payload: subset families store index masks, index families store the
// indices in order, pentagon families store labels (omega_central stores
// label, kind, label).
struct RelationId {
  Family family;
  int n;
  std::vector<int> idx;
  std::string payload() const;
  friend bool operator==(const RelationId&, const RelationId&) = default;
};

// lhs - rhs of the relation; lies in the relation ideal.
NCPoly relation(const RelationId& id);
// Every instance of a family over {1..n}; empty when the family does not exist at n.
std::vector<RelationId> enumerate(Family f, int n);
// Closed-form instance count used to cross-check enumerate().
long expected_count(Family f, int n);

// ---- commutator catalog and rewrite system ----------------------------------

struct SystemOptions {
  bool dd_catalog = true;  // D.D commutators as swap rules
  bool pdt = true;         // central-context PDT elimination
  bool derived = true;     // rules derived from [P_x, PDT]
};

// [X, Y] for core letters (P_i, P_ij, D_ijk) from the theorem relations, or
// nullopt when the catalog has no entry (D.D with dd_catalog off).
std::optional<NCPoly> catalog_commutator(const GeneratorId& x, const GeneratorId& y, int n,
                                         bool dd_catalog = true);

RewriteSystem build_rewrite_system(int n, const SystemOptions& opt = {});
// Cached default systems (thread-safe initialization).
const RewriteSystem& default_system(int n);

// [a, cat(b,c)] + [b, cat(c,a)] + [c, cat(a,b)] with catalog values substituted.
NCPoly catalog_jacobi_defect(const GeneratorId& a, const GeneratorId& b, const GeneratorId& c, int n);

// ---- Casimirs and the rank-1 presentation ---------------------------------------

NCPoly casimir_rank1(int n = 3);
NCPoly casimir_frak(int i);

struct Rank1PresentationParams {
  NCPoly alpha, beta, delta;
};
struct Rank1Presentation {
  std::vector<NCPoly> relations;  // [A,B]-2D, [A,D]-(...), [D,B]-(...)
  Rank1PresentationParams params;
  NCPoly A, B, D;
};
// A = C23, B = C12 and D = 1/2[A,B], which is -D_123.
Rank1Presentation presentation_rank1(int n = 3);

}  // namespace racah
