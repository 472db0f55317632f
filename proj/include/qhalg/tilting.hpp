#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhalg/qh.hpp"

namespace qhalg {

/// A(i) = A / J(i), where J(i) is the ideal generated by the idempotents of
/// the vertices outside Λ_(i). Local vertex k of `algebra` is the parent
/// vertex members[k].
struct FactorAlgebra {
  int anchor = 0;
  ElementSet members;
  Poset poset;
  AlgebraPtr algebra;
  /// Canonical paths p(j,l,k) of the parent with apex l outside Λ_(i).
  std::vector<Path> ideal_basis;
  /// dim J(i) computed as the span of x e_l y over l outside Λ_(i).
  int ideal_dim = 0;
  /// The classes of ideal_basis span J(i).
  bool ideal_spanned_by_paths = false;
  bool dim_consistent = false;
  QHReport report;

  int local(int parent_vertex) const;
};

FactorAlgebra factor_algebra(const QHContext& ctx, int i, std::uint64_t seed = 1);

/// Ext¹(Δ(j), Y) as Hom(U, Y) modulo restrictions of maps P(j) -> Y, where U
/// is the kernel of P(j) -> Δ(j). Returns representatives of a basis.
std::vector<ModuleMap> ext1_delta(const QHContext& ctx, int j, const Representation& y);

/// T(i) built from Δ(i) by universal extensions with Δ(j), j < i, taken in
/// decreasing order of a linear extension.
Representation tilting_module(const QHContext& ctx, int i);

struct TiltingSummand {
  int index = 0;
  Representation module;
  /// M = P(1) / Σ_{l∉Λ_(i)} P(l) and M' = ∩_{l∉Λ_(i)} ker(I(1) -> I(l)).
  Representation candidate, dual_candidate;
  GoodFiltrationResult delta_filtration, nabla_filtration;
  bool ext_vanishes = false;
  bool soc_simple = false;
  bool top_simple = false;
  SearchVerdict formula_match = SearchVerdict::Inconclusive;
  SearchVerdict dual_formula_match = SearchVerdict::Inconclusive;
  /// Filtrations of M, attempted only when both flags pass.
  bool candidate_delta_good = false, candidate_nabla_good = false;

  /// Δ- and ∇-good with Ext¹(Δ, T) = 0.
  bool certified() const;
};

TiltingSummand tilting_candidate(const QHContext& ctx, int i, std::uint64_t seed = 1);

struct Condition {
  std::string name;
  bool value = false;
  bool inconclusive = false;
  std::string detail;
};

struct EquivalenceReport {
  int index = 0;
  std::vector<Condition> conditions;
  bool agree = false;
  bool value = false;
  std::string witness;
};

/// (i) A(i) is 1-qh, (ii) T(i) ≅ M, (ii') T(i) ≅ M', (iii) soc T(i) simple,
/// (iii') top T(i) simple.
EquivalenceReport check_T_equivalences(const QHContext& ctx, int i, std::uint64_t seed = 1);
EquivalenceReport check_T_equivalences(const QHContext& ctx, const TiltingSummand& t, std::uint64_t seed = 1);
/// Throws EquivalenceViolated when the conditions disagree.
void certify(const EquivalenceReport& r);

struct CharacteristicTilting {
  std::vector<TiltingSummand> summands;
  std::vector<EquivalenceReport> battery;
  /// (T(i):Δ(j)) and (T(i):∇(j)), indexed [i][j].
  std::vector<std::vector<int>> delta_multiplicity, nabla_multiplicity;
  std::vector<bool> multiplicity_ok;
  /// Every index passed the battery positively.
  bool complete = false;
};

CharacteristicTilting characteristic_tilting(const QHContext& ctx, std::uint64_t seed = 1);

}  // namespace qhalg
