#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhalg/tilting.hpp"

namespace qhalg {

/// R(A) = End_A(T)^op for T = ⊕ T(a). Elements of Hom(T(a), T(b)) are
/// products e_a x e_b, and x * y = y ∘ x. The presentation lives on the
/// vertices of the opposite poset: summand a sits at vertex vertex_of[a].
struct RingelDual {
  int n = 0;
  std::vector<Representation> summands;
  /// Echelon basis of Hom(T(a), T(b)), indexed [a][b].
  std::vector<std::vector<std::vector<ModuleMap>>> hom;
  std::vector<std::vector<int>> hom_dims;
  int dim = 0;
  bool associativity_checked = false;
  bool associative = false;

  Poset poset;
  std::vector<int> vertex_of, summand_of;
  AlgebraPtr algebra;
  /// Per presentation arrow s -> t: the map in Hom(T(summand_of[t]), T(summand_of[s])).
  std::vector<ModuleMap> arrow_maps;
  /// The presentation quiver is the doubled Hasse quiver of `poset`.
  bool doubled_hasse = false;
  int max_path_length = 0;
  bool dim_matches = false;
};

/// Builds R(A) from the given summands without any gate. Throws
/// TiltingIncomplete when some End(T(a)) is not local in the expected way.
RingelDual ringel_dual(const QHContext& ctx, const std::vector<Representation>& summands);
/// Gated: every T(i) must pass the equivalence battery positively.
RingelDual ringel_dual(const QHContext& ctx, std::uint64_t seed = 1);

/// Hom_A(T, M) as a left R(A)-module.
Representation ringel_functor(const RingelDual& r, const Representation& m);

/// Algebra isomorphism A -> B fixing vertices and sending each arrow to a
/// nonzero multiple of the arrow with the same ends. NotFound only when the
/// dimensions or arrow counts differ.
SearchVerdict arrow_scaling_isomorphism(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b,
                                        int budget = 4096);

struct RingelReport {
  CharacteristicTilting tilting;
  bool formula_all = false;
  bool formula_inconclusive = false;
  bool built = false;
  std::string build_error;
  RingelDual dual;
  QHReport dual_report;
  bool dual_one_qh = false;
  bool dual_inconclusive = false;
  /// R(A) is 1-qh iff every T(i) matched the formula.
  bool biconditional = false;
  /// Checks (a)-(d) on R(A) and the functor multiplicity checks.
  std::vector<Condition> checks;
  SearchVerdict isomorphic_to_parent = SearchVerdict::Inconclusive;

  const Condition* find(const std::string& prefix) const;
};

RingelReport ringel_report(const QHContext& ctx, std::uint64_t seed = 1);

}  // namespace qhalg
