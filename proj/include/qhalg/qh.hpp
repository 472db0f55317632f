#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhalg/representation.hpp"

namespace qhalg {

/// Standard and costandard modules of an algebra with respect to a poset on
/// its vertices. ∇ is computed over the opposite algebra and dualised back.
struct QHContext {
  Poset poset;
  AlgebraPtr alg;
  AlgebraPtr op;
  std::vector<Representation> projective, injective, simple;
  std::vector<Representation> delta, nabla;
  /// Standard modules of the opposite algebra, D(∇(i)).
  std::vector<Representation> delta_op;
  /// Kernel of P(i) -> Δ(i) inside P(i).
  std::vector<Submodule> delta_kernel;

  static QHContext make(const Poset& p, AlgebraPtr alg);
  int size() const { return poset.size(); }
  int top() const { return poset.size() - 1; }
};

/// Δ(i) = P(i) modulo the trace of every P(j) with j ≰ i, i.e. the largest
/// quotient of P(i) whose composition factors lie below i.
QuotientRep standard_module(const AlgebraPtr& alg, const Poset& p, int i);
/// ∇(i) = D(Δ_{A^op}(i)).
Representation costandard_module(const AlgebraPtr& alg, const AlgebraPtr& op, const Poset& p, int i);

enum class FiltrationKind { JHDelta, JHNabla, DeltaGood, NablaGood };
std::string to_string(FiltrationKind k);

/// 0 = chain[-1] ⊂ chain[0] ⊂ ... ⊂ chain.back() = ambient; layer t is
/// chain[t] / chain[t-1] and is isomorphic to the module named by labels[t].
struct Filtration {
  Representation ambient;
  std::vector<Submodule> chain;
  std::vector<int> labels;
  FiltrationKind kind = FiltrationKind::DeltaGood;

  std::vector<int> layer_dims(int t) const;
};

struct GoodFiltrationResult {
  bool ok = false;
  std::string reason;
  Filtration filtration;
  /// (M : Δ(j)) or (M : ∇(j)) per vertex.
  std::vector<int> multiplicity;
};

/// Builds a Δ-good filtration by peeling off traces of projectives along a
/// linear extension, largest element first. Every layer is a cyclic quotient
/// of P(j) supported below j with dim Δ(j), hence isomorphic to Δ(j). When
/// the algebra is quasi-hereditary for the order the procedure succeeds
/// exactly on Δ-good modules.
GoodFiltrationResult delta_good_filtration(const QHContext& ctx, const Representation& m);
GoodFiltrationResult nabla_good_filtration(const QHContext& ctx, const Representation& m);

/// Annihilator in M of a submodule of D(M), as a submodule of M.
Submodule annihilator(const Representation& m, const Submodule& u_in_dual);

struct AxiomCheck {
  std::string axiom;
  bool pass = false;
  bool inconclusive = false;
  std::string witness;
};

struct QHReport {
  bool quasi_hereditary = false;
  bool one_quasi_hereditary = false;
  bool reciprocity = false;
  std::vector<AxiomCheck> checks;
  /// [Δ(i):S(j)] and [∇(i):S(j)], indexed [i][j].
  std::vector<std::vector<int>> delta_composition, nabla_composition;
  /// (P(j):Δ(i)) and (I(j):∇(i)), indexed [j][i]; -1 when no filtration.
  std::vector<std::vector<int>> projective_multiplicity, injective_multiplicity;
  std::vector<int> dim_delta, dim_nabla;
  int dim_algebra = 0;
  DimReport predicted;

  const AxiomCheck* find(const std::string& axiom) const;
};

QHReport check_quasi_hereditary(const QHContext& ctx);
/// Runs the qh check first, then the four axioms and the reciprocity line.
QHReport check_one_quasi_hereditary(const QHContext& ctx, std::uint64_t seed = 1);
/// Throws NotQuasiHereditary / NotOneQuasiHereditary naming the first failing
/// axiom, or Inconclusive when only inconclusive searches stand in the way.
void certify(const QHReport& r, bool require_one_qh = true);

struct BasisBlock {
  int j = 0, k = 0;
  ElementSet apexes;
  int rank = 0;
  int block_dim = 0;
  bool pass = false;
};

struct BasisReport {
  std::vector<BasisBlock> blocks;
  int total = 0;
  bool pass = false;
};

/// Checks that the classes of p(j,i,k) over the common upper bounds i form a
/// basis of e_k A e_j for every (j, k).
BasisReport verify_basis_theorem(const BoundQuiverAlgebra& alg, const CanonicalPathTable& t);
/// Throws BasisDefect on the first failing block.
void certify(const BasisReport& r);

/// Arrow counts j -> k read off as dim (rad P(j) / rad² P(j))_k.
std::vector<std::vector<int>> ext_quiver_counts(const AlgebraPtr& alg);
Quiver ext_quiver(const AlgebraPtr& alg);
std::vector<std::vector<int>> arrow_counts(const Quiver& q);

}  // namespace qhalg
