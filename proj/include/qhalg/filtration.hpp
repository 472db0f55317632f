#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhalg/qh.hpp"

namespace qhalg {

/// Context of the opposite algebra over the same poset; Δ and ∇ swap roles
/// up to duality.
QHContext opposite_context(const QHContext& ctx);

/// big / small for submodules small ⊆ big of m.
Representation subquotient(const Representation& m, const Submodule& big, const Submodule& small);

/// The filtration of D(M) dual to a filtration of M (M over the opposite
/// algebra of `target`). Layers appear in reverse order.
Filtration dual_filtration(const Filtration& f, const Representation& dual_ambient, FiltrationKind kind);

/// Throws SequenceRejected unless seq is admissible for j: a T-sequence
/// orders down(j), an L-sequence orders up(j).
void check_sequence(const Poset& p, const AdmissibleSequence& seq);

/// JH kinds take T-sequences and filter Δ(j) or ∇(j); good kinds take
/// L-sequences and filter P(j) or I(j). Every layer is certified against its
/// label; a mismatch throws SubquotientMismatch.
Filtration filtration_from_sequence(const QHContext& ctx, const AdmissibleSequence& seq, FiltrationKind kind,
                                    std::uint64_t seed = 1);

/// Per-layer certification verdicts against S, Δ or ∇ of the label.
std::vector<SearchVerdict> certify_layers(const QHContext& ctx, const Filtration& f, std::uint64_t seed = 1);

/// All chains of trace submodules Σ_{i∈Λ} P(i) ⊆ P(j) (good kinds) or
/// Σ_{i∈Λ} Δ(i) ⊆ Δ(j) (JH kinds) whose layers are standard (resp. simple).
std::vector<Filtration> brute_force_filtrations(const QHContext& ctx, int j, FiltrationKind kind,
                                                std::uint64_t seed = 1);

struct QuotientMultiplicities {
  Representation quotient;
  std::vector<int> multiplicity;
  std::vector<int> predicted;
  bool filtered = false;
  bool matches = false;
};

/// (M1/M2 : Δ(k)) for M_t = Σ_{l∈Λ_t} P(l) inside P(1); with `nabla` the
/// dual statement for ∇ is computed over the opposite algebra.
QuotientMultiplicities quotient_multiplicities(const QHContext& ctx, const ElementSet& lambda1,
                                               const ElementSet& lambda2, bool nabla = false);

struct LocalModule {
  ElementSet lambda;
  Representation module;
};

/// P(j) / Σ_{i∈Λ} P(i) for Λ ⊆ up(j) \ {j}, one per isomorphism class, each
/// checked Δ-good with top S(j).
std::vector<LocalModule> classify_local_delta_good(const QHContext& ctx, int j, std::uint64_t seed = 1);

/// Diagram of the trace submodules of P(j) connected by Δ-layers, in DOT.
std::string filtration_diagram_dot(const QHContext& ctx, int j, std::uint64_t seed = 1);

}  // namespace qhalg
