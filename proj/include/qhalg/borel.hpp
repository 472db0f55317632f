#pragma once

#include <string>
#include <vector>

#include "qhalg/qh.hpp"

namespace qhalg {

struct UniquenessReport {
  bool pass = false;
  /// Pairs (j, i) with j < i whose increasing (and decreasing) paths were compared.
  int pairs_checked = 0;
  int paths_compared = 0;
  /// First pair of parallel monotone paths with different classes.
  std::string witness;
};

/// All increasing paths j -> i define the same algebra element, and so do all
/// decreasing paths i -> j.
UniquenessReport path_uniqueness_check(const QHContext& ctx);

struct BorelPair {
  /// Up-arrows of the Hasse quiver with every commutativity relation.
  AlgebraPtr borel;
  /// borel^op.
  AlgebraPtr delta_subalgebra;
  bool uniqueness_certified = false;
  /// Number of pairs j ≤ i.
  int comparable_pairs = 0;
  /// The increasing chains j -> i stay independent in A.
  bool embeds = false;
  /// dim P_C(j) = dim Δ(j) for every j.
  bool projectives_match = false;
};

/// Throws UniquenessFailed with the witness paths when the check fails.
BorelPair borel_subalgebras(const QHContext& ctx);

}  // namespace qhalg
