#pragma once

#include <cstdint>
#include <vector>

#include "qhalg/qh.hpp"

namespace qhalg {

struct SearchHit {
  /// One coefficient per template slot, templates in order.
  std::vector<Scalar> coefficients;
  AlgebraPtr algebra;
};

struct SearchResult {
  std::vector<RelationTemplate> templates;
  std::vector<SearchHit> hits;
  long assignments = 0;
  /// Assignments whose relations failed to build a finite-dimensional algebra.
  long rejected = 0;
};

/// Every assignment of pool values to the template slots, in lexicographic
/// order of pool positions; keeps the algebras certified 1-qh. Throws
/// BudgetExceeded when there are more than `budget` assignments.
SearchResult search_coefficients(const Poset& p, const std::vector<Scalar>& pool, int deg, int max_len, long budget,
                                 const Field& f, std::uint64_t seed = 1);

/// The relations for one assignment.
std::vector<Relation> fill_templates(const std::vector<RelationTemplate>& templates,
                                     const std::vector<Scalar>& coefficients, const CanonicalPathTable& t,
                                     const Field& f);

}  // namespace qhalg
