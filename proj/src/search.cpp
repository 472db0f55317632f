#include "qhalg/search.hpp"

#include "qhalg/errors.hpp"

namespace qhalg {

std::vector<Relation> fill_templates(const std::vector<RelationTemplate>& templates,
                                     const std::vector<Scalar>& coefficients, const CanonicalPathTable& t,
                                     const Field& f) {
  std::vector<Relation> rels;
  std::size_t k = 0;
  for (const auto& tpl : templates) {
    if (k + tpl.slots.size() > coefficients.size()) throw InadmissibleRelation("too few coefficients");
    std::vector<Scalar> c(coefficients.begin() + k, coefficients.begin() + k + tpl.slots.size());
    k += tpl.slots.size();
    rels.push_back(fill_template(tpl, c, t, f));
  }
  if (k != coefficients.size()) throw InadmissibleRelation("too many coefficients");
  return rels;
}

SearchResult search_coefficients(const Poset& p, const std::vector<Scalar>& pool, int deg, int max_len, long budget,
                                 const Field& f, std::uint64_t seed) {
  SearchResult r;
  Quiver q = Quiver::doubled_hasse(p);
  CanonicalPathTable t(p, q);
  r.templates = relation_template(p, t, deg);
  if (pool.empty()) return r;
  std::size_t slots = 0;
  for (const auto& tpl : r.templates) slots += tpl.slots.size();
  double total = 1;
  for (std::size_t s = 0; s < slots; ++s) total *= static_cast<double>(pool.size());
  if (total > static_cast<double>(budget))
    throw BudgetExceeded(std::to_string(slots) + " slots over a pool of " + std::to_string(pool.size()) +
                         " give more than " + std::to_string(budget) + " assignments");

  const int expected = p.predicted_dims().dim_algebra;
  std::vector<std::size_t> pos(slots, 0);
  while (true) {
    std::vector<Scalar> coeffs;
    for (std::size_t s = 0; s < slots; ++s) coeffs.push_back(f.embed(pool[pos[s]]));
    ++r.assignments;
    try {
      AlgebraPtr alg = BoundQuiverAlgebra::build(q, fill_templates(r.templates, coeffs, t, f), max_len, f);
      if (static_cast<int>(alg->dim()) == expected &&
          check_one_quasi_hereditary(QHContext::make(p, alg), seed).one_quasi_hereditary)
        r.hits.push_back({coeffs, alg});
    } catch (const NotFiniteDimensional&) {
      ++r.rejected;
    } catch (const InadmissibleRelation&) {
      ++r.rejected;
    }
    // last slot varies fastest
    std::size_t s = slots;
    while (s > 0 && ++pos[s - 1] == pool.size()) pos[--s] = 0;
    if (s == 0) break;
  }
  return r;
}

}  // namespace qhalg
