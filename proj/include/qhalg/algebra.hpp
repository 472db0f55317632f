#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qhalg/linalg.hpp"
#include "qhalg/poset.hpp"
#include "qhalg/quiver.hpp"

namespace qhalg {

struct Term {
  Scalar coeff;
  Path path;
};

/// Σ coeff · path = 0. All paths share start and end.
struct Relation {
  std::vector<Term> terms;
};

/// Sparse linear combination of basis elements; zero coefficients are never
/// stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement basis(int b, const Field& f);

  const std::map<int, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int b) const;
  void add(int b, const Scalar& c);
  void add(const AlgebraElement& o, const Scalar& c);
  AlgebraElement scaled(const Scalar& c) const;
  Vec dense(std::size_t dim, const Field& f) const;
  static AlgebraElement from_dense(const Vec& v);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<int, Scalar> terms_;
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// KQ/I with an explicit path basis and structure constants.
///
/// Products follow the path convention p1 · p2 = "traverse p2, then p1", so
/// e_t · p · e_s = p for a path from s to t and left modules are A e_i.
class BoundQuiverAlgebra {
 public:
  /// Closes the relations into a finite-dimensional quotient. The length
  /// bound L grows from the longest relation until every path of length L
  /// reduces to shorter normal forms; L > max_len raises
  /// NotFiniteDimensional.
  static AlgebraPtr build(const Quiver& q, const std::vector<Relation>& relations, int max_len,
                          const Field& f);

  const Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int vertices() const { return quiver_.vertices(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  /// Basis index of a basis path, or -1.
  int index_of(const Path& p) const;
  /// Basis indices of paths starting at v, in basis order.
  const std::vector<int>& basis_from(int v) const { return from_.at(v); }
  /// Basis indices of paths ending at v, in basis order.
  const std::vector<int>& basis_to(int v) const { return to_.at(v); }
  /// Basis indices of paths from s to t.
  std::vector<int> basis_block(int s, int t) const;
  int idempotent_index(int v) const { return idem_.at(v); }
  int arrow_index(int a) const { return arrow_idx_.at(a); }
  /// Longest nonzero path length bound: every path of length > this is zero
  /// or reduces.
  int length_bound() const { return length_bound_; }

  /// Structure constants of basis[x] · basis[y].
  const AlgebraElement& product(int x, int y) const { return mult_[x * basis_.size() + y]; }
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// The class of an arbitrary path of the quiver.
  AlgebraElement normal_form(const Path& p) const;
  AlgebraElement evaluate(const std::vector<Term>& terms) const;
  AlgebraElement one() const;

  /// Arrows reversed, paths reversed, structure constants transposed. Basis
  /// indices are shared with the original.
  AlgebraPtr opposite() const;

 private:
  void index();

  Field field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  std::map<Path, int> index_;
  std::vector<std::vector<int>> from_, to_;
  std::vector<int> idem_, arrow_idx_;
  std::vector<AlgebraElement> mult_;
  int length_bound_ = 0;
};

/// Unknown-coefficient relation shape: path = Σ_{i in slots} c_i · p(j,i,k).
struct RelationTemplate {
  Path path;
  ElementSet slots;
};

/// One template per non-canonical path of length 2..deg. Slots whose
/// canonical path is trivial or a single arrow are dropped so every filled
/// relation stays admissible.
std::vector<RelationTemplate> relation_template(const Poset& p, const CanonicalPathTable& t, int deg);

/// Relation path - Σ c_i p(j,i,k).
Relation fill_template(const RelationTemplate& tpl, const std::vector<Scalar>& coeffs,
                       const CanonicalPathTable& t, const Field& f);

/// The relation along `vertices` minus Σ coeff · p(j, via, k), where j and
/// k are the first and last vertex.
Relation canonical_relation(const Quiver& q, const CanonicalPathTable& t, const std::vector<int>& vertices,
                            const std::vector<std::pair<Scalar, int>>& via, const Field& f);

}  // namespace qhalg
