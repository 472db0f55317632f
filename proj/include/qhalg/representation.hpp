#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhalg/algebra.hpp"

namespace qhalg {

/// A finite-dimensional left module: one vector space per vertex and one
/// matrix (dim target × dim source) per arrow.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> action);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  int vertices() const { return static_cast<int>(dims_.size()); }
  int dim(int v) const { return dims_.at(v); }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const;
  const Matrix& action(int arrow) const { return action_.at(arrow); }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Action of a path: product of arrow matrices in traversal order.
  Matrix path_matrix(const Path& p) const;
  /// Action of an algebra element restricted to vertex s -> t components.
  Matrix element_matrix(const AlgebraElement& e, int s, int t) const;
  bool satisfies_relations() const;

  /// For P(i): the vertex i and, per vertex, the algebra basis index behind
  /// each coordinate.
  int projective_vertex() const { return proj_vertex_; }
  const std::vector<std::vector<int>>& path_tags() const { return tags_; }

  static Representation zero(AlgebraPtr alg);
  static Representation simple(AlgebraPtr alg, int i);
  /// P(i) = A e_i on basis paths starting at i.
  static Representation projective(AlgebraPtr alg, int i);
  /// I(i) = D(P_{A^op}(i)).
  static Representation injective(AlgebraPtr alg, AlgebraPtr op, int i);

 private:
  AlgebraPtr alg_;
  std::vector<int> dims_;
  std::vector<Matrix> action_;
  int proj_vertex_ = -1;
  std::vector<std::vector<int>> tags_;
};

/// Transposes every arrow matrix; the result lives over `target`, which must
/// carry the opposite quiver.
Representation dualize(const Representation& m, AlgebraPtr target);
Representation direct_sum(const Representation& a, const Representation& b);

/// A module homomorphism: one matrix per vertex (dim N_v × dim M_v).
struct ModuleMap {
  std::vector<Matrix> comp;

  ModuleMap compose_after(const ModuleMap& g) const;  // this ∘ g
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap scaled(const Scalar& s) const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  int rank() const;
  /// The dual map D(N) -> D(M).
  ModuleMap dual() const;
  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

ModuleMap identity_map(const Representation& m);
/// Entries of every component, vertex by vertex, row-major.
Vec flatten(const ModuleMap& f);
ModuleMap unflatten(const Vec& v, const std::vector<int>& source_dims, const std::vector<int>& target_dims,
                    const Field& f);
ModuleMap zero_map(const Representation& m, const Representation& n);
bool is_homomorphism(const ModuleMap& f, const Representation& m, const Representation& n);

/// Per-vertex subspaces of an ambient module, closed under the arrows.
struct Submodule {
  std::vector<Subspace> parts;

  int dim() const;
  std::vector<int> dims() const;
  friend bool operator==(const Submodule&, const Submodule&) = default;
};

Submodule zero_submodule(const Representation& m);
Submodule whole_module(const Representation& m);
/// Smallest submodule containing the given (vertex, vector) generators.
Submodule generated(const Representation& m, const std::vector<std::pair<int, Vec>>& gens);
/// Submodule generated by everything at the listed vertices.
Submodule generated_by_vertices(const Representation& m, const ElementSet& vertices);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersect(const Submodule& a, const Submodule& b);
bool is_submodule(const Representation& m, const Submodule& u);
bool contains(const Submodule& big, const Submodule& small);

/// Every subspace of F_p^d, listed by reduced echelon form. Rejects Q and
/// throws BudgetExceeded past `budget` subspaces.
std::vector<Subspace> all_subspaces(std::size_t d, const Field& f, long budget);
/// Every submodule of m over a prime field, by brute force over the product
/// of the per-vertex subspace lists.
std::vector<Submodule> all_submodules(const Representation& m, long budget = 1L << 20);

Submodule radical(const Representation& m);
Submodule socle(const Representation& m);
Submodule image(const ModuleMap& f, const Representation& n);
Submodule kernel(const ModuleMap& f, const Representation& m);

struct SubRep {
  Representation module;
  ModuleMap inclusion;
};
struct QuotientRep {
  Representation module;
  ModuleMap projection;
};
SubRep as_representation(const Representation& m, const Submodule& u);
QuotientRep quotient(const Representation& m, const Submodule& u);
/// Dimension vector of M / rad M.
std::vector<int> top_dims(const Representation& m);
std::vector<int> socle_dims(const Representation& m);

/// Basis of Hom_A(M, N).
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
/// The map P(i) -> N sending e_i to x (x in N_i).
ModuleMap yoneda_map(const Representation& p, const Representation& n, const Vec& x);

enum class SearchVerdict { Found, NotFound, Inconclusive };

struct MapSearch {
  SearchVerdict verdict = SearchVerdict::Inconclusive;
  std::optional<ModuleMap> map;
  /// 0: decided by invariants, 1: basis element, 2: small combination,
  /// 3: seeded random combination, 4: exhausted.
  int tier = 0;
  std::string reason;
};

enum class MapKind { Injective, Surjective, Isomorphism };

/// Tiered search for a member of Hom(M, N) of the given kind. NotFound is
/// only returned when an exact invariant rules the kind out.
MapSearch find_map(const Representation& m, const Representation& n, MapKind kind, std::uint64_t seed = 1);
MapSearch is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 1);

std::string to_string(SearchVerdict v);

}  // namespace qhalg
