#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhalg/poset.hpp"

namespace qhalg {

enum class ArrowDir { Up, Down, None };

struct Arrow {
  int id = 0;
  int source = 0;
  int target = 0;
  ArrowDir dir = ArrowDir::None;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver. Arrow ids are their positions in `arrows()`.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertices, std::vector<Arrow> arrows);

  /// Doubled Hasse diagram: for the e-th covering pair (lex order) the up
  /// arrow gets id 2e and the down arrow id 2e+1.
  static Quiver doubled_hasse(const Poset& p);

  int vertices() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_.at(id); }
  const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
  const std::vector<int>& in_arrows(int v) const { return in_.at(v); }
  /// The unique arrow s -> t, if there is exactly one.
  std::optional<int> arrow_between(int s, int t) const;
  /// Same ids, endpoints swapped, up/down exchanged.
  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

/// A path; `arrows` in traversal order. Empty arrows means the trivial path.
struct Path {
  int start = 0;
  int end = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return {v, v, {}}; }
  std::size_t length() const { return arrows.size(); }
  bool is_increasing(const Quiver& q) const;
  bool is_decreasing(const Quiver& q) const;
  /// Vertex sequence start, ..., end.
  std::vector<int> vertices(const Quiver& q) const;
  /// "1-2-4-2-1"
  std::string str(const Quiver& q) const;
  /// The path traversed backwards in the opposite quiver.
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    return std::tie(a.start, a.end, a.arrows) <=> std::tie(b.start, b.end, b.arrows);
  }
};

/// p1 · p2: traverse p2 first, then p1. Throws if they do not compose.
Path compose(const Path& p1, const Path& p2, const Quiver& q);
/// Path along the given vertex sequence; each consecutive pair must be
/// joined by exactly one arrow.
Path path_from_vertices(const Quiver& q, const std::vector<int>& vertices);
bool is_valid_path(const Path& p, const Quiver& q);

/// The fixed paths p(j,i,k) for i above both j and k.
class CanonicalPathTable {
 public:
  CanonicalPathTable(const Poset& p, const Quiver& q);

  const Path& get(int j, int i, int k) const;
  /// Fixed increasing path j -> i (smallest admissible upper cover first).
  Path up_chain(int j, int i) const;
  /// Fixed decreasing path i -> k (smallest admissible lower cover first).
  Path down_chain(int i, int k) const;
  std::size_t size() const { return table_.size(); }
  const std::map<std::tuple<int, int, int>, Path>& entries() const { return table_; }
  /// The apexes i of the canonical paths from j to k, ascending.
  ElementSet apexes(int j, int k) const;

 private:
  Poset poset_;
  Quiver quiver_;
  std::map<std::tuple<int, int, int>, Path> table_;
};

}  // namespace qhalg
