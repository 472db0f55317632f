#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qhalg {

/// Elements are 0-based internally; every report prints them 1-based.
using ElementSet = std::vector<int>;  // sorted, duplicate-free

enum class Direction { Down, Up };
enum class SequenceKind { T, L };

struct LambdaSet {
  int anchor = 0;
  Direction direction = Direction::Down;
  ElementSet members;
};

struct AdmissibleSequence {
  int anchor = 0;
  SequenceKind kind = SequenceKind::T;
  std::vector<int> seq;
  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;
};

struct DimReport {
  std::vector<int> dim_standard;        // |down(k)|
  std::vector<int> dim_projective;      // sum over up(j) of |down(k)|
  std::vector<std::vector<int>> cartan;  // |up(j) ∩ up(k)|
  int dim_algebra = 0;
};

/// A finite bounded poset.
///
/// Construction re-indexes elements so that the minimum is 0 and the maximum
/// is n-1; the remaining elements keep their relative input order. The
/// original labels are kept for reporting.
class Poset {
 public:
  /// `less` holds pairs (a, b) meaning a < b, 0-based in input order.
  static Poset build(int n, const std::vector<std::pair<int, int>>& less,
                     std::vector<std::string> labels = {});
  static Poset chain(int n);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[idx(a)][idx(b)] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  /// a ◁ b: b covers a.
  bool covers(int a, int b) const;

  const std::vector<std::pair<int, int>>& hasse_up() const { return hasse_; }
  const ElementSet& lower_covers(int j) const { return lower_[idx(j)]; }
  const ElementSet& upper_covers(int j) const { return upper_[idx(j)]; }

  ElementSet down_set(int j) const;
  ElementSet up_set(int j) const;
  LambdaSet order_ideal(int j, Direction d) const;
  /// Union of up-sets of the members of s.
  ElementSet closure_up(const ElementSet& s) const;
  /// Union of down-sets of the members of s.
  ElementSet closure_down(const ElementSet& s) const;

  DimReport predicted_dims() const;
  /// Admissible sequences of the down-set (T) or up-set (L) of j in
  /// lexicographic order: orderings in which no element precedes one below it.
  std::vector<AdmissibleSequence> enumerate_sequences(int j, SequenceKind kind) const;
  /// Lexicographically first linear extension (ascending).
  std::vector<int> linear_extension() const;

  /// The opposite order, relabelled v -> n-1-v so it is again in canonical form.
  Poset opposite() const;
  /// Restriction to a subset containing a unique min and max; members are
  /// renumbered in increasing order.
  Poset restrict(const ElementSet& members) const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Input position of each canonical element.
  const std::vector<int>& original_index() const { return original_; }
  /// Relations as covering pairs, suitable for re-serialisation.
  std::vector<std::pair<int, int>> relations() const { return hasse_; }

  friend bool operator==(const Poset& a, const Poset& b) { return a.leq_ == b.leq_; }

 private:
  int idx(int j) const;

  int n_ = 0;
  std::vector<std::vector<char>> leq_;
  std::vector<std::pair<int, int>> hasse_;
  std::vector<ElementSet> lower_, upper_;
  std::vector<std::string> labels_;
  std::vector<int> original_;
};

ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
bool set_contains(const ElementSet& s, int x);
/// "{1,2,4}" in 1-based labels.
std::string format_set(const ElementSet& s);

}  // namespace qhalg
