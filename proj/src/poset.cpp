#include "qhalg/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qhalg/errors.hpp"

namespace qhalg {

int Poset::idx(int j) const {
  if (j < 0 || j >= n_)
    throw ElementOutOfRange("element " + std::to_string(j + 1) + " outside 1.." + std::to_string(n_));
  return j;
}

Poset Poset::build(int n, const std::vector<std::pair<int, int>>& less, std::vector<std::string> labels) {
  if (n <= 0) throw NotBounded("poset is empty; a least and a greatest element are required");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != n) throw ParseError("label count differs from n");

  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) le[i][i] = 1;
  for (auto [a, b] : less) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ElementOutOfRange("relation mentions an element outside 1.." + std::to_string(n));
    if (a == b) throw NotAPartialOrder("relation " + labels[a] + " < " + labels[a] + " is reflexive");
    le[a][b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (le[i][k])
        for (int j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (le[i][j] && le[j][i])
        throw NotAPartialOrder("relations force " + labels[i] + " = " + labels[j] + " (cycle)");

  std::vector<int> minimal, maximal;
  for (int i = 0; i < n; ++i) {
    bool is_min = true, is_max = true;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (le[j][i]) is_min = false;
      if (le[i][j]) is_max = false;
    }
    if (is_min) minimal.push_back(i);
    if (is_max) maximal.push_back(i);
  }
  if (minimal.size() != 1 || maximal.size() != 1)
    throw NotBounded("poset needs a unique least and a unique greatest element (found " +
                     std::to_string(minimal.size()) + " minimal, " + std::to_string(maximal.size()) +
                     " maximal)");

  // stable re-indexing: min first, max last
  std::vector<int> order{minimal[0]};
  for (int i = 0; i < n; ++i)
    if (i != minimal[0] && i != maximal[0]) order.push_back(i);
  if (n > 1) order.push_back(maximal[0]);

  Poset p;
  p.n_ = n;
  p.original_ = order;
  p.leq_.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    p.labels_.push_back(labels[order[a]]);
    for (int b = 0; b < n; ++b) p.leq_[a][b] = le[order[a]][order[b]];
  }
  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.leq_[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (c != a && c != b && p.leq_[a][c] && p.leq_[c][b]) cover = false;
      if (cover) {
        p.hasse_.emplace_back(a, b);
        p.upper_[a].push_back(b);
        p.lower_[b].push_back(a);
      }
    }
  for (auto& s : p.lower_) std::sort(s.begin(), s.end());
  return p;
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return build(n, rel);
}

bool Poset::covers(int a, int b) const {
  const auto& up = upper_covers(a);
  return std::binary_search(up.begin(), up.end(), idx(b));
}

ElementSet Poset::down_set(int j) const {
  idx(j);
  ElementSet s;
  for (int i = 0; i < n_; ++i)
    if (leq_[i][j]) s.push_back(i);
  return s;
}

ElementSet Poset::up_set(int j) const {
  idx(j);
  ElementSet s;
  for (int i = 0; i < n_; ++i)
    if (leq_[j][i]) s.push_back(i);
  return s;
}

LambdaSet Poset::order_ideal(int j, Direction d) const {
  return {j, d, d == Direction::Down ? down_set(j) : up_set(j)};
}

ElementSet Poset::closure_up(const ElementSet& s) const {
  ElementSet out;
  for (int i = 0; i < n_; ++i)
    for (int x : s)
      if (leq(x, i)) {
        out.push_back(i);
        break;
      }
  return out;
}

ElementSet Poset::closure_down(const ElementSet& s) const {
  ElementSet out;
  for (int i = 0; i < n_; ++i)
    for (int x : s)
      if (leq(i, x)) {
        out.push_back(i);
        break;
      }
  return out;
}

DimReport Poset::predicted_dims() const {
  DimReport r;
  for (int k = 0; k < n_; ++k) r.dim_standard.push_back(static_cast<int>(down_set(k).size()));
  r.cartan.assign(n_, std::vector<int>(n_, 0));
  for (int j = 0; j < n_; ++j) {
    int d = 0;
    for (int k : up_set(j)) d += r.dim_standard[k];
    r.dim_projective.push_back(d);
    for (int k = 0; k < n_; ++k)
      r.cartan[j][k] = static_cast<int>(set_intersection(up_set(j), up_set(k)).size());
    r.dim_algebra += r.dim_standard[j] * r.dim_standard[j];
  }
  return r;
}

std::vector<AdmissibleSequence> Poset::enumerate_sequences(int j, SequenceKind kind) const {
  ElementSet members = kind == SequenceKind::T ? down_set(j) : up_set(j);
  std::vector<AdmissibleSequence> out;
  std::vector<int> seq;
  std::vector<char> used(n_, 0);
  std::function<void()> rec = [&]() {
    if (seq.size() == members.size()) {
      out.push_back({j, kind, seq});
      return;
    }
    for (int x : members) {
      if (used[x]) continue;
      // x may come next only if every remaining element below it is placed
      bool ok = true;
      for (int y : members)
        if (!used[y] && y != x && leq(y, x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[x] = 1;
      seq.push_back(x);
      rec();
      seq.pop_back();
      used[x] = 0;
    }
  };
  rec();
  return out;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> out;
  std::vector<char> used(n_, 0);
  while (static_cast<int>(out.size()) < n_)
    for (int x = 0; x < n_; ++x) {
      if (used[x]) continue;
      bool minimal = true;
      for (int y : lower_[x])
        if (!used[y]) minimal = false;
      if (!minimal) continue;
      used[x] = 1;
      out.push_back(x);
      break;
    }
  return out;
}

Poset Poset::opposite() const {
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : hasse_) rel.emplace_back(n_ - 1 - b, n_ - 1 - a);
  std::vector<std::string> labels(labels_.rbegin(), labels_.rend());
  return build(n_, rel, labels);
}

Poset Poset::restrict(const ElementSet& members) const {
  for (int m : members) idx(m);
  std::vector<std::pair<int, int>> rel;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < members.size(); ++a) {
    labels.push_back(labels_[members[a]]);
    for (std::size_t b = 0; b < members.size(); ++b)
      if (a != b && leq(members[a], members[b]))
        rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return build(static_cast<int>(members.size()), rel, labels);
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const ElementSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

std::string format_set(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

}  // namespace qhalg
