#include "qhalg/quiver.hpp"

#include <algorithm>

#include "qhalg/errors.hpp"

namespace qhalg {

Quiver::Quiver(int vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    Arrow& a = arrows_[k];
    a.id = static_cast<int>(k);
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
      throw ElementOutOfRange("arrow endpoint outside the vertex range");
    out_[a.source].push_back(a.id);
    in_[a.target].push_back(a.id);
  }
}

Quiver Quiver::doubled_hasse(const Poset& p) {
  std::vector<Arrow> arrows;
  for (auto [j, i] : p.hasse_up()) {
    arrows.push_back({0, j, i, ArrowDir::Up});
    arrows.push_back({0, i, j, ArrowDir::Down});
  }
  return Quiver(p.size(), std::move(arrows));
}

std::optional<int> Quiver::arrow_between(int s, int t) const {
  std::optional<int> found;
  for (int id : out_arrows(s))
    if (arrows_[id].target == t) {
      if (found) return std::nullopt;
      found = id;
    }
  return found;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> arrows;
  for (const Arrow& a : arrows_) {
    ArrowDir d = a.dir == ArrowDir::Up ? ArrowDir::Down : a.dir == ArrowDir::Down ? ArrowDir::Up : ArrowDir::None;
    arrows.push_back({a.id, a.target, a.source, d});
  }
  return Quiver(n_, std::move(arrows));
}

bool Path::is_increasing(const Quiver& q) const {
  return std::all_of(arrows.begin(), arrows.end(), [&](int a) { return q.arrow(a).dir == ArrowDir::Up; });
}

bool Path::is_decreasing(const Quiver& q) const {
  return std::all_of(arrows.begin(), arrows.end(), [&](int a) { return q.arrow(a).dir == ArrowDir::Down; });
}

std::vector<int> Path::vertices(const Quiver& q) const {
  std::vector<int> v{start};
  for (int a : arrows) v.push_back(q.arrow(a).target);
  return v;
}

std::string Path::str(const Quiver& q) const {
  std::string s;
  for (int v : vertices(q)) s += (s.empty() ? "" : "-") + std::to_string(v + 1);
  return s;
}

Path Path::reversed() const {
  Path p{end, start, arrows};
  std::reverse(p.arrows.begin(), p.arrows.end());
  return p;
}

Path compose(const Path& p1, const Path& p2, const Quiver& q) {
  (void)q;
  if (p2.end != p1.start) throw InadmissibleRelation("paths do not compose");
  Path p{p2.start, p1.end, p2.arrows};
  p.arrows.insert(p.arrows.end(), p1.arrows.begin(), p1.arrows.end());
  return p;
}

Path path_from_vertices(const Quiver& q, const std::vector<int>& vertices) {
  if (vertices.empty()) throw ParseError("empty vertex sequence");
  for (int v : vertices)
    if (v < 0 || v >= q.vertices()) throw ElementOutOfRange("path vertex " + std::to_string(v + 1) + " out of range");
  Path p = Path::trivial(vertices.front());
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    auto a = q.arrow_between(vertices[k - 1], vertices[k]);
    if (!a)
      throw ParseError("no unique arrow " + std::to_string(vertices[k - 1] + 1) + "->" +
                       std::to_string(vertices[k] + 1));
    p.arrows.push_back(*a);
  }
  p.end = vertices.back();
  return p;
}

bool is_valid_path(const Path& p, const Quiver& q) {
  int at = p.start;
  for (int a : p.arrows) {
    if (a < 0 || a >= static_cast<int>(q.arrows().size()) || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return at == p.end;
}

CanonicalPathTable::CanonicalPathTable(const Poset& p, const Quiver& q) : poset_(p), quiver_(q) {
  const int n = p.size();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i : apexes(j, k)) table_[{j, i, k}] = compose(down_chain(i, k), up_chain(j, i), q);
}

ElementSet CanonicalPathTable::apexes(int j, int k) const {
  return set_intersection(poset_.up_set(j), poset_.up_set(k));
}

Path CanonicalPathTable::up_chain(int j, int i) const {
  if (!poset_.leq(j, i)) throw NotAboveBoth(std::to_string(i + 1) + " is not above " + std::to_string(j + 1));
  Path p = Path::trivial(j);
  int at = j;
  while (at != i) {
    int next = -1;
    for (int u : poset_.upper_covers(at))
      if (poset_.leq(u, i)) {
        next = u;
        break;
      }
    p.arrows.push_back(*quiver_.arrow_between(at, next));
    at = next;
  }
  p.end = i;
  return p;
}

Path CanonicalPathTable::down_chain(int i, int k) const {
  if (!poset_.leq(k, i)) throw NotAboveBoth(std::to_string(i + 1) + " is not above " + std::to_string(k + 1));
  Path p = Path::trivial(i);
  int at = i;
  while (at != k) {
    int next = -1;
    for (int l : poset_.lower_covers(at))
      if (poset_.leq(k, l)) {
        next = l;
        break;
      }
    p.arrows.push_back(*quiver_.arrow_between(at, next));
    at = next;
  }
  p.end = k;
  return p;
}

const Path& CanonicalPathTable::get(int j, int i, int k) const {
  auto it = table_.find({j, i, k});
  if (it == table_.end())
    throw NotAboveBoth(std::to_string(i + 1) + " is not above both " + std::to_string(j + 1) + " and " +
                       std::to_string(k + 1));
  return it->second;
}

}  // namespace qhalg
