#pragma once

// Order-preserving maps, the function poset C(X, Y) with the pointwise
// order, and homotopies represented as comparability chains in C(X, Y).
//
// For finite X and Y two maps are homotopic iff they lie in the same
// component of the comparability graph of C(X, Y). This is only a statement
// about finite inputs: on infinite spaces (the Khalimsky half-line, for
// instance) homotopic maps need not be joined by any finite chain.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <unordered_map>
#include <vector>

#include "alexposet/errors.hpp"
#include "alexposet/poset.hpp"

namespace alexposet {

/// Assignment of a codomain id to every domain id.
struct MonotoneMap {
  std::vector<Id> values;

  Id operator()(Id x) const { return values.at(x); }
  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
};

inline bool is_monotone(const Poset& x, const Poset& y, std::span<const Id> values) {
  if (values.size() != x.size()) return false;
  for (Id v : values)
    if (v >= y.size()) return false;
  for (auto [a, b] : x.covers())
    if (!y.leq(values[a], values[b])) return false;
  return true;
}

inline bool is_monotone(const Poset& x, const Poset& y, const MonotoneMap& f) {
  return is_monotone(x, y, std::span<const Id>(f.values));
}

inline MonotoneMap identity(const Poset& x) {
  MonotoneMap f;
  f.values.resize(x.size());
  std::iota(f.values.begin(), f.values.end(), Id{0});
  return f;
}

inline MonotoneMap constant(const Poset& x, Id y) { return {std::vector<Id>(x.size(), y)}; }

/// f ∘ g (apply g first).
inline MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  MonotoneMap out;
  out.values.reserve(g.size());
  for (Id v : g.values) {
    if (v >= f.size()) throw Error("compose: codomain of g is not the domain of f");
    out.values.push_back(f.values[v]);
  }
  return out;
}

inline bool pointwise_leq(const Poset& y, const MonotoneMap& f, const MonotoneMap& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!y.leq(f.values[i], g.values[i])) return false;
  return true;
}

inline bool is_constant(const MonotoneMap& f) {
  return !f.values.empty() &&
         std::all_of(f.values.begin(), f.values.end(), [&](Id v) { return v == f.values[0]; });
}

namespace detail {

struct ValuesHash {
  std::size_t operator()(const std::vector<Id>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Id x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Id find_root(std::vector<Id>& parent, Id v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace detail

/// Visits every order-preserving map X -> Y in lexicographic order of the
/// assignment vector. `visit` returns false to stop early.
template <typename Visit>
void for_each_monotone(const Poset& x, const Poset& y, Visit&& visit) {
  const std::size_t n = x.size();
  std::vector<Id> values(n, 0);
  if (n == 0) {
    visit(std::span<const Id>(values));
    return;
  }
  if (y.empty()) return;
  bool stop = false;
  std::function<void(Id)> assign = [&](Id pos) {
    ElementSet cand = y.all();
    // Constraints from already assigned elements (ids < pos).
    for (Id z = 0; z < pos; ++z) {
      if (x.leq(z, pos))
        cand &= y.up_set(values[z]);
      else if (x.leq(pos, z))
        cand &= y.down_set(values[z]);
    }
    for (auto c = cand.find_first(); c != ElementSet::npos && !stop; c = cand.find_next(c)) {
      values[pos] = static_cast<Id>(c);
      if (pos + 1 == n) {
        if (!visit(std::span<const Id>(values))) stop = true;
      } else {
        assign(pos + 1);
      }
    }
  };
  assign(0);
}

/// C(X, Y): all order-preserving maps with the pointwise order.
class FunctionPoset {
 public:
  FunctionPoset(Poset domain, Poset codomain, std::vector<MonotoneMap> maps)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), maps_(std::move(maps)) {
    index_.reserve(maps_.size());
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      if (!is_monotone(domain_, codomain_, maps_[i]))
        throw Error("FunctionPoset: map is not order-preserving");
      if (!index_.emplace(maps_[i].values, i).second)
        throw Error("FunctionPoset: duplicate map");
    }
    compute_components();
  }

  const Poset& domain() const noexcept { return domain_; }
  const Poset& codomain() const noexcept { return codomain_; }
  std::size_t size() const noexcept { return maps_.size(); }
  const std::vector<MonotoneMap>& maps() const noexcept { return maps_; }
  const MonotoneMap& map(std::size_t i) const { return maps_.at(i); }

  std::optional<std::size_t> index_of(const MonotoneMap& f) const {
    auto it = index_.find(f.values);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_index(const MonotoneMap& f) const {
    if (auto i = index_of(f)) return *i;
    throw Error("map is not an element of this function poset");
  }

  bool leq(std::size_t i, std::size_t j) const {
    return pointwise_leq(codomain_, maps_.at(i), maps_.at(j));
  }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  /// f↓ = { g : g <= f } as a set of map indices.
  ElementSet down_of(std::size_t i) const {
    ElementSet out(size());
    for (std::size_t j = 0; j < size(); ++j)
      if (leq(j, i)) out.set(j);
    return out;
  }

  /// Component (homotopy class) index of map i; classes are numbered in
  /// order of their smallest member.
  std::size_t component_of(std::size_t i) const { return component_.at(i); }
  std::size_t component_count() const noexcept { return component_count_; }

  /// Maps that differ from map i at exactly one point and stay comparable to it.
  std::vector<std::size_t> single_point_neighbours(std::size_t i) const {
    std::vector<std::size_t> out;
    std::vector<Id> values = maps_[i].values;
    for (Id x = 0; x < domain_.size(); ++x) {
      const Id old = values[x];
      ElementSet cand = codomain_.comparable_set(old);
      for (Id z : members(domain_.lower_covers(x))) cand &= codomain_.up_set(values[z]);
      for (Id z : members(domain_.upper_covers(x))) cand &= codomain_.down_set(values[z]);
      cand.reset(old);
      for (Id c : members(cand)) {
        values[x] = c;
        out.push_back(index_.at(values));
      }
      values[x] = old;
    }
    return out;
  }

  /// The pointwise order as an explicit Poset (labels "f0", "f1", ...).
  Poset as_poset(std::size_t guard = 4096) const {
    if (size() > guard) throw GuardExceeded("function poset materialisation", guard, size());
    std::vector<std::string> labels;
    std::vector<ElementSet> below;
    for (std::size_t i = 0; i < size(); ++i) {
      labels.push_back("f" + std::to_string(i));
      below.push_back(down_of(i));
    }
    return Poset::from_down_sets(std::move(labels), std::move(below));
  }

 private:
  // If f <= g then f and g are joined by a chain of maps each differing from
  // the previous one at a single point (change a maximal point of
  // {x : f(x) != g(x)} first), so single-point moves give the components of
  // the comparability graph.
  void compute_components() {
    const std::size_t n = size();
    std::vector<Id> parent(n);
    std::iota(parent.begin(), parent.end(), Id{0});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j : single_point_neighbours(i)) {
        Id a = detail::find_root(parent, static_cast<Id>(i));
        Id b = detail::find_root(parent, static_cast<Id>(j));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    component_.assign(n, 0);
    std::vector<std::size_t> numbering(n, std::numeric_limits<std::size_t>::max());
    component_count_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Id r = detail::find_root(parent, static_cast<Id>(i));
      if (numbering[r] == std::numeric_limits<std::size_t>::max()) numbering[r] = component_count_++;
      component_[i] = numbering[r];
    }
  }

  Poset domain_;
  Poset codomain_;
  std::vector<MonotoneMap> maps_;
  std::unordered_map<std::vector<Id>, std::size_t, detail::ValuesHash> index_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

inline constexpr std::size_t kDefaultMapGuard = 1'000'000;

/// Number of order-preserving maps X -> Y, aborting past `guard`.
inline std::size_t count_monotone(const Poset& x, const Poset& y, std::size_t guard = kDefaultMapGuard) {
  std::size_t count = 0;
  for_each_monotone(x, y, [&](std::span<const Id>) { return ++count <= guard; });
  if (count > guard) throw GuardExceeded("monotone map enumeration", guard, count);
  return count;
}

inline FunctionPoset enumerate_monotone(const Poset& x, const Poset& y,
                                        std::size_t guard = kDefaultMapGuard) {
  std::vector<MonotoneMap> maps;
  bool exceeded = false;
  for_each_monotone(x, y, [&](std::span<const Id> v) {
    if (maps.size() == guard) {
      exceeded = true;
      return false;
    }
    maps.push_back({std::vector<Id>(v.begin(), v.end())});
    return true;
  });
  if (exceeded) throw GuardExceeded("monotone map enumeration", guard, maps.size() + 1);
  return FunctionPoset(x, y, std::move(maps));
}

/// A comparability chain f = h0 ~ h1 ~ ... ~ hk = g of map indices.
struct HomotopyWitness {
  bool homotopic = false;
  std::vector<std::size_t> chain;
  bool minimal = false;  // chain has the least possible length
};

inline constexpr std::size_t kDefaultBfsGuard = 5000;

namespace detail {

// BFS in the full comparability graph of C restricted to `allowed`.
inline std::vector<std::size_t> comparability_bfs(const FunctionPoset& c, std::size_t from,
                                                  const std::vector<bool>& allowed,
                                                  std::vector<std::size_t>& parent) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(c.size(), none);
  parent.assign(c.size(), none);
  std::queue<std::size_t> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t w = 0; w < c.size(); ++w) {
      if (dist[w] != none || !allowed[w] || !c.comparable(v, w)) continue;
      dist[w] = dist[v] + 1;
      parent[w] = v;
      q.push(w);
    }
  }
  return dist;
}

inline std::vector<std::size_t> unwind(const std::vector<std::size_t>& parent, std::size_t from,
                                       std::size_t to) {
  std::vector<std::size_t> chain{to};
  while (chain.back() != from) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace detail

/// Decides whether maps i and j of C are homotopic. The witness is a
/// shortest comparability chain when |C| <= bfs_guard, otherwise a chain of
/// single-point moves.
inline HomotopyWitness is_homotopic(const FunctionPoset& c, std::size_t i, std::size_t j,
                                    std::size_t bfs_guard = kDefaultBfsGuard) {
  HomotopyWitness w;
  if (c.component_of(i) != c.component_of(j)) return w;
  w.homotopic = true;
  if (i == j) {
    w.chain = {i};
    w.minimal = true;
    return w;
  }
  std::vector<std::size_t> parent;
  if (c.size() <= bfs_guard) {
    detail::comparability_bfs(c, i, std::vector<bool>(c.size(), true), parent);
    w.minimal = true;
  } else {
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    parent.assign(c.size(), none);
    std::queue<std::size_t> q;
    parent[i] = i;
    q.push(i);
    while (!q.empty() && parent[j] == none) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t n : c.single_point_neighbours(v))
        if (parent[n] == none) {
          parent[n] = v;
          q.push(n);
        }
    }
  }
  w.chain = detail::unwind(parent, i, j);
  return w;
}

inline HomotopyWitness is_homotopic(const FunctionPoset& c, const MonotoneMap& f,
                                    const MonotoneMap& g, std::size_t bfs_guard = kDefaultBfsGuard) {
  return is_homotopic(c, c.require_index(f), c.require_index(g), bfs_guard);
}

/// Homotopy classes of C, each a sorted list of map indices.
inline std::vector<std::vector<std::size_t>> homotopy_classes(const FunctionPoset& c) {
  std::vector<std::vector<std::size_t>> out(c.component_count());
  for (std::size_t i = 0; i < c.size(); ++i) out[c.component_of(i)].push_back(i);
  return out;
}

/// Length of a shortest comparability chain in C(X, X) from id_X to a
/// constant map; nullopt if no constant is reachable (X not contractible).
inline std::optional<std::size_t> min_contraction_chain(const Poset& x,
                                                        std::size_t guard = kDefaultBfsGuard) {
  const FunctionPoset c = enumerate_monotone(x, x, guard);
  const std::size_t id = c.require_index(identity(x));
  std::vector<std::size_t> parent;
  auto dist = detail::comparability_bfs(c, id, std::vector<bool>(c.size(), true), parent);
  std::optional<std::size_t> best;
  for (Id y = 0; y < x.size(); ++y) {
    std::size_t d = dist[c.require_index(constant(x, y))];
    if (d == std::numeric_limits<std::size_t>::max()) continue;
    if (!best || d < *best) best = d;
  }
  return best;
}

struct FppResult {
  bool has_fpp = true;
  std::optional<MonotoneMap> witness;  // a fixed-point-free self-map
};

/// Fixed point property by exhaustive search over C(X, X). The empty poset
/// fails it: its only self-map has no fixed point.
inline FppResult has_fpp(const Poset& x, std::size_t guard = kDefaultMapGuard) {
  FppResult r;
  std::size_t seen = 0;
  for_each_monotone(x, x, [&](std::span<const Id> v) {
    if (++seen > guard) throw GuardExceeded("fixed point search", guard, seen);
    for (Id i = 0; i < v.size(); ++i)
      if (v[i] == i) return true;
    r.has_fpp = false;
    r.witness = MonotoneMap{std::vector<Id>(v.begin(), v.end())};
    return false;
  });
  return r;
}

struct RetractionCheck {
  bool is_retraction = false;  // monotone, r(X) = A, r|A = id
  bool comparative = false;    // r(x) ~ x
  bool up = false;             // r(x) >= x
  bool down = false;           // r(x) <= x
  bool decomposes = false;     // comparative and r = r_d ∘ r_u with both monotone
};

/// Checks r : X -> X against the retraction kinds, and for comparative r the
/// factorisation through an up-retraction followed by a down-retraction.
inline RetractionCheck is_retraction(const Poset& x, const MonotoneMap& r, const ElementSet& a) {
  RetractionCheck out;
  if (r.size() != x.size() || !is_monotone(x, x, r)) return out;
  ElementSet image(x.size());
  for (Id v : r.values) image.set(v);
  bool fixes_a = true;
  for (Id v : members(a))
    if (r(v) != v) fixes_a = false;
  out.is_retraction = image == a && fixes_a;
  if (!out.is_retraction) return out;
  out.comparative = out.up = out.down = true;
  for (Id v = 0; v < x.size(); ++v) {
    if (!x.comparable(r(v), v)) out.comparative = false;
    if (!x.leq(v, r(v))) out.up = false;
    if (!x.leq(r(v), v)) out.down = false;
  }
  if (out.comparative) {
    MonotoneMap ru = identity(x), rd = identity(x);
    for (Id v = 0; v < x.size(); ++v) {
      if (x.leq(v, r(v)))
        ru.values[v] = r(v);
      else
        rd.values[v] = r(v);
    }
    out.decomposes = is_monotone(x, x, ru) && is_monotone(x, x, rd) && compose(rd, ru) == r;
  }
  return out;
}

}  // namespace alexposet
