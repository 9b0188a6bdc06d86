#pragma once

// Finite posets (finite T0 Alexandroff spaces) and the order/graph primitives
// used throughout the library.
//
// Elements are dense ids 0..n-1 with a label table. The reflexive-transitive
// closure is computed once at construction and stored as per-element bitsets
// of predecessors (down-sets) and successors (up-sets), next to the cover
// relation (transitive reduction).

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "alexposet/errors.hpp"

namespace alexposet {

using Id = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<Id> members(const ElementSet& s) {
  std::vector<Id> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Id>(i));
  return out;
}

inline ElementSet make_set(std::size_t n, std::initializer_list<Id> ids) {
  ElementSet s(n);
  for (Id i : ids) s.set(i);
  return s;
}

inline ElementSet make_set(std::size_t n, const std::vector<Id>& ids) {
  ElementSet s(n);
  for (Id i : ids) s.set(i);
  return s;
}

inline ElementSet full_set(std::size_t n) {
  ElementSet s(n);
  s.set();
  return s;
}

class Poset {
 public:
  Poset() = default;

  /// Builds a poset from id pairs (a, b) meaning a < b. Pairs may be
  /// transitively redundant; reflexive pairs are ignored.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<Id, Id>>& pairs) {
    check_labels(labels);
    const std::size_t n = labels.size();
    std::vector<std::vector<Id>> succ(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw Error("pair references an id out of range");
      if (a == b) continue;
      succ[a].push_back(b);
      ++indeg[b];
    }
    // Kahn's algorithm; leftover vertices lie on a cycle.
    std::vector<Id> order;
    order.reserve(n);
    std::queue<Id> ready;
    for (Id v = 0; v < n; ++v)
      if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
      Id v = ready.front();
      ready.pop();
      order.push_back(v);
      for (Id w : succ[v])
        if (--indeg[w] == 0) ready.push(w);
    }
    if (order.size() != n) {
      std::string where;
      for (Id v = 0; v < n; ++v)
        if (indeg[v] != 0) {
          where = labels[v];
          break;
        }
      throw CycleError("order relation has a cycle through '" + where + "'");
    }
    std::vector<ElementSet> down(n, ElementSet(n));
    std::vector<std::vector<Id>> pred(n);
    for (Id a = 0; a < n; ++a)
      for (Id b : succ[a]) pred[b].push_back(a);
    for (Id v : order) {
      down[v].set(v);
      for (Id p : pred[v]) down[v] |= down[p];
    }
    return Poset(std::move(labels), std::move(down));
  }

  /// Builds a poset from a relation given as per-element down-sets
  /// (`below[y]` = { x : x <= y }). The relation must already be a partial
  /// order; it is validated.
  static Poset from_down_sets(std::vector<std::string> labels, std::vector<ElementSet> below) {
    check_labels(labels);
    const std::size_t n = labels.size();
    if (below.size() != n) throw Error("relation size does not match label count");
    for (Id y = 0; y < n; ++y) {
      if (below[y].size() != n) throw Error("relation row has the wrong width");
      if (!below[y].test(y)) throw Error("relation is not reflexive");
      for (Id x : members(below[y])) {
        if (!below[x].is_subset_of(below[y])) throw Error("relation is not transitive");
        if (x != y && below[x].test(y))
          throw CycleError("'" + labels[x] + "' and '" + labels[y] + "' are mutually below");
      }
    }
    return Poset(std::move(labels), std::move(below));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Id x) const { return labels_.at(x); }

  std::optional<Id> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Id id_of(const std::string& label) const {
    if (auto id = find(label)) return *id;
    throw UnknownLabel(label);
  }

  bool leq(Id x, Id y) const { return down_.at(y).test(x); }
  bool less(Id x, Id y) const { return x != y && leq(x, y); }
  bool comparable(Id x, Id y) const { return leq(x, y) || leq(y, x); }

  /// x↓ = { y : y <= x }, the minimal open neighbourhood of x.
  const ElementSet& down_set(Id x) const { return down_.at(x); }
  /// x↑ = { y : y >= x }.
  const ElementSet& up_set(Id x) const { return up_.at(x); }
  ElementSet comparable_set(Id x) const { return down_.at(x) | up_.at(x); }

  const ElementSet& lower_covers(Id x) const { return lower_covers_.at(x); }
  const ElementSet& upper_covers(Id x) const { return upper_covers_.at(x); }

  /// Cover pairs (a, b), b covers a, sorted lexicographically.
  std::vector<std::pair<Id, Id>> covers() const {
    std::vector<std::pair<Id, Id>> out;
    for (Id a = 0; a < size(); ++a)
      for (Id b : members(upper_covers_[a])) out.emplace_back(a, b);
    return out;
  }
  std::size_t cover_count() const {
    std::size_t c = 0;
    for (const auto& s : upper_covers_) c += s.count();
    return c;
  }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return full_set(size()); }

  /// Order-equality: same size and identical relation on ids (labels ignored).
  bool same_order(const Poset& other) const { return down_ == other.down_; }

 private:
  Poset(std::vector<std::string> labels, std::vector<ElementSet> down)
      : labels_(std::move(labels)), down_(std::move(down)) {
    const std::size_t n = labels_.size();
    for (Id i = 0; i < n; ++i) index_.emplace(labels_[i], i);
    up_.assign(n, ElementSet(n));
    for (Id y = 0; y < n; ++y)
      for (Id x : members(down_[y])) up_[x].set(y);
    lower_covers_.assign(n, ElementSet(n));
    upper_covers_.assign(n, ElementSet(n));
    for (Id b = 0; b < n; ++b)
      for (Id a : members(down_[b])) {
        if (a == b) continue;
        if ((up_[a] & down_[b]).count() == 2) {
          lower_covers_[b].set(a);
          upper_covers_[a].set(b);
        }
      }
  }

  static void check_labels(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, int> seen;
    for (const auto& l : labels)
      if (!seen.emplace(l, 0).second) throw DuplicateLabel(l);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Id> index_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> lower_covers_;
  std::vector<ElementSet> upper_covers_;
};

/// Builds a poset from labels and label pairs (a, b) meaning a < b.
inline Poset from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  std::unordered_map<std::string, Id> index;
  for (Id i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second) throw DuplicateLabel(labels[i]);
  std::vector<std::pair<Id, Id>> pairs;
  pairs.reserve(cover_pairs.size());
  for (const auto& [a, b] : cover_pairs) {
    auto ia = index.find(a);
    if (ia == index.end()) throw UnknownLabel(a);
    auto ib = index.find(b);
    if (ib == index.end()) throw UnknownLabel(b);
    pairs.emplace_back(ia->second, ib->second);
  }
  return Poset::from_pairs(std::move(labels), pairs);
}

struct PointedPoset {
  Poset poset;
  Id basepoint = 0;

  PointedPoset() = default;
  PointedPoset(Poset p, Id base) : poset(std::move(p)), basepoint(base) {
    if (basepoint >= poset.size()) throw Error("basepoint is not an element of the poset");
  }
};

/// A reflexive, transitive relation; `above[x]` = { y : x <= y }.
class Preorder {
 public:
  Preorder(std::vector<std::string> labels, std::vector<ElementSet> above)
      : labels_(std::move(labels)), above_(std::move(above)) {
    const std::size_t n = labels_.size();
    if (above_.size() != n) throw Error("relation size does not match label count");
    for (Id x = 0; x < n; ++x) {
      if (above_[x].size() != n) throw Error("relation row has the wrong width");
      if (!above_[x].test(x)) throw Error("preorder is not reflexive");
      for (Id y : members(above_[x]))
        if (!above_[y].is_subset_of(above_[x])) throw Error("preorder is not transitive");
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool leq(Id x, Id y) const { return above_.at(x).test(y); }
  const ElementSet& above(Id x) const { return above_.at(x); }

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> above_;
};

// ---------------------------------------------------------------------------
// Structural helpers

struct Subposet {
  Poset poset;
  std::vector<Id> to_parent;  // child id -> parent id
};

/// Induced subposet on `s`, keeping labels and relative id order.
inline Subposet induced(const Poset& p, const ElementSet& s) {
  Subposet out;
  out.to_parent = members(s);
  const std::size_t m = out.to_parent.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Id v : out.to_parent) labels.push_back(p.label(v));
  std::vector<ElementSet> below(m, ElementSet(m));
  for (Id i = 0; i < m; ++i)
    for (Id j = 0; j < m; ++j)
      if (p.leq(out.to_parent[j], out.to_parent[i])) below[i].set(j);
  out.poset = Poset::from_down_sets(std::move(labels), std::move(below));
  return out;
}

inline Poset dual(const Poset& p) {
  std::vector<ElementSet> below(p.size());
  for (Id x = 0; x < p.size(); ++x) below[x] = p.up_set(x);
  return Poset::from_down_sets(p.labels(), std::move(below));
}

/// Disjoint union; the second operand's labels get `suffix` appended when
/// they clash.
inline Poset disjoint_union(const Poset& a, const Poset& b, const std::string& suffix = "'") {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    std::string name = l;
    while (a.find(name)) name += suffix;
    labels.push_back(std::move(name));
  }
  std::vector<std::pair<Id, Id>> pairs;
  const Id off = static_cast<Id>(a.size());
  for (auto [x, y] : a.covers()) pairs.emplace_back(x, y);
  for (auto [x, y] : b.covers()) pairs.emplace_back(x + off, y + off);
  return Poset::from_pairs(std::move(labels), pairs);
}

// ---------------------------------------------------------------------------
// Order and comparability-graph queries

inline ElementSet down_set(const Poset& p, Id x) { return p.down_set(x); }
inline ElementSet up_set(const Poset& p, Id x) { return p.up_set(x); }

inline ElementSet max_elements(const Poset& p) {
  ElementSet out(p.size());
  for (Id x = 0; x < p.size(); ++x)
    if (p.up_set(x).count() == 1) out.set(x);
  return out;
}

inline ElementSet min_elements(const Poset& p) {
  ElementSet out(p.size());
  for (Id x = 0; x < p.size(); ++x)
    if (p.down_set(x).count() == 1) out.set(x);
  return out;
}

/// Maximal elements of the subset `k` under the induced order.
inline ElementSet max_of(const Poset& p, const ElementSet& k) {
  ElementSet out(p.size());
  for (Id x : members(k)) {
    ElementSet strictly_above = p.up_set(x) & k;
    strictly_above.reset(x);
    if (strictly_above.none()) out.set(x);
  }
  return out;
}

inline bool is_antichain(const Poset& p, const ElementSet& a) {
  for (Id x : members(a)) {
    ElementSet others = p.comparable_set(x) & a;
    others.reset(x);
    if (others.any()) return false;
  }
  return true;
}

inline bool is_down_set(const Poset& p, const ElementSet& s) {
  for (Id x : members(s))
    if (!p.down_set(x).is_subset_of(s)) return false;
  return true;
}

/// Number of elements of a longest chain, minus one.
inline std::size_t height(const Poset& p) {
  if (p.empty()) throw EmptyPoset();
  std::vector<Id> order(p.size());
  for (Id i = 0; i < p.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Id a, Id b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::vector<std::size_t> h(p.size(), 0);
  std::size_t best = 0;
  for (Id v : order) {
    for (Id w : members(p.lower_covers(v))) h[v] = std::max(h[v], h[w] + 1);
    best = std::max(best, h[v]);
  }
  return best;
}

/// Partition into classes of the transitive closure of comparability; for
/// Alexandroff spaces these are the connected and the path components.
/// Classes are sorted by their smallest id.
inline std::vector<ElementSet> components(const Poset& p) {
  std::vector<ElementSet> out;
  ElementSet seen(p.size());
  for (Id s = 0; s < p.size(); ++s) {
    if (seen.test(s)) continue;
    ElementSet comp(p.size());
    comp.set(s);
    ElementSet frontier = comp;
    while (frontier.any()) {
      ElementSet next(p.size());
      for (Id v : members(frontier)) next |= p.comparable_set(v);
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Poset& p) { return components(p).size() == 1; }

/// Length (in steps) of a shortest s-path from x to y; nullopt when x and y
/// lie in different components.
inline std::optional<std::size_t> spath_distance(const Poset& p, Id x, Id y) {
  if (x == y) return 0;
  ElementSet reached(p.size());
  reached.set(x);
  ElementSet frontier = reached;
  for (std::size_t d = 1; frontier.any(); ++d) {
    ElementSet next(p.size());
    for (Id v : members(frontier)) next |= p.comparable_set(v);
    next -= reached;
    if (next.test(y)) return d;
    reached |= next;
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// B(x, n) = { y : d(x, y) <= n }.
inline ElementSet ball(const Poset& p, Id x, std::size_t n) {
  ElementSet reached(p.size());
  reached.set(x);
  ElementSet frontier = reached;
  for (std::size_t d = 0; d < n && frontier.any(); ++d) {
    ElementSet next(p.size());
    for (Id v : members(frontier)) next |= p.comparable_set(v);
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

/// Longest simple path in the comparability graph.
struct LongestPath {
  std::size_t steps = 0;     // m for an s-path x_0..x_m
  std::size_t elements = 0;  // m + 1 (0 for the empty poset)
  bool exact = true;         // false: steps is an upper bound only
};

namespace detail {

class LongestPathSearch {
 public:
  LongestPathSearch(const Poset& p, std::size_t budget) : p_(p), budget_(budget) {}

  LongestPath run() {
    LongestPath out;
    if (p_.empty()) return out;
    for (const auto& comp : components(p_)) {
      const std::size_t cap = comp.count() - 1;
      target_ = cap;
      std::size_t comp_best = 0;
      for (Id s : members(comp)) {
        ElementSet used(p_.size());
        used.set(s);
        best_ = 0;
        dfs(s, used, 0);
        comp_best = std::max(comp_best, best_);
        if (comp_best == cap || exhausted_) break;
      }
      if (exhausted_) {
        // Fall back to the trivial bound |component| - 1 for this component.
        comp_best = cap;
        out.exact = false;
        exhausted_ = false;
        expansions_ = 0;
      }
      out.steps = std::max(out.steps, comp_best);
    }
    out.elements = out.steps + 1;
    return out;
  }

 private:
  void dfs(Id v, ElementSet& used, std::size_t depth) {
    if (exhausted_ || best_ == target_) return;
    if (++expansions_ > budget_) {
      exhausted_ = true;
      return;
    }
    best_ = std::max(best_, depth);
    ElementSet next = p_.comparable_set(v) - used;
    for (Id w : members(next)) {
      used.set(w);
      dfs(w, used, depth + 1);
      used.reset(w);
      if (exhausted_ || best_ == target_) return;
    }
  }

  const Poset& p_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::size_t best_ = 0;
  std::size_t target_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Exact for |P| <= exact_limit unless the search budget runs out; otherwise
/// reports the component-size bound with exact = false.
inline LongestPath longest_spath(const Poset& p, std::size_t exact_limit = 24,
                                 std::size_t budget = 20'000'000) {
  if (p.size() > exact_limit) {
    LongestPath out;
    for (const auto& c : components(p)) out.steps = std::max(out.steps, c.count() - 1);
    out.elements = p.empty() ? 0 : out.steps + 1;
    out.exact = false;
    return out;
  }
  return detail::LongestPathSearch(p, budget).run();
}

/// Predicates of the finite-chains / fp / bp / locally-finite hierarchy.
/// On finite inputs the first three always hold; the record carries witness
/// bounds.
struct Classification {
  bool finite_chains = true;
  bool fp = true;
  bool locally_finite = true;
  bool bp = true;
  std::size_t longest_chain_elements = 0;  // witness for finite_chains
  std::size_t max_comparable = 0;          // max |{y : y ~ x}|, witness for locally_finite
  LongestPath bp_bound;                    // longest s-path, in steps and elements
};

inline Classification classify(const Poset& p, std::size_t exact_limit = 24) {
  Classification c;
  if (!p.empty()) c.longest_chain_elements = height(p) + 1;
  for (Id x = 0; x < p.size(); ++x)
    c.max_comparable = std::max(c.max_comparable, p.comparable_set(x).count());
  c.bp_bound = longest_spath(p, exact_limit);
  return c;
}

/// Quotient by x ~ y iff x <= y <= x. Class labels join member labels with '~'.
struct KolmogorovQuotient {
  Poset poset;
  std::vector<Id> projection;  // preorder element -> class id
};

inline KolmogorovQuotient kolmogorov_quotient(const Preorder& q) {
  const std::size_t n = q.size();
  constexpr Id unset = std::numeric_limits<Id>::max();
  std::vector<Id> cls(n, unset);
  std::vector<std::vector<Id>> classes;
  for (Id x = 0; x < n; ++x) {
    if (cls[x] != unset) continue;
    const Id c = static_cast<Id>(classes.size());
    classes.emplace_back();
    for (Id y = x; y < n; ++y)
      if (q.leq(x, y) && q.leq(y, x)) {
        cls[y] = c;
        classes.back().push_back(y);
      }
  }
  const std::size_t m = classes.size();
  std::vector<std::string> labels;
  for (const auto& c : classes) {
    std::string l;
    for (Id v : c) l += (l.empty() ? "" : "~") + q.labels()[v];
    labels.push_back(std::move(l));
  }
  std::vector<ElementSet> below(m, ElementSet(m));
  for (Id a = 0; a < m; ++a)
    for (Id b = 0; b < m; ++b)
      if (q.leq(classes[a].front(), classes[b].front())) below[b].set(a);
  return {Poset::from_down_sets(std::move(labels), std::move(below)), std::move(cls)};
}

inline Preorder as_preorder(const Poset& p) {
  std::vector<ElementSet> above;
  above.reserve(p.size());
  for (Id x = 0; x < p.size(); ++x) above.push_back(p.up_set(x));
  return Preorder(p.labels(), std::move(above));
}

}  // namespace alexposet
