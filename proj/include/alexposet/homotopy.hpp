#pragma once

// Decision procedures for homotopy type: order isomorphism, equivalence via
// cores, contractibility, crowns in height one, and a brute-force oracle
// that searches for homotopy inverses directly in the function posets.

#include <algorithm>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "alexposet/errors.hpp"
#include "alexposet/maps.hpp"
#include "alexposet/poset.hpp"
#include "alexposet/reduction.hpp"

namespace alexposet {

/// An order isomorphism P -> Q; mapping[x] is the image of x.
struct IsoWitness {
  std::vector<Id> mapping;
};

inline bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<Id>& m) {
  if (p.size() != q.size() || m.size() != p.size()) return false;
  ElementSet hit(q.size());
  for (Id v : m) {
    if (v >= q.size() || hit.test(v)) return false;
    hit.set(v);
  }
  for (Id a = 0; a < p.size(); ++a)
    for (Id b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(m[a], m[b])) return false;
  return true;
}

namespace detail {

using ElementProfile = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

inline std::vector<ElementProfile> element_profiles(const Poset& p) {
  // depth = length of the longest chain ending at x
  std::vector<Id> order(p.size());
  for (Id i = 0; i < p.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Id a, Id b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::vector<std::size_t> depth(p.size(), 0);
  for (Id v : order)
    for (Id w : members(p.lower_covers(v))) depth[v] = std::max(depth[v], depth[w] + 1);
  std::vector<ElementProfile> out(p.size());
  for (Id x = 0; x < p.size(); ++x)
    out[x] = {p.down_set(x).count(), p.up_set(x).count(), p.lower_covers(x).count(),
              p.upper_covers(x).count(), depth[x]};
  return out;
}

}  // namespace detail

/// Order isomorphism by profile refinement and backtracking. When both
/// basepoints are given the isomorphism must send one to the other.
inline std::optional<IsoWitness> are_isomorphic(const Poset& p, const Poset& q,
                                                std::optional<Id> p_base = std::nullopt,
                                                std::optional<Id> q_base = std::nullopt) {
  if (p.size() != q.size() || p.cover_count() != q.cover_count()) return std::nullopt;
  const std::size_t n = p.size();
  const auto pp = detail::element_profiles(p);
  const auto qp = detail::element_profiles(q);
  {
    auto a = pp, b = qp;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::vector<Id>> cands(n);
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      if (pp[x] == qp[y]) cands[x].push_back(y);
  if (p_base && q_base) {
    if (pp[*p_base] != qp[*q_base]) return std::nullopt;
    cands[*p_base] = {*q_base};
  }
  std::vector<Id> order(n);
  for (Id i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Id a, Id b) { return cands[a].size() < cands[b].size(); });

  std::vector<Id> m(n, 0);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const Id x = order[k];
    for (Id y : cands[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Id z = order[j];
        if (p.leq(z, x) != q.leq(m[z], y) || p.leq(x, z) != q.leq(y, m[z])) ok = false;
      }
      if (!ok) continue;
      m[x] = y;
      used[y] = true;
      if (self(self, k + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  if (!is_order_isomorphism(p, q, m)) throw std::logic_error("isomorphism search returned a non-isomorphism");
  if (p_base && q_base && m[*p_base] != *q_base)
    throw std::logic_error("isomorphism search ignored the basepoints");
  return IsoWitness{std::move(m)};
}

struct HomotopyEquivalence {
  bool equivalent = false;
  CoreResult core_p;
  CoreResult core_q;
  std::optional<IsoWitness> iso;  // between the two cores (core ids)
};

/// Two finite spaces are homotopy equivalent iff their cores are isomorphic.
inline HomotopyEquivalence are_homotopy_equivalent(const Poset& p, const Poset& q) {
  HomotopyEquivalence r{false, core(p), core(q), std::nullopt};
  r.iso = are_isomorphic(r.core_p.core.poset, r.core_q.core.poset);
  r.equivalent = r.iso.has_value();
  return r;
}

namespace detail {
inline Id child_id(const Subposet& s, Id parent) {
  auto it = std::find(s.to_parent.begin(), s.to_parent.end(), parent);
  if (it == s.to_parent.end()) throw std::logic_error("basepoint missing from its pointed core");
  return static_cast<Id>(it - s.to_parent.begin());
}
}  // namespace detail

/// Pointed variant: pointed cores, isomorphism preserving basepoints.
inline HomotopyEquivalence are_homotopy_equivalent(const PointedPoset& p, const PointedPoset& q) {
  HomotopyEquivalence r{false, core(p), core(q), std::nullopt};
  r.iso = are_isomorphic(r.core_p.core.poset, r.core_q.core.poset,
                         detail::child_id(r.core_p.core, p.basepoint),
                         detail::child_id(r.core_q.core, q.basepoint));
  r.equivalent = r.iso.has_value();
  return r;
}

inline constexpr std::size_t kBruteForceGuard = 10'000'000;

/// Searches f : P -> Q and g : Q -> P with g∘f ≃ id_P and f∘g ≃ id_Q, where
/// ≃ is joinability by a comparability chain. Comparability is preserved by
/// pre- and post-composition, so one representative per homotopy class of
/// C(P, Q) and C(Q, P) suffices. `guard` bounds the number of candidate pairs.
inline bool brute_force_homotopy_equivalent(const Poset& p, const Poset& q,
                                            std::size_t guard = kBruteForceGuard,
                                            std::size_t map_guard = kDefaultMapGuard) {
  const FunctionPoset cpq = enumerate_monotone(p, q, map_guard);
  const FunctionPoset cqp = enumerate_monotone(q, p, map_guard);
  if (cpq.size() == 0 || cqp.size() == 0) return false;
  const std::size_t pairs = cpq.component_count() * cqp.component_count();
  if (pairs > guard) throw GuardExceeded("brute-force homotopy search (class pairs)", guard, pairs);
  const FunctionPoset cpp = enumerate_monotone(p, p, map_guard);
  const FunctionPoset cqq = enumerate_monotone(q, q, map_guard);
  const std::size_t id_p = cpp.component_of(cpp.require_index(identity(p)));
  const std::size_t id_q = cqq.component_of(cqq.require_index(identity(q)));

  const auto representatives = [](const FunctionPoset& c) {
    std::vector<std::size_t> reps(c.component_count(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (reps[c.component_of(i)] == c.size()) reps[c.component_of(i)] = i;
    return reps;
  };
  const auto fs = representatives(cpq);
  const auto gs = representatives(cqp);
  for (std::size_t fi : fs) {
    const MonotoneMap& f = cpq.map(fi);
    for (std::size_t gi : gs) {
      const MonotoneMap& g = cqp.map(gi);
      if (cpp.component_of(cpp.require_index(compose(g, f))) != id_p) continue;
      if (cqq.component_of(cqq.require_index(compose(f, g))) != id_q) continue;
      return true;
    }
  }
  return false;
}

/// True iff the core is a single point; the empty poset is not contractible.
inline bool is_contractible(const Poset& p) {
  if (p.empty()) return false;
  return core(p).core.poset.size() == 1;
}

namespace detail {
inline void require_height1(const Poset& p) {
  if (!p.empty() && height(p) > 1) throw HeightExceeded("poset has height greater than 1");
}
}  // namespace detail

/// Height <= 1: contractible iff connected and crown-free, i.e. iff the
/// cover graph is a tree.
inline bool contractible_height1(const Poset& p) {
  detail::require_height1(p);
  if (p.empty()) return false;
  return is_connected(p) && p.cover_count() == p.size() - 1;
}

/// Height <= 1: a shortest cycle of the cover graph (a crown a1 b1 a2 b2 ...
/// read cyclically), or nullopt if the cover graph is a forest.
inline std::optional<std::vector<Id>> contains_crown(const Poset& p) {
  detail::require_height1(p);
  const std::size_t n = p.size();
  constexpr Id none = std::numeric_limits<Id>::max();
  std::optional<std::vector<Id>> best;
  for (Id root = 0; root < n; ++root) {
    std::vector<Id> parent(n, none), dist(n, none);
    dist[root] = 0;
    parent[root] = root;
    std::queue<Id> q;
    q.push(root);
    while (!q.empty()) {
      Id u = q.front();
      q.pop();
      for (Id v : members(p.lower_covers(u) | p.upper_covers(u))) {
        if (dist[v] == none) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          const std::size_t len = dist[u] + dist[v] + 1;
          if (best && best->size() <= len) continue;
          std::vector<Id> a{u}, b{v};
          while (a.back() != root) a.push_back(parent[a.back()]);
          while (b.back() != root) b.push_back(parent[b.back()]);
          // Drop the shared tail, keeping the last common vertex.
          while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
            a.pop_back();
            b.pop_back();
          }
          std::vector<Id> cycle(a.rbegin(), a.rend());
          cycle.pop_back();  // u is re-added below
          cycle.push_back(u);
          for (Id w : b) if (w != b.back()) cycle.push_back(w);
          // cycle: common vertex .. u, v .. (back toward common vertex)
          if (cycle.size() >= 3) best = std::move(cycle);
        }
      }
    }
  }
  return best;
}

/// For every y, exactly one s-path from x to y whose consecutive members are
/// in a cover relation; equivalently the cover graph is a tree.
inline bool unique_spath_condition(const Poset& p, Id x) {
  if (x >= p.size()) throw Error("unique_spath_condition: element out of range");
  return is_connected(p) && p.cover_count() == p.size() - 1;
}

}  // namespace alexposet
