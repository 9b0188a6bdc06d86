#pragma once

// Finite topologies as explicit set families: the down-set topology of a
// poset, the compact-open subbasis { [x, y↓] } on C(X, Y), closure of a
// subbasis to a topology and the specialization preorder of a topology.
//
// Everything here is exhaustive and guarded; the point is verification on
// small inputs, not scale. Statements about infinite spaces (C(X, X) failing
// to be Alexandroff for infinite X, hereditary compactness) are not computed.

#include <set>
#include <string>
#include <vector>

#include "alexposet/errors.hpp"
#include "alexposet/maps.hpp"
#include "alexposet/poset.hpp"

namespace alexposet {

class SetFamily {
 public:
  explicit SetFamily(std::size_t ground_size = 0) : ground_size_(ground_size) {}

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::set<ElementSet>& sets() const noexcept { return sets_; }

  /// Inserts a subset of the ground set; returns false if already present.
  bool insert(ElementSet s) {
    if (s.size() != ground_size_) throw Error("SetFamily: member is not a subset of the ground set");
    return sets_.insert(std::move(s)).second;
  }
  bool contains(const ElementSet& s) const { return sets_.count(s) != 0; }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_size_ == b.ground_size_ && a.sets_ == b.sets_;
  }

 private:
  std::size_t ground_size_;
  std::set<ElementSet> sets_;
};

inline constexpr std::size_t kDownSetGuard = 20;
inline constexpr std::size_t kGenerationGuard = 4096;
inline constexpr std::size_t kFamilySizeGuard = std::size_t{1} << 20;

/// All down-sets of P, the open sets of its Alexandroff topology.
inline SetFamily alexandroff_topology(const Poset& p, std::size_t guard = kDownSetGuard,
                                      std::size_t family_guard = kFamilySizeGuard) {
  if (p.size() > guard)
    throw GuardExceeded("down-set enumeration (2^n candidates)", guard, p.size());
  SetFamily out(p.size());
  // Decide elements bottom-up; x may join only when all its lower covers did.
  std::vector<Id> order(p.size());
  for (Id i = 0; i < p.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Id a, Id b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  ElementSet current(p.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.insert(current);
      if (out.size() > family_guard)
        throw GuardExceeded("down-set enumeration (family size)", family_guard, out.size());
      return;
    }
    const Id x = order[k];
    self(self, k + 1);
    if (p.lower_covers(x).is_subset_of(current)) {
      current.set(x);
      self(self, k + 1);
      current.reset(x);
    }
  };
  rec(rec, 0);
  return out;
}

/// U_x, the minimal open neighbourhood of x.
inline ElementSet minimal_nbhd(const Poset& p, Id x) { return p.down_set(x); }

/// Compactness of the Alexandroff space of P: max(P) finite and every
/// element below some maximal one. Both clauses hold for any finite poset;
/// they are evaluated literally anyway.
inline bool is_compact_shape(const Poset& p) {
  const ElementSet maxima = max_elements(p);
  for (Id x = 0; x < p.size(); ++x)
    if (!(p.up_set(x) & maxima).any()) return false;
  return true;
}

/// [K, U] = { f in C : f(K) ⊆ U } for a down-set U of Y, as map indices.
/// Also evaluates [max(K), U] and throws std::logic_error if they differ.
inline ElementSet hom_set_interval(const FunctionPoset& c, const ElementSet& k, const ElementSet& u) {
  const Poset& x = c.domain();
  const Poset& y = c.codomain();
  if (k.size() != x.size() || u.size() != y.size()) throw Error("hom_set_interval: size mismatch");
  if (!is_down_set(y, u)) throw NotDownSet("hom_set_interval: U is not a down-set");
  const auto sends_into = [&](const ElementSet& from) {
    ElementSet out(c.size());
    const auto pts = members(from);
    for (std::size_t i = 0; i < c.size(); ++i) {
      bool ok = true;
      for (Id v : pts)
        if (!u.test(c.map(i)(v))) {
          ok = false;
          break;
        }
      if (ok) out.set(i);
    }
    return out;
  };
  ElementSet full = sends_into(k);
  if (full != sends_into(max_of(x, k)))
    throw std::logic_error("hom_set_interval: [K,U] differs from [max K, U]");
  return full;
}

/// The subbasis { [x, y↓] : x in X, y in Y } of the compact-open topology.
inline SetFamily compact_open_subbasis(const FunctionPoset& c) {
  SetFamily out(c.size());
  const Poset& x = c.domain();
  const Poset& y = c.codomain();
  for (Id a = 0; a < x.size(); ++a) {
    ElementSet point(x.size());
    point.set(a);
    for (Id b = 0; b < y.size(); ++b) out.insert(hom_set_interval(c, point, y.down_set(b)));
  }
  return out;
}

/// Smallest topology containing `sub`. On a finite ground set every point m
/// has a smallest open set U_m (the intersection of the subbasic sets
/// containing it), and the opens are exactly the unions of these, i.e. the
/// down-sets of the preorder x <= m iff x in U_m. Those are enumerated by
/// include/exclude backtracking, which never reaches a dead end.
inline SetFamily generate_topology(const SetFamily& sub, std::size_t guard = kGenerationGuard,
                                   std::size_t family_guard = kFamilySizeGuard) {
  const std::size_t n = sub.ground_size();
  if (n > guard) throw GuardExceeded("topology generation (ground set)", guard, n);
  std::vector<ElementSet> smallest(n, full_set(n));
  for (const auto& s : sub.sets())
    for (Id m : members(s)) smallest[m] &= s;
  std::vector<ElementSet> above(n, ElementSet(n));  // above[x] = { m : x in U_m }
  for (Id m = 0; m < n; ++m)
    for (Id x : members(smallest[m])) above[x].set(m);
  SetFamily out(n);
  ElementSet in(n), out_set(n);
  auto rec = [&](auto&& self, Id k) -> void {
    while (k < n && (in.test(k) || out_set.test(k))) ++k;
    if (k == n) {
      out.insert(in);
      if (out.size() > family_guard)
        throw GuardExceeded("topology generation (family size)", family_guard, out.size());
      return;
    }
    const ElementSet saved_in = in, saved_out = out_set;
    in |= smallest[k];
    self(self, k + 1);
    in = saved_in;
    out_set |= above[k];
    self(self, k + 1);
    out_set = saved_out;
  };
  rec(rec, 0);
  return out;
}

inline bool families_equal(const SetFamily& a, const SetFamily& b) {
  if (a.ground_size() != b.ground_size()) throw Error("families_equal: different ground sets");
  return a == b;
}

inline bool is_topology(const SetFamily& t) {
  const std::size_t n = t.ground_size();
  if (!t.contains(ElementSet(n)) || !t.contains(full_set(n))) return false;
  for (auto i = t.sets().begin(); i != t.sets().end(); ++i)
    for (auto j = std::next(i); j != t.sets().end(); ++j)
      if (!t.contains(*i | *j) || !t.contains(*i & *j)) return false;
  return true;
}

/// x <= y iff every open set containing y contains x (y ∈ closure of {x}).
inline Preorder specialization_order(const SetFamily& t, std::vector<std::string> labels = {}) {
  const std::size_t n = t.ground_size();
  if (!is_topology(t)) throw NotATopology("family is not closed under unions and intersections");
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<ElementSet> above(n, full_set(n));
  for (const auto& open : t.sets())
    for (Id y : members(open))
      for (Id x = 0; x < n; ++x)
        if (!open.test(x)) above[x].reset(y);
  return Preorder(std::move(labels), std::move(above));
}

}  // namespace alexposet
