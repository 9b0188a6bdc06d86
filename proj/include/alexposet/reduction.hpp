#pragma once

// Beat points, retractions removing them, the bulk retractions U_X / D_X,
// the standard dismantling sequence and cores.
//
// All steps act on subspaces of one fixed poset, so every map here is
// expressed on the ids of the starting poset: a step's map is defined on its
// domain subspace and acts as the identity elsewhere. Only finite step counts
// are modelled.

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexposet/errors.hpp"
#include "alexposet/maps.hpp"
#include "alexposet/poset.hpp"

namespace alexposet {

enum class StepKind { RemoveUpBeat, RemoveDownBeat, BulkUp, BulkDown };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::RemoveUpBeat: return "remove-up-beat";
    case StepKind::RemoveDownBeat: return "remove-down-beat";
    case StepKind::BulkUp: return "bulk-up";
    case StepKind::BulkDown: return "bulk-down";
  }
  return "?";
}

struct RetractionStep {
  StepKind kind = StepKind::RemoveDownBeat;
  ElementSet domain;   // subspace before the step
  ElementSet removed;  // domain \ image
  ElementSet image;    // subspace after the step
  MonotoneMap map;     // on ids of the starting poset; identity off `domain`
  std::vector<std::pair<Id, Id>> targets;  // (x, u_x or d_x) for single removals

  bool is_identity() const { return removed.none(); }
};

struct DismantlingTrace {
  Poset start;
  std::optional<Id> basepoint;
  std::vector<RetractionStep> steps;
  MonotoneMap composed;  // last ∘ ... ∘ first
  ElementSet final;      // surviving subspace
  bool stabilized = true;
  std::size_t rounds = 0;            // standard sequence: rounds evaluated
  std::size_t effective_rounds = 0;  // standard sequence: last non-identity round + 1
};

// ---------------------------------------------------------------------------
// Beat points inside a subspace `alive`

/// Smallest element of (x↑ ∩ alive) \ {x}, if there is one.
inline std::optional<Id> up_beat_target(const Poset& p, const ElementSet& alive, Id x) {
  ElementSet above = p.up_set(x) & alive;
  above.reset(x);
  for (Id c : members(above))
    if (above.is_subset_of(p.up_set(c))) return c;
  return std::nullopt;
}

/// Largest element of (x↓ ∩ alive) \ {x}, if there is one.
inline std::optional<Id> down_beat_target(const Poset& p, const ElementSet& alive, Id x) {
  ElementSet below = p.down_set(x) & alive;
  below.reset(x);
  for (Id c : members(below))
    if (below.is_subset_of(p.down_set(c))) return c;
  return std::nullopt;
}

inline ElementSet up_beat_points(const Poset& p, const ElementSet& alive,
                                 std::optional<Id> basepoint = std::nullopt) {
  ElementSet out(p.size());
  for (Id x : members(alive))
    if (x != basepoint && up_beat_target(p, alive, x)) out.set(x);
  return out;
}

inline ElementSet down_beat_points(const Poset& p, const ElementSet& alive,
                                   std::optional<Id> basepoint = std::nullopt) {
  ElementSet out(p.size());
  for (Id x : members(alive))
    if (x != basepoint && down_beat_target(p, alive, x)) out.set(x);
  return out;
}

inline ElementSet up_beat_points(const Poset& p) { return up_beat_points(p, p.all()); }
inline ElementSet down_beat_points(const Poset& p) { return down_beat_points(p, p.all()); }
inline ElementSet up_beat_points(const PointedPoset& pp) {
  return up_beat_points(pp.poset, pp.poset.all(), pp.basepoint);
}
inline ElementSet down_beat_points(const PointedPoset& pp) {
  return down_beat_points(pp.poset, pp.poset.all(), pp.basepoint);
}

inline ElementSet beat_points(const Poset& p, const ElementSet& alive,
                              std::optional<Id> basepoint = std::nullopt) {
  return up_beat_points(p, alive, basepoint) | down_beat_points(p, alive, basepoint);
}

inline bool is_core(const Poset& p, std::optional<Id> basepoint = std::nullopt) {
  return beat_points(p, p.all(), basepoint).none();
}
inline bool is_core(const PointedPoset& pp) { return is_core(pp.poset, pp.basepoint); }

// ---------------------------------------------------------------------------
// Single removals

enum class BeatPreference { Down, Up };

/// The retraction removing beat point x from `alive`: r(x) = d_x (or u_x),
/// identity elsewhere. With both available, `prefer` decides.
inline RetractionStep remove_beat_point(const Poset& p, const ElementSet& alive, Id x,
                                        BeatPreference prefer = BeatPreference::Down) {
  if (x >= p.size() || !alive.test(x))
    throw NotABeatPoint("element is not in the current subspace");
  auto down = down_beat_target(p, alive, x);
  auto up = up_beat_target(p, alive, x);
  if (!down && !up) throw NotABeatPoint("'" + p.label(x) + "' is not a beat point");
  const bool use_down = down && (prefer == BeatPreference::Down || !up);
  RetractionStep s;
  s.kind = use_down ? StepKind::RemoveDownBeat : StepKind::RemoveUpBeat;
  const Id target = use_down ? *down : *up;
  s.domain = alive;
  s.removed = ElementSet(p.size());
  s.removed.set(x);
  s.image = alive;
  s.image.reset(x);
  s.map = identity(p);
  s.map.values[x] = target;
  s.targets.emplace_back(x, target);
  return s;
}

inline RetractionStep remove_beat_point(const Poset& p, Id x,
                                        BeatPreference prefer = BeatPreference::Down) {
  return remove_beat_point(p, p.all(), x, prefer);
}

// ---------------------------------------------------------------------------
// Bulk retractions

namespace detail {

inline bool monotone_on(const Poset& p, const ElementSet& dom, const MonotoneMap& m) {
  for (Id a : members(dom))
    for (Id b : members(p.up_set(a) & dom))
      if (!p.leq(m(a), m(b))) return false;
  return true;
}

inline RetractionStep bulk(const Poset& p, const ElementSet& alive, std::optional<Id> basepoint,
                           bool upward) {
  RetractionStep s;
  s.kind = upward ? StepKind::BulkUp : StepKind::BulkDown;
  s.domain = alive;
  MonotoneMap one = identity(p);
  for (Id x : members(alive)) {
    if (x == basepoint) continue;
    auto t = upward ? up_beat_target(p, alive, x) : down_beat_target(p, alive, x);
    if (t) one.values[x] = *t;
  }
  // Iterate u_X (or d_X) to its eventual value; chains are finite.
  s.map = identity(p);
  for (Id x : members(alive)) {
    Id v = x;
    while (one(v) != v) v = one(v);
    s.map.values[x] = v;
  }
  s.image = ElementSet(p.size());
  for (Id x : members(alive)) s.image.set(s.map(x));
  s.removed = alive - s.image;
  for (Id x : members(alive)) {
    const bool ok = upward ? p.leq(x, s.map(x)) : p.leq(s.map(x), x);
    if (!ok || s.map(s.map(x)) != s.map(x))
      throw std::logic_error("bulk retraction is not an up/down retraction");
  }
  if (!monotone_on(p, alive, s.map)) throw std::logic_error("bulk retraction is not monotone");
  return s;
}

}  // namespace detail

/// U_X on the subspace `alive`: every up-beat point follows u_x until it
/// stops moving.
inline RetractionStep bulk_up(const Poset& p, const ElementSet& alive,
                              std::optional<Id> basepoint = std::nullopt) {
  return detail::bulk(p, alive, basepoint, true);
}

/// D_X, the dual of bulk_up.
inline RetractionStep bulk_down(const Poset& p, const ElementSet& alive,
                                std::optional<Id> basepoint = std::nullopt) {
  return detail::bulk(p, alive, basepoint, false);
}

inline RetractionStep bulk_up(const Poset& p) { return bulk_up(p, p.all()); }
inline RetractionStep bulk_down(const Poset& p) { return bulk_down(p, p.all()); }

// ---------------------------------------------------------------------------
// Cores and dismantling

struct RemovalPolicy {
  enum class Order { LowestId, HighestId, Random };
  Order order = Order::LowestId;
  BeatPreference prefer = BeatPreference::Down;
  std::uint64_t seed = 0;  // for Order::Random
};

namespace detail {

inline DismantlingTrace start_trace(const Poset& p, std::optional<Id> basepoint) {
  DismantlingTrace t;
  t.start = p;
  t.basepoint = basepoint;
  t.composed = identity(p);
  t.final = p.all();
  return t;
}

inline void push_step(DismantlingTrace& t, RetractionStep s) {
  t.composed = compose(s.map, t.composed);
  t.final = s.image;
  t.steps.push_back(std::move(s));
}

}  // namespace detail

struct CoreResult {
  Subposet core;  // induced subposet on the surviving elements
  DismantlingTrace trace;
};

/// Removes beat points one at a time until none is left. The result has no
/// beat points, so it is a core for comparative retractions as well.
inline CoreResult core(const Poset& p, std::optional<Id> basepoint = std::nullopt,
                       RemovalPolicy policy = {}) {
  if (basepoint && *basepoint >= p.size()) throw Error("basepoint out of range");
  DismantlingTrace t = detail::start_trace(p, basepoint);
  std::mt19937_64 rng(policy.seed);
  while (true) {
    const ElementSet cands = beat_points(p, t.final, basepoint);
    if (cands.none()) break;
    auto ids = members(cands);
    Id pick = ids.front();
    if (policy.order == RemovalPolicy::Order::HighestId)
      pick = ids.back();
    else if (policy.order == RemovalPolicy::Order::Random)
      pick = ids[rng() % ids.size()];
    detail::push_step(t, remove_beat_point(p, t.final, pick, policy.prefer));
  }
  CoreResult r{induced(p, t.final), std::move(t)};
  return r;
}

inline CoreResult core(const PointedPoset& pp, RemovalPolicy policy = {}) {
  return core(pp.poset, pp.basepoint, policy);
}

/// The standard sequence: D, U, D, U, ... on the shrinking subspace. Only
/// non-identity steps are recorded. Stops after two consecutive identity
/// rounds (stabilized) or after max_rounds (stabilized = false).
inline DismantlingTrace standard_sequence(const Poset& p, std::optional<Id> basepoint = std::nullopt,
                                          std::size_t max_rounds = 1000) {
  if (max_rounds < 1) throw Error("standard_sequence: max_rounds must be >= 1");
  if (basepoint && *basepoint >= p.size()) throw Error("basepoint out of range");
  DismantlingTrace t = detail::start_trace(p, basepoint);
  std::size_t idle = 0;
  t.stabilized = false;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    const bool upward = round % 2 == 1;
    RetractionStep s = upward ? bulk_up(p, t.final, basepoint) : bulk_down(p, t.final, basepoint);
    t.rounds = round + 1;
    if (s.is_identity()) {
      if (++idle == 2) {
        t.stabilized = true;
        break;
      }
      continue;
    }
    idle = 0;
    t.effective_rounds = round + 1;
    detail::push_step(t, std::move(s));
  }
  return t;
}

struct DeformationCheck {
  bool retraction = false;          // composed is a retraction onto final
  bool steps_comparative = false;   // every step is a comparative retraction of its domain
  bool witness_chain = false;       // prefix compositions form a rel-final comparability chain
  bool searched = false;            // C(X, X) was small enough for an independent search
  bool search_connected = false;    // search found composed joined to id rel final

  bool ok() const {
    return retraction && steps_comparative && witness_chain && (!searched || search_connected);
  }
};

/// Confirms a trace yields a strong deformation retraction onto its final
/// subspace. The explicit witness is the chain id, s1, s2∘s1, ...; when
/// |C(X, X)| <= guard, an independent search in the maps fixing `final`
/// pointwise is also run.
inline DeformationCheck verify_strong_deformation(const DismantlingTrace& t,
                                                  std::size_t guard = 200'000) {
  DeformationCheck c;
  const Poset& p = t.start;
  c.retraction = is_retraction(p, t.composed, t.final).is_retraction;

  c.steps_comparative = true;
  for (const auto& s : t.steps) {
    bool ok = detail::monotone_on(p, s.domain, s.map);
    ElementSet img(p.size());
    for (Id x : members(s.domain)) {
      img.set(s.map(x));
      if (!p.comparable(x, s.map(x))) ok = false;
    }
    for (Id x : members(s.image))
      if (s.map(x) != x) ok = false;
    if (img != s.image || (s.removed & s.image).any()) ok = false;
    if (!ok) c.steps_comparative = false;
  }

  c.witness_chain = true;
  MonotoneMap h = identity(p);
  ElementSet dom = p.all();
  for (const auto& s : t.steps) {
    if (s.domain != dom) c.witness_chain = false;
    MonotoneMap next = compose(s.map, h);
    if (!is_monotone(p, p, next) ||
        !(pointwise_leq(p, h, next) || pointwise_leq(p, next, h)))
      c.witness_chain = false;
    for (Id a : members(t.final))
      if (next(a) != a) c.witness_chain = false;
    h = std::move(next);
    dom = s.image;
  }
  if (h != t.composed) c.witness_chain = false;

  if (!is_monotone(p, p, t.composed)) return c;
  std::optional<FunctionPoset> maps;
  try {
    maps.emplace(enumerate_monotone(p, p, guard));
  } catch (const GuardExceeded&) {
    return c;
  }
  const FunctionPoset& cxx = *maps;
  const auto fixed = members(t.final);
  std::vector<bool> allowed(cxx.size());
  for (std::size_t i = 0; i < cxx.size(); ++i)
    allowed[i] = std::all_of(fixed.begin(), fixed.end(),
                             [&](Id a) { return cxx.map(i)(a) == a; });
  const std::size_t from = cxx.require_index(identity(p));
  const std::size_t to = cxx.require_index(t.composed);
  std::vector<bool> seen(cxx.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : cxx.single_point_neighbours(v))
      if (allowed[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  c.searched = true;
  c.search_connected = seen[to];
  return c;
}

}  // namespace alexposet
