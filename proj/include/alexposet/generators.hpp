#pragma once

// Constructors for the standard example families and for seeded random
// instances.
//
// Random instances use std::mt19937_64 (fully specified by the C++
// standard). A pair is included when the top 53 bits of the next draw,
// scaled to [0, 1), are below the requested probability; pairs (i, j), i < j,
// are visited row-major. Identical (n, p, seed) therefore yield identical
// posets on every platform.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "alexposet/errors.hpp"
#include "alexposet/poset.hpp"

namespace alexposet {

namespace detail {

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n,
                                         std::size_t first = 0) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline Poset chain(std::size_t n) {
  std::vector<std::pair<Id, Id>> pairs;
  for (Id i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_pairs(detail::numbered("c", n), pairs);
}

inline Poset antichain(std::size_t n) { return Poset::from_pairs(detail::numbered("a", n), {}); }

/// Interval [a, b] of the Khalimsky line: n ⊑ m iff n = m, or |n - m| = 1
/// and m is even. Labels are the integers themselves.
inline Poset khalimsky_interval(long a, long b) {
  if (a > b) throw Error("khalimsky_interval: empty interval");
  std::vector<std::string> labels;
  for (long v = a; v <= b; ++v) labels.push_back(std::to_string(v));
  std::vector<std::pair<Id, Id>> pairs;
  for (long v = a; v < b; ++v) {
    const Id i = static_cast<Id>(v - a);
    if (v % 2 == 0)
      pairs.emplace_back(i + 1, i);  // v + 1 below the even v
    else
      pairs.emplace_back(i, i + 1);
  }
  return Poset::from_pairs(std::move(labels), pairs);
}

/// Zigzag x0 < x1 > x2 < x3 ...
inline Poset fence(std::size_t n) {
  if (n < 1) throw Error("fence: need at least one element");
  std::vector<std::pair<Id, Id>> pairs;
  for (Id i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0)
      pairs.emplace_back(i, i + 1);
    else
      pairs.emplace_back(i + 1, i);
  }
  return Poset::from_pairs(detail::numbered("x", n), pairs);
}

/// The n-crown: minima a1..an (ids 0..n-1), maxima b1..bn (ids n..2n-1),
/// a_i < b_i and a_i < b_{i+1 mod n}.
inline Poset crown(std::size_t n) {
  if (n < 2) throw Error("crown: need n >= 2");
  auto labels = detail::numbered("a", n, 1);
  auto tops = detail::numbered("b", n, 1);
  labels.insert(labels.end(), tops.begin(), tops.end());
  std::vector<std::pair<Id, Id>> pairs;
  for (Id i = 0; i < n; ++i) {
    pairs.emplace_back(i, static_cast<Id>(n + i));
    pairs.emplace_back(i, static_cast<Id>(n + (i + 1) % n));
  }
  return Poset::from_pairs(std::move(labels), pairs);
}

/// Finite spider: a centre `s` below the first element of each leg; leg i
/// is a fence l{i}_1 > l{i}_2 < l{i}_3 > ... hanging off the centre, so the
/// comparabilities alternate upward/downward going outward. Basepoint is the
/// centre. Finite analogue only; the transfinite construction has no finite
/// instance.
inline PointedPoset spider(const std::vector<std::size_t>& lengths) {
  std::vector<std::string> labels{"s"};
  std::vector<std::pair<Id, Id>> pairs;
  for (std::size_t leg = 0; leg < lengths.size(); ++leg) {
    if (lengths[leg] < 1) throw Error("spider: leg lengths must be >= 1");
    Id prev = 0;
    for (std::size_t k = 1; k <= lengths[leg]; ++k) {
      const Id cur = static_cast<Id>(labels.size());
      labels.push_back("l" + std::to_string(leg + 1) + "_" + std::to_string(k));
      // k odd: cur is above prev; k even: cur is below prev.
      if (k % 2 == 1)
        pairs.emplace_back(prev, cur);
      else
        pairs.emplace_back(cur, prev);
      prev = cur;
    }
  }
  return PointedPoset(Poset::from_pairs(std::move(labels), pairs), 0);
}

/// Random DAG on the fixed order 0..n-1 (pair (i, j), i < j, kept with
/// probability edge_prob), closed and reduced.
inline Poset random_poset(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (edge_prob < 0.0 || edge_prob > 1.0) throw Error("random_poset: edge_prob outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Id, Id>> pairs;
  for (Id i = 0; i < n; ++i)
    for (Id j = i + 1; j < n; ++j)
      if (detail::unit_draw(rng) < edge_prob) pairs.emplace_back(i, j);
  return Poset::from_pairs(detail::numbered("v", n), pairs);
}

/// Random poset of height <= 1: every element draws a level (lower/upper)
/// from the top bit of one draw, in id order; then each lower/upper pair
/// (visited row-major over ids) becomes a cover with probability edge_prob.
inline Poset random_height1(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (edge_prob < 0.0 || edge_prob > 1.0) throw Error("random_height1: edge_prob outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<bool> upper(n);
  for (std::size_t i = 0; i < n; ++i) upper[i] = (rng() >> 63) != 0;
  std::vector<std::pair<Id, Id>> pairs;
  for (Id i = 0; i < n; ++i)
    for (Id j = i + 1; j < n; ++j) {
      if (upper[i] == upper[j]) continue;
      if (detail::unit_draw(rng) < edge_prob) {
        if (upper[i])
          pairs.emplace_back(j, i);
        else
          pairs.emplace_back(i, j);
      }
    }
  return Poset::from_pairs(detail::numbered("v", n), pairs);
}

namespace detail {

// Relation bits of a naturally labelled poset on n <= 8 points: bit i*n+j
// set iff i < j in the order.
inline std::uint64_t relabelled_bits(std::uint64_t rel, std::size_t n,
                                     const std::vector<Id>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel >> (i * n + j) & 1U) out |= std::uint64_t{1} << (perm[i] * n + perm[j]);
  return out;
}

inline std::uint64_t brute_canonical(std::uint64_t rel, std::size_t n) {
  std::vector<Id> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, relabelled_bits(rel, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// One representative of every isomorphism class of posets with exactly n
/// elements (n <= 6), found by brute-force canonical forms over all
/// relabellings. Representatives are naturally labelled (x < y implies
/// id(x) < id(y)) and listed in order of first discovery.
inline std::vector<Poset> all_posets(std::size_t n) {
  if (n > 6) throw GuardExceeded("all_posets", 6, n);
  std::vector<std::pair<Id, Id>> slots;
  for (Id i = 0; i < n; ++i)
    for (Id j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::uint64_t rel = 0;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1U) rel |= std::uint64_t{1} << (slots[k].first * n + slots[k].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (!(rel >> (i * n + j) & 1U)) continue;
        for (std::size_t k = 0; k < n; ++k)
          if ((rel >> (j * n + k) & 1U) && !(rel >> (i * n + k) & 1U)) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    if (!seen.insert(detail::brute_canonical(rel, n)).second) continue;
    std::vector<std::pair<Id, Id>> pairs;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1U) pairs.push_back(slots[k]);
    out.push_back(Poset::from_pairs(detail::numbered("p", n), pairs));
  }
  return out;
}

/// Isomorphism classes of all posets with at most n elements, by size.
inline std::vector<Poset> all_posets_up_to(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = all_posets(k);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace alexposet
