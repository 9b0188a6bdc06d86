#pragma once

// Order complexes and their integral simplicial homology, links of points
// and γ-point verdicts.
//
// The link of x is the subspace of points comparable to x, minus x itself.
// Removing x preserves all homology groups iff the link is acyclic; x is a
// γ-point when the link is homotopically trivial, which homology alone
// cannot certify.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexposet/errors.hpp"
#include "alexposet/homotopy.hpp"
#include "alexposet/poset.hpp"
#include "alexposet/reduction.hpp"
#include "alexposet/smith.hpp"

namespace alexposet {

using Simplex = std::vector<Id>;  // sorted vertex ids

struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<Simplex>> by_dim;  // by_dim[d]: d-simplices, sorted

  std::size_t dimension_count() const noexcept { return by_dim.size(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& s : by_dim) t += s.size();
    return t;
  }
};

inline constexpr std::size_t kSimplexGuard = 2000;

/// Simplices are the nonempty chains of P.
inline SimplicialComplex order_complex(const Poset& p, std::size_t guard = kSimplexGuard) {
  SimplicialComplex k;
  k.vertex_count = p.size();
  std::size_t count = 0;
  std::vector<Id> chain;
  auto extend = [&](auto&& self, Id top) -> void {
    if (++count > guard) throw GuardExceeded("order complex (simplices)", guard, count);
    Simplex s = chain;
    std::sort(s.begin(), s.end());
    if (k.by_dim.size() < s.size()) k.by_dim.resize(s.size());
    k.by_dim[s.size() - 1].push_back(std::move(s));
    ElementSet above = p.up_set(top);
    above.reset(top);
    for (Id y : members(above)) {
      chain.push_back(y);
      self(self, y);
      chain.pop_back();
    }
  };
  for (Id x = 0; x < p.size(); ++x) {
    chain = {x};
    extend(extend, x);
  }
  for (auto& level : k.by_dim) std::sort(level.begin(), level.end());
  return k;
}

inline long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (std::size_t d = 0; d < k.by_dim.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(k.by_dim[d].size());
  return chi;
}

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyProfile {
  bool reduced = false;
  std::vector<DegreeHomology> degrees;  // degree 0 .. dim
  std::size_t betti_minus_one = 0;      // reduced only: 1 for the empty complex

  std::size_t betti(std::size_t d) const { return d < degrees.size() ? degrees[d].betti : 0; }

  /// Reduced profile with every group trivial.
  bool acyclic() const {
    if (!reduced) throw std::logic_error("acyclic() needs a reduced profile");
    if (betti_minus_one != 0) return false;
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const DegreeHomology& h) { return h.betti == 0 && h.torsion.empty(); });
  }

  long long euler_characteristic() const {
    long long chi = reduced ? -static_cast<long long>(betti_minus_one) : 0;
    for (std::size_t d = 0; d < degrees.size(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(degrees[d].betti);
    return reduced ? chi + 1 : chi;  // reduced χ is χ - 1
  }

  /// Degree by degree; degrees past the end of either profile are trivial.
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    if (a.reduced != b.reduced || a.betti_minus_one != b.betti_minus_one) return false;
    static const DegreeHomology trivial{};
    for (std::size_t d = 0; d < std::max(a.degrees.size(), b.degrees.size()); ++d) {
      const auto& x = d < a.degrees.size() ? a.degrees[d] : trivial;
      const auto& y = d < b.degrees.size() ? b.degrees[d] : trivial;
      if (!(x == y)) return false;
    }
    return true;
  }
};

inline std::ostream& operator<<(std::ostream& os, const HomologyProfile& h) {
  os << (h.reduced ? "reduced(" : "(");
  for (std::size_t d = 0; d < h.degrees.size(); ++d) {
    if (d) os << "; ";
    os << h.degrees[d].betti;
    for (const auto& t : h.degrees[d].torsion) os << " + Z/" << t;
  }
  return os << ")";
}

/// Boundary matrix of degree d (rows: (d-1)-simplices, cols: d-simplices).
inline IntMatrix<std::int64_t> boundary_matrix(const SimplicialComplex& k, std::size_t d) {
  const auto& cols = k.by_dim.at(d);
  const auto& rows = k.by_dim.at(d - 1);
  std::map<Simplex, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  IntMatrix<std::int64_t> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m[row_index.at(face)][j] = i % 2 == 0 ? 1 : -1;
    }
  return m;
}

namespace detail {
inline void assert_boundary_squares_to_zero(const IntMatrix<std::int64_t>& lower,
                                            const IntMatrix<std::int64_t>& upper) {
  // lower: C_{d-1} -> C_{d-2}, upper: C_d -> C_{d-1}
  for (std::size_t i = 0; i < lower.size(); ++i)
    for (std::size_t j = 0; j < (upper.empty() ? 0 : upper[0].size()); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < upper.size(); ++k) s += lower[i][k] * upper[k][j];
      if (s != 0) throw std::logic_error("boundary of a boundary is nonzero");
    }
}
}  // namespace detail

/// Integral simplicial homology via Smith normal form of the boundary maps.
/// The reduced variant augments C_0 -> Z.
inline HomologyProfile homology(const SimplicialComplex& k, bool reduced,
                                std::size_t guard = kSimplexGuard) {
  if (k.total() > guard) throw GuardExceeded("homology (simplices)", guard, k.total());
  const std::size_t dims = k.by_dim.size();
  // factors[d] = invariant factors of ∂_d : C_d -> C_{d-1}, d >= 1;
  // factors[0] = augmentation when reduced.
  std::vector<std::vector<BigInt>> factors(dims + 1);
  std::optional<IntMatrix<std::int64_t>> previous;
  for (std::size_t d = 1; d < dims; ++d) {
    auto m = boundary_matrix(k, d);
    if (previous) detail::assert_boundary_squares_to_zero(*previous, m);
    factors[d] = smith_invariant_factors_exact(m);
    previous = std::move(m);
  }
  if (reduced && dims > 0) {
    IntMatrix<std::int64_t> eps(1, std::vector<std::int64_t>(k.by_dim[0].size(), 1));
    if (dims > 1) detail::assert_boundary_squares_to_zero(eps, boundary_matrix(k, 1));
    factors[0] = smith_invariant_factors_exact(eps);
  }
  HomologyProfile h;
  h.reduced = reduced;
  h.degrees.resize(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const std::size_t n = k.by_dim[d].size();
    const std::size_t rank_out = factors[d].size();  // rank ∂_d (or ε for d = 0)
    const std::size_t rank_in = factors[d + 1].size();
    h.degrees[d].betti = n - rank_out - rank_in;
    for (const auto& f : factors[d + 1])
      if (f > 1) h.degrees[d].torsion.push_back(f);
  }
  if (reduced && dims == 0) h.betti_minus_one = 1;
  return h;
}

inline HomologyProfile poset_homology(const Poset& p, bool reduced,
                                      std::size_t guard = kSimplexGuard) {
  return homology(order_complex(p, guard), reduced, guard);
}

/// Ĉ_x: the induced subposet on { y != x : y ~ x }.
inline Subposet link(const Poset& p, Id x) {
  ElementSet s = p.comparable_set(x);
  s.reset(x);
  return induced(p, s);
}

enum class GammaVerdict {
  CertifiedYes,  // link's core is a point, so the link is contractible
  HomologyYes,   // link acyclic but its core is larger: homology evidence only
  No,            // link has nonzero reduced homology
  Unknown,       // link too large for the homology computation
};

inline const char* to_string(GammaVerdict v) {
  switch (v) {
    case GammaVerdict::CertifiedYes: return "certified_yes";
    case GammaVerdict::HomologyYes: return "homology_yes";
    case GammaVerdict::No: return "no";
    case GammaVerdict::Unknown: return "unknown";
  }
  return "?";
}

inline GammaVerdict is_gamma_point(const Poset& p, Id x, std::size_t guard = kSimplexGuard) {
  const Poset l = link(p, x).poset;
  if (is_contractible(l)) return GammaVerdict::CertifiedYes;
  try {
    return poset_homology(l, true, guard).acyclic() ? GammaVerdict::HomologyYes : GammaVerdict::No;
  } catch (const GuardExceeded&) {
    return GammaVerdict::Unknown;
  }
}

/// Homology of P equals homology of its core, degree by degree.
inline bool homology_invariant_under_reduction(const Poset& p, std::size_t guard = kSimplexGuard) {
  const Poset c = core(p).core.poset;
  return poset_homology(p, false, guard) == poset_homology(c, false, guard);
}

}  // namespace alexposet
