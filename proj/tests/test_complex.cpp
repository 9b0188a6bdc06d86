#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "alexposet/complex.hpp"
#include "alexposet/generators.hpp"

using namespace alexposet;
using boost::multiprecision::cpp_rational;

namespace {

// Rank over the rationals by plain Gaussian elimination.
std::size_t rational_rank(const IntMatrix<std::int64_t>& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<cpp_rational>> a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const cpp_rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Unreduced Betti numbers from rational ranks of the boundary maps.
std::vector<std::size_t> rational_betti(const SimplicialComplex& k) {
  std::vector<std::size_t> ranks(k.by_dim.size() + 1, 0);
  for (std::size_t d = 1; d < k.by_dim.size(); ++d) ranks[d] = rational_rank(boundary_matrix(k, d));
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < k.by_dim.size(); ++d) out.push_back(k.by_dim[d].size() - ranks[d] - ranks[d + 1]);
  return out;
}

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  // Laplace expansion; only used on minors up to 3x3.
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1 : -1) * a[0][c] * determinant(minor);
  }
  return det;
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
// factor_k = d_k / d_{k-1}.
std::vector<BigInt> determinantal_factors(const IntMatrix<std::int64_t>& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    BigInt g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
      do {
        std::vector<std::vector<BigInt>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<BigInt> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        g = big_gcd(g, determinant(sub));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Face poset of the 6-vertex triangulation of the real projective plane.
Poset projective_plane_faces() {
  const std::vector<std::array<int, 3>> tris{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                             {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (seen.insert(s).second) labels.push_back(s);
  };
  for (const auto& t : tris) {
    const std::string tri = std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
    add(tri);
    for (int skip = 0; skip < 3; ++skip) {
      std::string edge;
      for (int i = 0; i < 3; ++i)
        if (i != skip) edge += std::to_string(t[i]);
      add(edge);
      covers.emplace_back(edge, tri);
      add(std::string(1, edge[0]));
      add(std::string(1, edge[1]));
      covers.emplace_back(std::string(1, edge[0]), edge);
      covers.emplace_back(std::string(1, edge[1]), edge);
    }
  }
  return from_covers(labels, covers);
}

}  // namespace

TEST(Smith, Examples) {
  EXPECT_EQ(smith_invariant_factors<std::int64_t>({{2, 4}, {6, 8}}), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(smith_invariant_factors<std::int64_t>({{0, 0}, {0, 0}}), std::vector<std::int64_t>{});
  EXPECT_EQ(smith_invariant_factors<std::int64_t>({{2, 0}, {0, 3}}), (std::vector<std::int64_t>{1, 6}));
  EXPECT_EQ(smith_invariant_factors<std::int64_t>({{1, 1, 1}}), (std::vector<std::int64_t>{1}));
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    IntMatrix<std::int64_t> m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 13) - 6;
    const auto got = smith_invariant_factors_exact(m);
    EXPECT_EQ(got, determinantal_factors(m)) << trial;
  }
}

TEST(Smith, OverflowFallsBackToBigIntegers) {
  const std::int64_t big = std::int64_t{1} << 61;
  const IntMatrix<std::int64_t> m{{3, big}, {big, 5}};
  EXPECT_THROW(smith_invariant_factors<std::int64_t>(m), SmithOverflow);
  EXPECT_EQ(smith_invariant_factors_exact(m), determinantal_factors(m));
}

TEST(OrderComplex, Examples) {
  const SimplicialComplex c3 = order_complex(chain(3));
  ASSERT_EQ(c3.by_dim.size(), 3u);
  EXPECT_EQ(c3.by_dim[0].size(), 3u);
  EXPECT_EQ(c3.by_dim[1].size(), 3u);
  EXPECT_EQ(c3.by_dim[2].size(), 1u);
  EXPECT_EQ(c3.total(), 7u);
  const SimplicialComplex k = order_complex(crown(2));
  EXPECT_EQ(k.by_dim[0].size(), 4u);
  EXPECT_EQ(k.by_dim[1].size(), 4u);
  EXPECT_EQ(euler_characteristic(k), 0);
  EXPECT_EQ(order_complex(Poset{}).total(), 0u);
  EXPECT_THROW(order_complex(chain(12)), GuardExceeded);
}

TEST(Homology, Examples) {
  const HomologyProfile pt = poset_homology(chain(1), true);
  EXPECT_TRUE(pt.acyclic());
  const HomologyProfile two = poset_homology(antichain(2), true);
  EXPECT_EQ(two.betti(0), 1u);
  EXPECT_EQ(poset_homology(antichain(2), false).betti(0), 2u);
  const HomologyProfile empty = poset_homology(Poset{}, true);
  EXPECT_EQ(empty.betti_minus_one, 1u);
  EXPECT_FALSE(empty.acyclic());
  EXPECT_THROW(poset_homology(chain(2), false).acyclic(), std::logic_error);
  std::ostringstream os;
  os << poset_homology(crown(2), true);
  EXPECT_EQ(os.str(), "reduced(0; 1)");
}

TEST(Homology, CrownsAreCircles) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const HomologyProfile h = poset_homology(crown(n), true);
    EXPECT_EQ(h.betti(0), 0u);
    EXPECT_EQ(h.betti(1), 1u);
    for (const auto& d : h.degrees) EXPECT_TRUE(d.torsion.empty());
  }
}

TEST(Homology, ProjectivePlaneHasTwoTorsion) {
  const Poset p = projective_plane_faces();
  ASSERT_EQ(p.size(), 31u);
  const HomologyProfile h = poset_homology(p, false);
  EXPECT_EQ(h.betti(0), 1u);
  EXPECT_EQ(h.betti(1), 0u);
  EXPECT_EQ(h.betti(2), 0u);
  ASSERT_EQ(h.degrees[1].torsion.size(), 1u);
  EXPECT_EQ(h.degrees[1].torsion[0], 2);
  EXPECT_TRUE(h.degrees[2].torsion.empty());
  EXPECT_EQ(h.euler_characteristic(), 1);
}

TEST(Homology, BettiMatchesRationalRank) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Poset p = random_poset(1 + seed % 8, 0.35, seed);
    const SimplicialComplex k = order_complex(p);
    const HomologyProfile h = homology(k, false);
    const auto expected = rational_betti(k);
    for (std::size_t d = 0; d < expected.size(); ++d) EXPECT_EQ(h.betti(d), expected[d]) << seed;
    EXPECT_EQ(h.euler_characteristic(), euler_characteristic(k));
    const HomologyProfile r = homology(k, true);
    EXPECT_EQ(r.euler_characteristic(), euler_characteristic(k));
    EXPECT_EQ(r.betti(0) + 1, h.betti(0));
  }
}

TEST(Homology, ProfilesCompareDegreeByDegree) {
  EXPECT_EQ(poset_homology(fence(5), false), poset_homology(chain(1), false));
  EXPECT_FALSE(poset_homology(crown(2), false) == poset_homology(chain(1), false));
  EXPECT_FALSE(poset_homology(chain(1), true) == poset_homology(chain(1), false));
}

TEST(Homology, InvariantUnderReduction) {
  EXPECT_TRUE(homology_invariant_under_reduction(fence(7)));
  // crown(2) with a pendant element hung below a1
  const Poset c = from_covers({"a1", "a2", "b1", "b2", "p"},
                              {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}, {"p", "a1"}});
  EXPECT_TRUE(homology_invariant_under_reduction(c));
  EXPECT_EQ(poset_homology(c, true).betti(1), 1u);
  for (std::uint64_t seed = 0; seed < 60; ++seed)
    EXPECT_TRUE(homology_invariant_under_reduction(random_poset(1 + seed % 8, 0.4, seed)));
}

TEST(Link, Examples) {
  const Poset c = crown(2);
  const Subposet l = link(c, 0);
  EXPECT_EQ(l.poset.size(), 2u);
  EXPECT_EQ(l.poset.cover_count(), 0u);
  EXPECT_EQ(link(chain(3), 1).poset.cover_count(), 1u);
  EXPECT_TRUE(link(antichain(3), 0).poset.empty());
}

TEST(Gamma, Examples) {
  EXPECT_EQ(is_gamma_point(chain(3), 1), GammaVerdict::CertifiedYes);
  EXPECT_EQ(is_gamma_point(crown(2), 0), GammaVerdict::No);
  EXPECT_EQ(is_gamma_point(antichain(2), 0), GammaVerdict::No);  // empty link
  // A cone over crown(3): the apex link is a circle, the others are contractible.
  Poset cone = from_covers({"a1", "a2", "a3", "b1", "b2", "b3", "t"},
                           {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b2"}, {"a2", "b3"}, {"a3", "b3"},
                            {"a3", "b1"}, {"b1", "t"}, {"b2", "t"}, {"b3", "t"}});
  EXPECT_EQ(is_gamma_point(cone, cone.id_of("t")), GammaVerdict::No);
  EXPECT_EQ(is_gamma_point(cone, cone.id_of("b1")), GammaVerdict::CertifiedYes);
  EXPECT_EQ(to_string(GammaVerdict::HomologyYes), std::string("homology_yes"));
}

TEST(Gamma, AcyclicCoreLinkGivesHomologyEvidenceOnly) {
  // A connected 9-point core with trivial reduced homology, coned off by t.
  const std::vector<std::pair<Id, Id>> pairs{{0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 7},
                                             {3, 8}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {5, 8}};
  const Poset w = Poset::from_pairs(detail::numbered("w", 9), pairs);
  ASSERT_TRUE(is_connected(w));
  ASSERT_TRUE(is_core(w));
  ASSERT_TRUE(poset_homology(w, true).acyclic());
  std::vector<std::pair<Id, Id>> cone_pairs = pairs;
  for (Id m : members(max_elements(w))) cone_pairs.emplace_back(m, 9);
  auto labels = detail::numbered("w", 9);
  labels.push_back("t");
  const Poset cone = Poset::from_pairs(labels, cone_pairs);
  EXPECT_EQ(is_gamma_point(cone, 9), GammaVerdict::HomologyYes);
}

TEST(Gamma, UnknownWhenLinkTooLarge) {
  const Poset p = disjoint_union(crown(3), chain(1));
  // Suspend everything under a new bottom so the link is all of crown(3) plus a point.
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : p.covers()) covers.emplace_back(p.label(a), p.label(b));
  std::vector<std::string> labels = p.labels();
  labels.push_back("z");
  for (Id m : members(min_elements(p))) covers.emplace_back("z", p.label(m));
  const Poset s = from_covers(labels, covers);
  EXPECT_EQ(is_gamma_point(s, s.id_of("z"), 5), GammaVerdict::Unknown);
  EXPECT_EQ(is_gamma_point(s, s.id_of("z")), GammaVerdict::No);
}

TEST(Gamma, RemovalPreservesHomologyWhenLinkAcyclic) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Poset p = random_poset(2 + seed % 7, 0.4, seed + 500);
    for (Id x = 0; x < p.size(); ++x) {
      const GammaVerdict v = is_gamma_point(p, x);
      ElementSet rest = p.all();
      rest.reset(x);
      const bool same = poset_homology(p, false) == poset_homology(induced(p, rest).poset, false);
      if (v == GammaVerdict::CertifiedYes || v == GammaVerdict::HomologyYes) EXPECT_TRUE(same) << seed;
    }
  }
}
