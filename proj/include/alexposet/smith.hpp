#pragma once

// Smith normal form of dense integer matrices. The int64 path uses checked
// arithmetic and throws SmithOverflow; callers retry with cpp_int.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alexposet {

class SmithOverflow : public std::overflow_error {
 public:
  SmithOverflow() : std::overflow_error("integer overflow in Smith normal form") {}
};

using BigInt = boost::multiprecision::cpp_int;

template <typename Int>
using IntMatrix = std::vector<std::vector<Int>>;

namespace detail {

template <typename Int>
struct Checked {
  static Int sub_mul(const Int& a, const Int& q, const Int& b) { return a - q * b; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
};

template <>
struct Checked<std::int64_t> {
  static std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
    std::int64_t prod = 0, out = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
      throw SmithOverflow();
    return out;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw SmithOverflow();
    return out;
  }
  static std::int64_t abs(std::int64_t a) {
    if (a == INT64_MIN) throw SmithOverflow();
    return a < 0 ? -a : a;
  }
};

}  // namespace detail

/// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form (all > 0).
/// The matrix is taken by value and destroyed.
template <typename Int>
std::vector<Int> smith_invariant_factors(IntMatrix<Int> a) {
  using Ops = detail::Checked<Int>;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Int> out;

  const auto move_min_to = [&](std::size_t t) {
    // Smallest nonzero |entry| in the trailing block, swapped to (t, t).
    bool found = false;
    Int best = 0;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int v = Ops::abs(a[i][j]);
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    std::swap(a[t], a[bi]);
    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][bj]);
    return true;
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    if (!move_min_to(t)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = Ops::sub_mul(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = Ops::sub_mul(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility of the trailing block by the pivot.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        for (std::size_t j = t; j < cols; ++j) a[t][j] = Ops::add(a[t][j], a[bad][j]);
      }
      // Bring the smallest entry of row t / column t to the pivot.
      std::size_t bi = t, bj = t;
      Int best = Ops::abs(a[t][t]);
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0 && Ops::abs(a[i][t]) < best) {
          best = Ops::abs(a[i][t]);
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0 && Ops::abs(a[t][j]) < best) {
          best = Ops::abs(a[t][j]);
          bi = t;
          bj = j;
        }
      if (bi != t) std::swap(a[t], a[bi]);
      if (bj != t)
        for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][bj]);
    }
    out.push_back(Ops::abs(a[t][t]));
  }
  return out;
}

/// Invariant factors as big integers, trying checked int64 first.
inline std::vector<BigInt> smith_invariant_factors_exact(const IntMatrix<std::int64_t>& m) {
  try {
    auto small = smith_invariant_factors<std::int64_t>(m);
    return {small.begin(), small.end()};
  } catch (const SmithOverflow&) {
    IntMatrix<BigInt> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return smith_invariant_factors<BigInt>(std::move(big));
  }
}

}  // namespace alexposet
