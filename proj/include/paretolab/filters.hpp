#pragma once

// Non-dominance filtering kernels.
//
// filter_naive is the quadratic pairwise oracle and stays deliberately
// simple; filter_sweep2d and filter_klp must produce identical output and
// are cross-checked against it in the tests. All kernels canonicalize to
// all-minimize space at the boundary (maximize axes negated); I/O keeps the
// natural orientation.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "paretolab/errors.hpp"
#include "paretolab/pareto_set.hpp"

namespace paretolab {

inline constexpr int kBruteforceMaxItems = 25;

namespace detail {

/// m points in canonical min-space, row-major: vals[i*d + k].
template <typename T>
struct FlatPoints {
  std::vector<T> vals;
  std::size_t d = 0;

  std::size_t count() const { return d == 0 ? 0 : vals.size() / d; }
  const T* row(std::size_t i) const { return vals.data() + i * d; }
};

template <typename T>
int row_compare(const FlatPoints<T>& fp, std::uint32_t a, std::uint32_t b) {
  const T* ra = fp.row(a);
  const T* rb = fp.row(b);
  for (std::size_t k = 0; k < fp.d; ++k) {
    if (ra[k] < rb[k]) return -1;
    if (ra[k] > rb[k]) return 1;
  }
  return 0;
}

/// Weak dominance on the axis suffix [k, d): every coordinate of a is <=
/// the matching coordinate of b.
template <typename T>
bool weakly_dominates_suffix(const FlatPoints<T>& fp, std::uint32_t a, std::uint32_t b,
                             std::size_t k) {
  const T* ra = fp.row(a);
  const T* rb = fp.row(b);
  for (std::size_t j = k; j < fp.d; ++j)
    if (ra[j] > rb[j]) return false;
  return true;
}

/// Strict 2-D staircase sweep. `order` is lex-sorted with distinct rows.
template <typename T>
std::vector<std::uint32_t> sweep2d(const FlatPoints<T>& fp, const std::vector<std::uint32_t>& order) {
  std::vector<std::uint32_t> out;
  bool first = true;
  T best{};
  for (std::uint32_t i : order) {
    T v1 = fp.row(i)[1];
    if (first || v1 < best) {
      out.push_back(i);
      best = v1;
      first = false;
    }
  }
  return out;
}

template <typename T>
std::vector<std::uint32_t> maxima_pairwise(const FlatPoints<T>& fp,
                                           const std::uint32_t* idx, std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    bool killed = false;
    for (std::size_t j = 0; j < count && !killed; ++j)
      killed = j != i && weakly_dominates_suffix(fp, idx[j], idx[i], 0);
    if (!killed) out.push_back(idx[i]);
  }
  return out;
}

/// Removes from B every point weakly dominated on axes [k, k+1] by some
/// point of A.
template <typename T>
std::vector<std::uint32_t> cross_staircase(const FlatPoints<T>& fp,
                                           std::vector<std::uint32_t> a,
                                           std::vector<std::uint32_t> b, std::size_t k) {
  auto by_axis = [&](std::uint32_t x, std::uint32_t y) { return fp.row(x)[k] < fp.row(y)[k]; };
  std::sort(a.begin(), a.end(), by_axis);
  std::sort(b.begin(), b.end(), by_axis);
  std::vector<std::uint32_t> out;
  out.reserve(b.size());
  std::size_t ai = 0;
  bool has_best = false;
  T best{};
  for (std::uint32_t bi : b) {
    while (ai < a.size() && fp.row(a[ai])[k] <= fp.row(bi)[k]) {
      T v = fp.row(a[ai])[k + 1];
      if (!has_best || v < best) {
        best = v;
        has_best = true;
      }
      ++ai;
    }
    if (!(has_best && best <= fp.row(bi)[k + 1])) out.push_back(bi);
  }
  return out;
}

/// KLP filter step: removes from B every point weakly dominated by some
/// point of A on the axis suffix [k, d). Recurses on a median split of the
/// current axis, dropping to a staircase sweep once two axes remain.
template <typename T>
std::vector<std::uint32_t> cross_filter(const FlatPoints<T>& fp, std::vector<std::uint32_t> a,
                                        std::vector<std::uint32_t> b, std::size_t k) {
  if (a.empty() || b.empty()) return b;
  if (k == fp.d - 2) return cross_staircase(fp, std::move(a), std::move(b), k);
  if (a.size() * b.size() <= 1024) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t bi : b) {
      bool killed = false;
      for (std::uint32_t aj : a)
        if (weakly_dominates_suffix(fp, aj, bi, k)) {
          killed = true;
          break;
        }
      if (!killed) out.push_back(bi);
    }
    return out;
  }

  std::vector<T> axis;
  axis.reserve(a.size() + b.size());
  for (std::uint32_t i : a) axis.push_back(fp.row(i)[k]);
  for (std::uint32_t i : b) axis.push_back(fp.row(i)[k]);
  auto [mn, mx] = std::minmax_element(axis.begin(), axis.end());
  if (*mn == *mx) return cross_filter(fp, std::move(a), std::move(b), k + 1);

  std::nth_element(axis.begin(), axis.begin() + axis.size() / 2, axis.end());
  T vmax = *mx;
  T pivot = axis[axis.size() / 2];
  if (pivot == vmax) {
    // keep the upper side non-trivial: split below the maximum instead
    pivot = *mn;
    for (T v : axis)
      if (v < vmax && v > pivot) pivot = v;
  }

  std::vector<std::uint32_t> a_lo, a_hi, b_lo, b_hi;
  for (std::uint32_t i : a) (fp.row(i)[k] <= pivot ? a_lo : a_hi).push_back(i);
  for (std::uint32_t i : b) (fp.row(i)[k] <= pivot ? b_lo : b_hi).push_back(i);

  // b_lo can only be dominated by a_lo; b_hi by a_hi on the same axes, and
  // by a_lo with axis k already strictly decided.
  std::vector<std::uint32_t> b_lo_surv = cross_filter(fp, a_lo, std::move(b_lo), k);
  std::vector<std::uint32_t> b_hi_surv = cross_filter(fp, std::move(a_hi), std::move(b_hi), k);
  b_hi_surv = cross_filter(fp, std::move(a_lo), std::move(b_hi_surv), k + 1);

  b_lo_surv.insert(b_lo_surv.end(), b_hi_surv.begin(), b_hi_surv.end());
  return b_lo_surv;
}

/// Divide-and-conquer maxima over a lex-sorted slice of distinct rows.
template <typename T>
std::vector<std::uint32_t> klp_rec(const FlatPoints<T>& fp, const std::vector<std::uint32_t>& order,
                                   std::size_t lo, std::size_t hi) {
  if (hi - lo <= 48) return maxima_pairwise(fp, order.data() + lo, hi - lo);
  std::size_t mid = lo + (hi - lo) / 2;
  std::vector<std::uint32_t> left = klp_rec(fp, order, lo, mid);
  std::vector<std::uint32_t> right = klp_rec(fp, order, mid, hi);
  // every left row lex-precedes every right row, so axis 0 already favors
  // the left half; filter the right maxima on the remaining axes
  right = cross_filter(fp, left, std::move(right), 1);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

/// Shared kernel driver: lex-sort, collapse duplicate rows (tie_less picks
/// the survivor), then run the d=2 sweep or the KLP recursion.
/// Returns surviving original indices in unspecified order.
template <typename T, typename TieLess>
std::vector<std::uint32_t> maxima_indices(const FlatPoints<T>& fp, TieLess&& tie_less) {
  std::vector<std::uint32_t> order(fp.count());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    int c = row_compare(fp, x, y);
    if (c != 0) return c < 0;
    return tie_less(x, y);
  });
  std::vector<std::uint32_t> dedup;
  dedup.reserve(order.size());
  for (std::uint32_t i : order)
    if (dedup.empty() || row_compare(fp, dedup.back(), i) != 0) dedup.push_back(i);

  if (dedup.empty()) return dedup;
  if (fp.d == 2) return sweep2d(fp, dedup);
  return klp_rec(fp, dedup, 0, dedup.size());
}

template <typename T>
void check_uniform(const std::vector<ScoredSolution<T>>& points, const Directions& dirs) {
  if (dirs.size() < 2) throw ContractError("objective dimension must be >= 2");
  for (const auto& p : points)
    if (p.objective.size() != dirs.size())
      throw ContractError("point dimension does not match direction profile");
}

template <typename T>
FlatPoints<T> canonical_flat(const std::vector<ScoredSolution<T>>& points, const Directions& dirs) {
  FlatPoints<T> fp;
  fp.d = dirs.size();
  fp.vals.resize(points.size() * fp.d);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = 0; k < fp.d; ++k)
      fp.vals[i * fp.d + k] = canonical(points[i].objective[k], dirs[k]);
  return fp;
}

template <typename T>
ParetoSet<T> filter_via_kernel(const std::vector<ScoredSolution<T>>& points,
                               const Directions& dirs) {
  check_uniform(points, dirs);
  FlatPoints<T> fp = canonical_flat(points, dirs);
  auto surv = maxima_indices(
      fp, [&](std::uint32_t x, std::uint32_t y) { return points[x].solution < points[y].solution; });
  ParetoSet<T> out;
  out.directions = dirs;
  out.entries.reserve(surv.size());
  for (std::uint32_t i : surv) out.entries.push_back(points[i]);
  out.sort_canonical();
  return out;
}

}  // namespace detail

/// Pairwise-comparison filter: the ground-truth oracle. Quadratic and
/// deliberately free of the cleverness in the other kernels.
template <typename T>
ParetoSet<T> filter_naive(const std::vector<ScoredSolution<T>>& points, const Directions& dirs) {
  detail::check_uniform(points, dirs);
  ParetoSet<T> out;
  out.directions = dirs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < points.size() && !drop; ++j) {
      if (j == i) continue;
      if (dominates(points[j].objective, points[i].objective, dirs)) {
        drop = true;
      } else if (points[j].objective == points[i].objective) {
        // tie on the full objective vector: keep the lexicographically
        // smallest solution, first occurrence on identical entries
        drop = points[j].solution < points[i].solution ||
               (points[j].solution == points[i].solution && j < i);
      }
    }
    if (!drop) out.entries.push_back(points[i]);
  }
  out.sort_canonical();
  return out;
}

/// Linear sweep after sorting on the minimize axis. d = 2 only.
template <typename T>
ParetoSet<T> filter_sweep2d(const std::vector<ScoredSolution<T>>& points, const Directions& dirs) {
  if (dirs.size() != 2) throw ContractError("filter_sweep2d requires d == 2");
  return detail::filter_via_kernel(points, dirs);
}

/// Kung–Luccio–Preparata divide-and-conquer maxima filter. Handles any
/// d >= 2 (d = 2 degenerates to the sweep).
template <typename T>
ParetoSet<T> filter_klp(const std::vector<ScoredSolution<T>>& points, const Directions& dirs) {
  detail::check_uniform(points, dirs);
  return detail::filter_via_kernel(points, dirs);
}

/// Enumerates all 2^n solutions and filters. Ground truth for every other
/// Pareto-producing operation; guarded at n <= 25.
template <typename T, typename Eval>
ParetoSet<T> pareto_bruteforce(Eval&& evaluate, int n, const Directions& dirs) {
  if (n < 0 || n > kBruteforceMaxItems)
    throw GuardError("pareto_bruteforce enumerates 2^n solutions; n must be <= " +
                     std::to_string(kBruteforceMaxItems) + ", got " + std::to_string(n));
  if (dirs.size() < 2) throw ContractError("objective dimension must be >= 2");
  const std::size_t d = dirs.size();
  const std::uint64_t m = std::uint64_t{1} << n;

  detail::FlatPoints<T> fp;
  fp.d = d;
  fp.vals.resize(m * d);
  for (std::uint64_t mask = 0; mask < m; ++mask) {
    ObjectiveVector<T> obj = evaluate(Solution::from_mask(mask, static_cast<std::size_t>(n)));
    if (obj.size() != d) throw ContractError("evaluate returned wrong objective dimension");
    for (std::size_t k = 0; k < d; ++k)
      fp.vals[mask * d + k] = detail::canonical(obj[k], dirs[k]);
  }
  auto surv = detail::maxima_indices(
      fp, [&](std::uint32_t x, std::uint32_t y) { return mask_lex_less(x, y, n); });

  ParetoSet<T> out;
  out.directions = dirs;
  out.entries.reserve(surv.size());
  for (std::uint32_t mask : surv) {
    Solution s = Solution::from_mask(mask, static_cast<std::size_t>(n));
    ObjectiveVector<T> obj = evaluate(s);
    out.entries.push_back(ScoredSolution<T>{std::move(s), std::move(obj)});
  }
  out.sort_canonical();
  return out;
}

}  // namespace paretolab
