#pragma once

// ε-dominance and ε-approximate Pareto sets. A kept entry may be worse than
// a covered entry by at most a factor 1+ε per axis (ratio semantics), so the
// construction partitions each axis into multiplicative buckets of ratio 1+ε
// and keeps one representative per nonempty cell. Entries with a nonpositive
// value on any axis fall outside ratio semantics and are retained verbatim.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "paretolab/errors.hpp"
#include "paretolab/pareto_set.hpp"

namespace paretolab {

template <typename T>
struct EpsApproxSet {
  std::vector<ScoredSolution<T>> entries;  // subset of the source set, canonical order
  double epsilon = 0.0;
};

/// True iff y is worse than x by at most a factor 1+eps on every axis:
/// value(y)/value(x) <= 1+eps on minimize axes, value(x)/value(y) <= 1+eps
/// on maximize axes. Requires strictly positive values throughout.
template <typename T>
bool eps_dominates(const ObjectiveVector<T>& y, const ObjectiveVector<T>& x,
                   const Directions& dirs, double eps) {
  detail::check_comparable(y, x, dirs);
  if (eps < 0.0) throw ContractError("eps must be >= 0");
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    double vy = static_cast<double>(y[k]);
    double vx = static_cast<double>(x[k]);
    if (!(vy > 0.0) || !(vx > 0.0))
      throw ContractError("eps-dominance needs strictly positive objective values");
    if (dirs[k] == Direction::Minimize) {
      if (vy > vx * (1.0 + eps)) return false;
    } else {
      if (vx > vy * (1.0 + eps)) return false;
    }
  }
  return true;
}

namespace detail {

template <typename T>
bool all_positive(const ObjectiveVector<T>& v) {
  for (const T& x : v)
    if (!(static_cast<double>(x) > 0.0)) return false;
  return true;
}

/// Coverage predicate used by eps_coreset and its tests: identical objective
/// vectors cover each other even when ratio semantics do not apply.
template <typename T>
bool eps_covers(const ScoredSolution<T>& y, const ScoredSolution<T>& x, const Directions& dirs,
                double eps) {
  if (y.objective == x.objective) return true;
  if (!all_positive(y.objective) || !all_positive(x.objective)) return false;
  return eps_dominates(y.objective, x.objective, dirs, eps);
}

}  // namespace detail

/// Greedy construction of an ε-approximation. Every source entry is covered
/// by a kept entry (identity for entries with nonpositive values,
/// ε-dominance otherwise).
///
/// For d = 2 the kept entries come from a single walk along the canonical
/// staircase order, keeping an entry exactly when the previously kept one no
/// longer ε-covers it. Consecutive keeps then differ by more than a 1+ε
/// factor on the trailing axis, which gives the multiplicative-bucket size
/// bound directly and makes |coreset| monotone nonincreasing in ε. (A plain
/// floor-bucket grid is not monotone: coarser buckets are not nested in
/// finer ones, and off-by-one flips do occur in practice.)
///
/// For d >= 3 each axis is partitioned into multiplicative buckets of ratio
/// 1+ε anchored at the axis minimum; one representative is kept per
/// nonempty cell (the lexicographically smallest solution). A final sweep
/// re-checks coverage with the exact predicate and retains any boundary
/// stragglers, so the coverage invariant holds unconditionally.
template <typename T>
EpsApproxSet<T> eps_coreset(const ParetoSet<T>& pareto, double eps) {
  if (!(eps > 0.0)) throw ContractError("eps must be > 0");
  const Directions& dirs = pareto.directions;
  if (dirs.size() < 2) throw ContractError("objective dimension must be >= 2");
  const std::size_t d = dirs.size();

  std::vector<const ScoredSolution<T>*> grid_entries;  // strictly positive, canonical order
  std::vector<const ScoredSolution<T>*> kept;
  for (const auto& e : pareto.entries) {
    if (detail::all_positive(e.objective))
      grid_entries.push_back(&e);
    else
      kept.push_back(&e);  // ratio semantics break at zero: retain verbatim
  }

  if (d == 2) {
    const ScoredSolution<T>* last = nullptr;
    for (const auto* e : grid_entries) {
      if (last == nullptr || !detail::eps_covers(*last, *e, dirs, eps)) {
        kept.push_back(e);
        last = e;
      }
    }
  } else if (!grid_entries.empty()) {
    std::vector<double> v_min(d, std::numeric_limits<double>::infinity());
    for (const auto* e : grid_entries)
      for (std::size_t k = 0; k < d; ++k)
        v_min[k] = std::min(v_min[k], static_cast<double>(e->objective[k]));

    const double log_ratio = std::log1p(eps);
    std::map<std::vector<std::int64_t>, const ScoredSolution<T>*> cells;
    std::vector<std::int64_t> key(d);
    for (const auto* e : grid_entries) {
      for (std::size_t k = 0; k < d; ++k)
        key[k] = static_cast<std::int64_t>(
            std::floor(std::log(static_cast<double>(e->objective[k]) / v_min[k]) / log_ratio));
      auto [it, inserted] = cells.emplace(key, e);
      if (!inserted && e->solution < it->second->solution) it->second = e;
    }
    for (const auto& [unused, e] : cells) kept.push_back(e);
  }

  // exact-coverage sweep: floating bucket arithmetic can leave a boundary
  // entry marginally uncovered; retain any such entry
  for (const auto& e : pareto.entries) {
    bool covered = false;
    for (const auto* y : kept)
      if (detail::eps_covers(*y, e, dirs, eps)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(&e);
  }

  EpsApproxSet<T> out;
  out.epsilon = eps;
  out.entries.reserve(kept.size());
  for (const auto* e : kept) out.entries.push_back(*e);
  std::sort(out.entries.begin(), out.entries.end(),
            [&](const ScoredSolution<T>& a, const ScoredSolution<T>& b) {
              return detail::CanonicalLess<T>(dirs)(a, b);
            });
  return out;
}

}  // namespace paretolab
