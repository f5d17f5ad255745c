#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "paretolab/errors.hpp"
#include "paretolab/objective.hpp"
#include "paretolab/solution.hpp"

namespace paretolab {

/// A solution together with its evaluated objective vector.
template <typename T>
struct ScoredSolution {
  Solution solution;
  ObjectiveVector<T> objective;

  bool operator==(const ScoredSolution&) const = default;
};

namespace detail {

/// Canonical entry order: ascending on the first MINIMIZE axis, then
/// lexicographically on the remaining axes in canonical (all-minimize)
/// orientation; final tie on the solution bits. When no MINIMIZE axis
/// exists, axis 0 in canonical orientation leads.
template <typename T>
struct CanonicalLess {
  const Directions* dirs;
  std::size_t key_axis;

  explicit CanonicalLess(const Directions& d) : dirs(&d) {
    key_axis = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == Direction::Minimize) {
        key_axis = k;
        break;
      }
    }
  }

  bool operator()(const ScoredSolution<T>& a, const ScoredSolution<T>& b) const {
    const Directions& d = *dirs;
    T ka = canonical(a.objective[key_axis], d[key_axis]);
    T kb = canonical(b.objective[key_axis], d[key_axis]);
    if (ka != kb) return ka < kb;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k == key_axis) continue;
      T va = canonical(a.objective[k], d[k]);
      T vb = canonical(b.objective[k], d[k]);
      if (va != vb) return va < vb;
    }
    return a.solution < b.solution;
  }
};

}  // namespace detail

/// A dominance-free collection of scored solutions in canonical order.
/// Invariants (checked by validate(), relied upon everywhere):
///   - no entry dominates another,
///   - no two entries share an objective vector (ties collapse to the
///     lexicographically smallest solution),
///   - entries are sorted canonically.
template <typename T>
struct ParetoSet {
  Directions directions;
  std::vector<ScoredSolution<T>> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }

  void sort_canonical() {
    std::sort(entries.begin(), entries.end(), detail::CanonicalLess<T>(directions));
  }

  /// Throws InvariantError if any structural invariant is broken.
  void validate() const {
    detail::CanonicalLess<T> less(directions);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].objective.size() != directions.size())
        throw InvariantError("pareto set entry dimension mismatch");
      if (i > 0 && !less(entries[i - 1], entries[i]))
        throw InvariantError("pareto set entries not in canonical order");
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = 0; j < entries.size(); ++j) {
        if (i == j) continue;
        if (entries[i].objective == entries[j].objective)
          throw InvariantError("duplicate objective vector in pareto set");
        if (dominates(entries[i].objective, entries[j].objective, directions))
          throw InvariantError("dominated entry in pareto set");
      }
  }

  bool operator==(const ParetoSet&) const = default;
};

/// Objective values only, in canonical entry order.
template <typename T>
std::vector<ObjectiveVector<T>> objective_values(const ParetoSet<T>& set) {
  std::vector<ObjectiveVector<T>> out;
  out.reserve(set.entries.size());
  for (const auto& e : set.entries) out.push_back(e.objective);
  return out;
}

}  // namespace paretolab
