#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paretolab/errors.hpp"
#include "paretolab/scalar.hpp"

namespace paretolab {

/// d objective values (d >= 2). One scalar representation per instance:
/// either exact 64-bit integers or finite 64-bit reals, never mixed.
/// Directions are shared per problem and passed alongside.
template <typename T>
using ObjectiveVector = std::vector<T>;

namespace detail {

template <typename T>
inline void check_comparable(const ObjectiveVector<T>& a, const ObjectiveVector<T>& b,
                             const Directions& dirs) {
  if (dirs.size() < 2) throw ContractError("objective dimension must be >= 2");
  if (a.size() != dirs.size() || b.size() != dirs.size())
    throw ContractError("objective dimension mismatch: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()) + " vs " + std::to_string(dirs.size()) +
                        " directions");
}

template <typename T>
inline bool at_least_as_good(T a, T b, Direction dir) {
  return dir == Direction::Minimize ? a <= b : a >= b;
}

template <typename T>
inline bool strictly_better(T a, T b, Direction dir) {
  return dir == Direction::Minimize ? a < b : a > b;
}

/// Value in canonical all-minimize space (maximize axes are negated).
template <typename T>
inline T canonical(T v, Direction dir) {
  return dir == Direction::Minimize ? v : -v;
}

}  // namespace detail

/// True iff `a` is at least as good as `b` on every axis and strictly better
/// on at least one. Comparisons are exact on the stored representation; there
/// is no epsilon tolerance.
template <typename T>
bool dominates(const ObjectiveVector<T>& a, const ObjectiveVector<T>& b, const Directions& dirs) {
  detail::check_comparable(a, b, dirs);
  bool strict = false;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (!detail::at_least_as_good(a[k], b[k], dirs[k])) return false;
    if (detail::strictly_better(a[k], b[k], dirs[k])) strict = true;
  }
  return strict;
}

}  // namespace paretolab
