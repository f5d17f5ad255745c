#pragma once

// Knapsack instances and the Nemhauser-Ullmann dynamic program: build the
// Pareto set P_i over the first i items by merging P_{i-1} with a copy of
// itself shifted by item i, then sweeping out dominated value pairs. The
// bicriteria path stores value pairs plus back-references instead of bit
// vectors; solutions are reconstructed on demand by walking predecessors.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "paretolab/errors.hpp"
#include "paretolab/filters.hpp"
#include "paretolab/pareto_set.hpp"
#include "paretolab/scalar.hpp"
#include "paretolab/text_io.hpp"

namespace paretolab {

inline constexpr int kExponentialMaxItems = 62;  // 64-bit exact arithmetic bound

template <typename T>
struct KnapsackInstance {
  int n = 0;
  std::vector<T> profits;               // p_i >= 0
  std::vector<std::vector<T>> weights;  // (d-1) rows of n weights each
  std::vector<T> capacities;            // empty when only the Pareto set is wanted

  int dimension() const { return 1 + static_cast<int>(weights.size()); }
  bool has_capacity() const { return !capacities.empty(); }
  Directions directions() const { return profit_weight_directions(dimension()); }

  void validate() const {
    if (n < 0) throw ContractError("negative item count");
    if (weights.empty()) throw ContractError("knapsack instance needs at least one weight row");
    if (static_cast<int>(profits.size()) != n) throw ContractError("profit count != n");
    for (const auto& row : weights)
      if (static_cast<int>(row.size()) != n) throw ContractError("weight row length != n");
    if (!capacities.empty() && capacities.size() != weights.size())
      throw ContractError("capacity count != d-1");
    auto check_value = [](const T& v, const char* what) {
      if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(v)) throw ContractError(std::string(what) + " must be finite");
      }
      if (v < T{0}) throw ContractError(std::string("negative ") + what + " rejected");
    };
    for (const T& p : profits) check_value(p, "profit");
    for (const auto& row : weights)
      for (const T& w : row) check_value(w, "weight");
  }

  /// Objective vector (profit, weight_1, ..., weight_{d-1}). Sums accumulate
  /// in ascending item order so that every code path producing the same
  /// solution produces bit-identical scalars.
  ObjectiveVector<T> evaluate(const Solution& s) const {
    if (static_cast<int>(s.size()) != n) throw ContractError("solution length != n");
    ObjectiveVector<T> obj(static_cast<std::size_t>(dimension()), T{0});
    for (int i = 0; i < n; ++i) {
      if (!s.bits[static_cast<std::size_t>(i)]) continue;
      obj[0] += profits[static_cast<std::size_t>(i)];
      for (std::size_t r = 0; r < weights.size(); ++r) obj[r + 1] += weights[r][static_cast<std::size_t>(i)];
    }
    return obj;
  }
};

/// Per-run telemetry: level sizes |P_0|..|P_n|, wall clock, dominance
/// comparisons performed by the sweeps.
struct NUTrace {
  std::vector<std::size_t> sizes;
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t comparisons = 0;
};

struct NuOptions {
  /// Drop candidates heavier than the capacity while merging. Off by
  /// default so that Pareto-set statistics match the unpruned definition.
  bool prune_capacity = false;
};

namespace detail {

template <typename T>
struct NuEntry {
  T profit;
  T weight;
  std::int32_t pred;  // index into the previous level, -1 at the root
  bool took;          // item of this level added relative to pred
};

/// Bits of the solution represented by entry `idx` of `level`; the result
/// has length n with zeros beyond the level.
template <typename T>
std::vector<bool> nu_reconstruct_bits(const std::vector<std::vector<NuEntry<T>>>& levels,
                                      std::size_t level, std::size_t idx, std::size_t n) {
  std::vector<bool> bits(n, false);
  std::size_t lvl = level;
  std::size_t at = idx;
  while (lvl > 0) {
    const NuEntry<T>& e = levels[lvl][at];
    bits[lvl - 1] = e.took;
    at = static_cast<std::size_t>(e.pred);
    --lvl;
  }
  return bits;
}

}  // namespace detail

template <typename T>
struct NUResult {
  ParetoSet<T> set;
  NUTrace trace;
  /// All DP levels (value pairs + predecessor links). Level i holds P_i
  /// sorted by ascending weight. Empty for the d>=3 path.
  std::vector<std::vector<detail::NuEntry<T>>> levels;

  /// (profit, weight) pairs of level i, in level order.
  std::vector<std::pair<T, T>> level_values(std::size_t i) const {
    std::vector<std::pair<T, T>> out;
    out.reserve(levels[i].size());
    for (const auto& e : levels[i]) out.emplace_back(e.profit, e.weight);
    return out;
  }
};

/// Nemhauser-Ullmann over two objectives (maximize profit, minimize weight).
template <typename T>
NUResult<T> nu_pareto(const KnapsackInstance<T>& inst, const NuOptions& opts = {}) {
  inst.validate();
  if (inst.dimension() != 2)
    throw ContractError("nu_pareto handles d == 2; use nu_pareto_multi for d >= 3");
  const auto t0 = std::chrono::steady_clock::now();

  NUResult<T> res;
  auto& levels = res.levels;
  levels.resize(static_cast<std::size_t>(inst.n) + 1);
  levels[0] = {detail::NuEntry<T>{T{0}, T{0}, -1, false}};
  res.trace.sizes.push_back(1);

  const bool prune = opts.prune_capacity && inst.has_capacity();
  const T cap = prune ? inst.capacities[0] : T{0};

  for (int j = 0; j < inst.n; ++j) {
    const auto& prev = levels[static_cast<std::size_t>(j)];
    const T pj = inst.profits[static_cast<std::size_t>(j)];
    const T wj = inst.weights[0][static_cast<std::size_t>(j)];

    auto& cur = levels[static_cast<std::size_t>(j) + 1];
    cur.reserve(prev.size() + prev.size() / 2);

    // two cursors over prev: as-is ("keep") and shifted by (p_j, w_j)
    // ("take"); both streams are weight-sorted, merge by (w asc, p desc)
    std::size_t ik = 0, it = 0;
    bool has_best = false;
    T best{};
    auto consider = [&](T p, T w, std::int32_t pred, bool took) {
      ++res.trace.comparisons;
      if (prune && w > cap) return;
      if (!cur.empty() && cur.back().weight == w && cur.back().profit == p) {
        // exact value collision across the two streams: keep the
        // lexicographically smallest solution
        auto cur_bits = detail::nu_reconstruct_bits(levels, static_cast<std::size_t>(j) + 1,
                                                    cur.size() - 1, static_cast<std::size_t>(inst.n));
        std::vector<bool> cand_bits(static_cast<std::size_t>(inst.n), false);
        {
          auto pred_bits = detail::nu_reconstruct_bits(levels, static_cast<std::size_t>(j),
                                                       static_cast<std::size_t>(pred),
                                                       static_cast<std::size_t>(inst.n));
          cand_bits = pred_bits;
          cand_bits[static_cast<std::size_t>(j)] = took;
        }
        if (cand_bits < cur_bits) cur.back() = detail::NuEntry<T>{p, w, pred, took};
        return;
      }
      if (!has_best || p > best) {
        cur.push_back(detail::NuEntry<T>{p, w, pred, took});
        best = p;
        has_best = true;
      }
    };

    while (ik < prev.size() || it < prev.size()) {
      bool pick_keep;
      if (ik >= prev.size()) {
        pick_keep = false;
      } else if (it >= prev.size()) {
        pick_keep = true;
      } else {
        const T wk = prev[ik].weight;
        const T pk = prev[ik].profit;
        const T wt = prev[it].weight + wj;
        const T pt = prev[it].profit + pj;
        pick_keep = wk < wt || (wk == wt && pk >= pt);
      }
      if (pick_keep) {
        consider(prev[ik].profit, prev[ik].weight, static_cast<std::int32_t>(ik), false);
        ++ik;
      } else {
        consider(prev[it].profit + pj, prev[it].weight + wj, static_cast<std::int32_t>(it), true);
        ++it;
      }
    }
    res.trace.sizes.push_back(cur.size());
  }

  // materialize the final level
  const auto& last = levels[static_cast<std::size_t>(inst.n)];
  res.set.directions = inst.directions();
  res.set.entries.reserve(last.size());
  for (std::size_t i = 0; i < last.size(); ++i) {
    Solution s(detail::nu_reconstruct_bits(levels, static_cast<std::size_t>(inst.n), i,
                                           static_cast<std::size_t>(inst.n)));
    res.set.entries.push_back(ScoredSolution<T>{std::move(s), {last[i].profit, last[i].weight}});
  }
  res.set.sort_canonical();
  res.trace.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

enum class MultiFilter { Klp, Naive };

/// d >= 3 objectives: same per-item recurrence, with the maxima filter
/// doing the dominated-solution removal.
template <typename T>
NUResult<T> nu_pareto_multi(const KnapsackInstance<T>& inst, MultiFilter filter = MultiFilter::Klp,
                            const NuOptions& opts = {}) {
  inst.validate();
  if (inst.dimension() < 3)
    throw ContractError("nu_pareto_multi handles d >= 3; use nu_pareto for d == 2");
  const auto t0 = std::chrono::steady_clock::now();
  const Directions dirs = inst.directions();
  const std::size_t rows = inst.weights.size();

  NUResult<T> res;
  ParetoSet<T> cur;
  cur.directions = dirs;
  cur.entries.push_back(ScoredSolution<T>{
      Solution::zeros(static_cast<std::size_t>(inst.n)),
      ObjectiveVector<T>(static_cast<std::size_t>(inst.dimension()), T{0})});
  res.trace.sizes.push_back(1);

  const bool prune = opts.prune_capacity && inst.has_capacity();

  for (int j = 0; j < inst.n; ++j) {
    std::vector<ScoredSolution<T>> cand;
    cand.reserve(cur.entries.size() * 2);
    for (const auto& e : cur.entries) cand.push_back(e);
    for (const auto& e : cur.entries) {
      ScoredSolution<T> shifted = e;
      shifted.solution.bits[static_cast<std::size_t>(j)] = true;
      shifted.objective[0] += inst.profits[static_cast<std::size_t>(j)];
      for (std::size_t r = 0; r < rows; ++r)
        shifted.objective[r + 1] += inst.weights[r][static_cast<std::size_t>(j)];
      if (prune) {
        bool over = false;
        for (std::size_t r = 0; r < rows; ++r)
          if (shifted.objective[r + 1] > inst.capacities[r]) over = true;
        if (over) continue;
      }
      cand.push_back(std::move(shifted));
    }
    res.trace.comparisons += cand.size();
    cur = filter == MultiFilter::Klp ? filter_klp(cand, dirs) : filter_naive(cand, dirs);
    res.trace.sizes.push_back(cur.size());
  }

  res.set = std::move(cur);
  res.trace.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

/// Optimal solution via the Pareto set: the most profitable entry whose
/// weights all fit the capacities. Profit ties resolve to the
/// lexicographically smallest solution.
template <typename T>
ScoredSolution<T> solve_knapsack(const KnapsackInstance<T>& inst) {
  inst.validate();
  if (!inst.has_capacity()) throw ContractError("solve requires capacities");
  for (const T& c : inst.capacities)
    if (c < T{0}) throw ContractError("infeasible: negative capacity");

  NUResult<T> res = inst.dimension() == 2 ? nu_pareto(inst) : nu_pareto_multi(inst);
  const ScoredSolution<T>* best = nullptr;
  for (const auto& e : res.set.entries) {
    bool feasible = true;
    for (std::size_t r = 0; r < inst.capacities.size(); ++r)
      if (e.objective[r + 1] > inst.capacities[r]) feasible = false;
    if (!feasible) continue;
    if (best == nullptr || e.objective[0] > best->objective[0] ||
        (e.objective[0] == best->objective[0] && e.solution < best->solution))
      best = &e;
  }
  if (best == nullptr) throw InvariantError("no feasible Pareto entry; empty solution must fit");
  return *best;
}

/// p_i = w_i = 2^i: every one of the 2^n solutions is Pareto-optimal.
/// Exact 64-bit integers; n is capped where the arithmetic stays exact.
inline KnapsackInstance<std::int64_t> gen_exponential(int n) {
  if (n < 0 || n > kExponentialMaxItems)
    throw GuardError("gen_exponential requires 0 <= n <= " +
                     std::to_string(kExponentialMaxItems) + " for exact 64-bit arithmetic, got " +
                     std::to_string(n));
  KnapsackInstance<std::int64_t> inst;
  inst.n = n;
  inst.profits.resize(static_cast<std::size_t>(n));
  inst.weights.assign(1, std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    std::int64_t v = std::int64_t{1} << (i + 1);
    inst.profits[static_cast<std::size_t>(i)] = v;
    inst.weights[0][static_cast<std::size_t>(i)] = v;
  }
  return inst;
}

/// Frozen fixture whose level sizes shrink at some step: |P_{i+1}| < |P_i|.
/// Found by randomized search over small integer instances and pinned here;
/// the tests re-verify the shrink and oracle equivalence on every run.
KnapsackInstance<std::int64_t> gen_nonmonotone();

// --- instance text format ----------------------------------------------
//
//   line 1: d n
//   line 2: W_1 ... W_{d-1}, or "-" when absent
//   n lines: p_i w_i^(1) ... w_i^(d-1)
//
// '#' starts a comment; blank lines are skipped.

template <typename T>
KnapsackInstance<T> read_knapsack(std::istream& in) {
  detail::LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("missing header 'd n'");
  auto head = detail::split_tokens(line);
  std::int64_t d = 0, n = 0;
  if (head.size() != 2 || !parse_scalar(head[0], d) || !parse_scalar(head[1], n))
    r.fail("expected header 'd n'");
  if (d < 2) r.fail("dimension must be >= 2");
  if (n < 0) r.fail("negative item count");

  KnapsackInstance<T> inst;
  inst.n = static_cast<int>(n);
  inst.weights.assign(static_cast<std::size_t>(d - 1),
                      std::vector<T>(static_cast<std::size_t>(n)));

  if (!r.next(line)) r.fail("missing capacity line");
  if (line != "-") {
    auto toks = detail::split_tokens(line);
    if (toks.size() != static_cast<std::size_t>(d - 1))
      r.fail("expected " + std::to_string(d - 1) + " capacities or '-'");
    for (const auto& t : toks) inst.capacities.push_back(detail::parse_or_fail<T>(r, t));
  }

  inst.profits.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    if (!r.next(line)) r.fail("missing item line " + std::to_string(i + 1));
    auto toks = detail::split_tokens(line);
    if (toks.size() != static_cast<std::size_t>(d))
      r.fail("expected " + std::to_string(d) + " scalars on item line");
    inst.profits[static_cast<std::size_t>(i)] = detail::parse_or_fail<T>(r, toks[0]);
    for (std::int64_t k = 1; k < d; ++k)
      inst.weights[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)] =
          detail::parse_or_fail<T>(r, toks[static_cast<std::size_t>(k)]);
  }
  try {
    inst.validate();
  } catch (const ContractError& e) {
    r.fail(e.what());
  }
  return inst;
}

template <typename T>
void write_knapsack(const KnapsackInstance<T>& inst, std::ostream& out) {
  out << inst.dimension() << ' ' << inst.n << '\n';
  if (!inst.has_capacity()) {
    out << "-\n";
  } else {
    for (std::size_t r = 0; r < inst.capacities.size(); ++r)
      out << (r ? " " : "") << format_scalar(inst.capacities[r]);
    out << '\n';
  }
  for (int i = 0; i < inst.n; ++i) {
    out << format_scalar(inst.profits[static_cast<std::size_t>(i)]);
    for (const auto& row : inst.weights) out << ' ' << format_scalar(row[static_cast<std::size_t>(i)]);
    out << '\n';
  }
}

}  // namespace paretolab
