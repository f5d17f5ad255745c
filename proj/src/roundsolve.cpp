#include "paretolab/roundsolve.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace paretolab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Two lightest distinct solutions achieving one rounded profit value.
struct TwoBest {
  double w1 = kInf;
  std::uint64_t m1 = 0;
  double w2 = kInf;
  std::uint64_t m2 = 0;

  void offer(double w, std::uint64_t m) {
    if (w < w1) {
      w2 = w1;
      m2 = m1;
      w1 = w;
      m1 = m;
    } else if (w < w2) {
      w2 = w;
      m2 = m;
    }
  }
};

struct DpOutcome {
  std::int64_t best_profit = -1;
  TwoBest at_best;
  std::int64_t second_profit = -1;  // best feasible profit below best_profit
};

/// Profit-indexed DP, dense table: pseudo-linear in the scaled profit sum.
DpOutcome dp_dense(const std::vector<std::int64_t>& scaled, const std::vector<double>& weights,
                   double cap, std::int64_t total) {
  std::vector<TwoBest> dp(static_cast<std::size_t>(total) + 1);
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  dp[0].offer(0.0, 0);
  reach[0] = true;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const std::int64_t p = scaled[i];
    const double w = weights[i];
    for (std::int64_t q = total - p; q >= 0; --q) {
      if (!reach[static_cast<std::size_t>(q)]) continue;
      TwoBest src = dp[static_cast<std::size_t>(q)];  // pre-item snapshot
      TwoBest& dst = dp[static_cast<std::size_t>(q + p)];
      if (src.w1 < kInf) dst.offer(src.w1 + w, src.m1 | (std::uint64_t{1} << i));
      if (src.w2 < kInf) dst.offer(src.w2 + w, src.m2 | (std::uint64_t{1} << i));
      reach[static_cast<std::size_t>(q + p)] = true;
    }
  }
  DpOutcome out;
  for (std::int64_t q = total; q >= 0; --q) {
    if (!reach[static_cast<std::size_t>(q)] || dp[static_cast<std::size_t>(q)].w1 > cap) continue;
    if (out.best_profit < 0) {
      out.best_profit = q;
      out.at_best = dp[static_cast<std::size_t>(q)];
    } else {
      out.second_profit = q;
      break;
    }
  }
  return out;
}

/// Same contract over a sparse map of achievable scaled profits; used when
/// the dense table would not fit.
DpOutcome dp_sparse(const std::vector<std::int64_t>& scaled, const std::vector<double>& weights,
                    double cap) {
  std::map<std::int64_t, TwoBest> dp;
  dp[0].offer(0.0, 0);
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const std::int64_t p = scaled[i];
    const double w = weights[i];
    std::map<std::int64_t, TwoBest> next = dp;
    for (const auto& [q, two] : dp) {
      TwoBest& dst = next[q + p];
      if (two.w1 < kInf) dst.offer(two.w1 + w, two.m1 | (std::uint64_t{1} << i));
      if (two.w2 < kInf) dst.offer(two.w2 + w, two.m2 | (std::uint64_t{1} << i));
    }
    dp = std::move(next);
  }
  DpOutcome out;
  for (auto it = dp.rbegin(); it != dp.rend(); ++it) {
    if (it->second.w1 > cap) continue;
    if (out.best_profit < 0) {
      out.best_profit = it->first;
      out.at_best = it->second;
    } else {
      out.second_profit = it->first;
      break;
    }
  }
  return out;
}

}  // namespace

RoundSolveResult round_and_solve(const KnapsackInstance<double>& inst,
                                 const RoundSolveOptions& opts) {
  inst.validate();
  if (inst.dimension() != 2) throw ContractError("round_and_solve handles d == 2 instances");
  if (!inst.has_capacity()) throw ContractError("round_and_solve requires a capacity");
  if (inst.capacities[0] < 0.0) throw ContractError("infeasible: negative capacity");
  if (inst.n > 62) throw GuardError("round_and_solve tracks solutions in 64-bit masks; n <= 62");
  for (double p : inst.profits)
    if (p < 0.0 || p > 1.0) throw ContractError("round_and_solve expects profits in [0, 1]");

  const int n = inst.n;
  const double cap = inst.capacities[0];
  if (n == 0) {
    RoundSolveResult r;
    r.solution = ScoredSolution<double>{Solution::zeros(0), {0.0, 0.0}};
    r.bits_used = 0;
    r.certified = true;
    return r;
  }

  int b0 = opts.initial_bits > 0
               ? opts.initial_bits
               : static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 2;

  int last_attempted = b0;
  for (int b = b0; b <= opts.max_bits; b *= 2) {
    last_attempted = b;
    const double scale = std::ldexp(1.0, b);  // 2^b, exact
    std::vector<std::int64_t> scaled(static_cast<std::size_t>(n));
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
      scaled[static_cast<std::size_t>(i)] =
          static_cast<std::int64_t>(std::floor(inst.profits[static_cast<std::size_t>(i)] * scale));
      total += scaled[static_cast<std::size_t>(i)];
    }

    DpOutcome dp = static_cast<std::size_t>(total) + 1 <= opts.dense_dp_limit
                       ? dp_dense(scaled, inst.weights[0], cap, total)
                       : dp_sparse(scaled, inst.weights[0], cap);
    if (dp.best_profit < 0) throw InvariantError("empty solution must be feasible");

    // winner gap of the rounded instance, in 2^-b units: zero when a second
    // solution attains the best profit, infinite when nothing else fits
    std::int64_t gap;
    if (dp.at_best.w2 <= cap)
      gap = 0;
    else if (dp.second_profit >= 0)
      gap = dp.best_profit - dp.second_profit;
    else
      gap = std::numeric_limits<std::int64_t>::max();

    // rounding moves each solution's profit by less than n*2^-b, so a
    // rounded gap above 2n*2^-b pins the exact optimum
    if (gap > 2 * static_cast<std::int64_t>(n)) {
      Solution s = Solution::from_mask(dp.at_best.m1, static_cast<std::size_t>(n));
      ObjectiveVector<double> obj = inst.evaluate(s);
      RoundSolveResult r;
      r.solution = ScoredSolution<double>{std::move(s), std::move(obj)};
      r.bits_used = b;
      r.certified = true;
      return r;
    }
  }

  RoundSolveResult r;
  r.solution = solve_knapsack(inst);
  r.bits_used = last_attempted;
  r.fallback_used = true;
  return r;
}

}  // namespace paretolab
