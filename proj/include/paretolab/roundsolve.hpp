#pragma once

// Iterative-precision solver for bicriteria knapsack instances with profits
// in [0,1]: round profits down to b fractional bits, solve the scaled
// integer instance with a profit-indexed dynamic program, and certify the
// result optimal when the rounded instance's winner gap exceeds the total
// rounding shift 2n*2^-b. Otherwise double b; past the precision cap, fall
// back to the exact Pareto-set solver.

#include "paretolab/knapsack.hpp"
#include "paretolab/pareto_set.hpp"

namespace paretolab {

struct RoundSolveResult {
  ScoredSolution<double> solution;  // objective under the original profits
  int bits_used = 0;                // last precision attempted
  bool certified = false;           // solution proven optimal from the rounded gap
  bool fallback_used = false;       // exact solver took over
};

struct RoundSolveOptions {
  int initial_bits = 0;  // 0: ceil(log2 n) + 2
  int max_bits = 52;
  /// Dense DP table cap; above it the profit axis switches to a sparse map
  /// over achievable sums (same results, no pseudo-linear table).
  std::size_t dense_dp_limit = std::size_t{1} << 20;
};

RoundSolveResult round_and_solve(const KnapsackInstance<double>& inst,
                                 const RoundSolveOptions& opts = {});

}  // namespace paretolab
