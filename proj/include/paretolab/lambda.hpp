#pragma once

// Winner/loser machinery for bicriteria knapsack instances: the winner x* is
// the most profitable solution of weight at most t, a loser is any solution
// more profitable than the winner, and Λ(t) measures how far the lightest
// loser's weight exceeds t. The per-index variants restrict winners to
// x_i = 0 and losers to x_i = 1; either Λ(t) is infinite or it equals some
// Λ^i(t) exactly.

#include <optional>
#include <span>
#include <vector>

#include "paretolab/knapsack.hpp"
#include "paretolab/pareto_set.hpp"

namespace paretolab {

inline constexpr int kLambdaMaxItems = 20;

struct LambdaResult {
  double t = 0.0;
  ScoredSolution<double> winner;                 // exists for every t >= 0
  std::optional<ScoredSolution<double>> loser;   // lightest solution beating the winner
  double lambda = 0.0;                           // loser weight - t, or +infinity
  std::vector<double> per_index;                 // Λ^i(t), +infinity where undefined
};

/// Exact computation by enumerating all 2^n solutions. Ties on profit or
/// weight resolve to the lexicographically smallest solution, which keeps
/// the per-index decomposition an exact scalar identity.
LambdaResult compute_lambda(const KnapsackInstance<double>& inst, double t);

/// Winner gap of an explicit solution set under a minimized objective:
/// difference between the best and second-best values. Duplicate optima
/// give 0. Needs at least two values.
double winner_gap(std::span<const double> objective_values);

}  // namespace paretolab
