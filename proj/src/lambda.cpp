#include "paretolab/lambda.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace paretolab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Best {
  bool present = false;
  std::uint64_t mask = 0;
  double key = 0.0;  // profit for winners, weight for losers
};

/// Winner slot: maximize profit, tie on lexicographically smaller solution.
void offer_winner(Best& slot, std::uint64_t mask, double profit, int n) {
  if (!slot.present || profit > slot.key ||
      (profit == slot.key && mask_lex_less(mask, slot.mask, n))) {
    slot.present = true;
    slot.mask = mask;
    slot.key = profit;
  }
}

/// Loser slot: minimize weight, tie on lexicographically smaller solution.
void offer_loser(Best& slot, std::uint64_t mask, double weight, int n) {
  if (!slot.present || weight < slot.key ||
      (weight == slot.key && mask_lex_less(mask, slot.mask, n))) {
    slot.present = true;
    slot.mask = mask;
    slot.key = weight;
  }
}

}  // namespace

LambdaResult compute_lambda(const KnapsackInstance<double>& inst, double t) {
  inst.validate();
  if (inst.dimension() != 2) throw ContractError("compute_lambda handles d == 2 instances");
  if (inst.n > kLambdaMaxItems)
    throw GuardError("compute_lambda enumerates 2^n solutions; n must be <= " +
                     std::to_string(kLambdaMaxItems) + ", got " + std::to_string(inst.n));
  if (!(t >= 0.0)) throw ContractError("t must be >= 0");

  const int n = inst.n;
  const std::uint64_t m = std::uint64_t{1} << n;

  // profits and weights of every solution, accumulated in ascending item
  // order (the library-wide scalar convention)
  std::vector<double> profit(m), weight(m);
  for (std::uint64_t mask = 0; mask < m; ++mask) {
    double p = 0.0, w = 0.0;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) {
        p += inst.profits[static_cast<std::size_t>(i)];
        w += inst.weights[0][static_cast<std::size_t>(i)];
      }
    }
    profit[mask] = p;
    weight[mask] = w;
  }

  // pass 1: the global winner and the winner of each restricted set x_i = 0
  Best winner;
  std::vector<Best> winner_i(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < m; ++mask) {
    if (weight[mask] > t) continue;
    offer_winner(winner, mask, profit[mask], n);
    for (int i = 0; i < n; ++i)
      if (!((mask >> i) & 1u)) offer_winner(winner_i[static_cast<std::size_t>(i)], mask, profit[mask], n);
  }
  // the empty solution has weight 0 <= t and avoids every item, so all
  // winner slots are filled; an empty slot would be a bug
  if (!winner.present) throw InvariantError("global winner missing for t >= 0");
  for (const Best& wi : winner_i)
    if (!wi.present) throw InvariantError("restricted winner missing for t >= 0");

  // pass 2: the global loser and the loser of each restricted set x_i = 1
  Best loser;
  std::vector<Best> loser_i(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < m; ++mask) {
    if (profit[mask] > winner.key) offer_loser(loser, mask, weight[mask], n);
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      if (profit[mask] > winner_i[static_cast<std::size_t>(i)].key)
        offer_loser(loser_i[static_cast<std::size_t>(i)], mask, weight[mask], n);
    }
  }

  auto scored = [&](std::uint64_t mask) {
    Solution s = Solution::from_mask(mask, static_cast<std::size_t>(n));
    return ScoredSolution<double>{std::move(s), {profit[mask], weight[mask]}};
  };

  LambdaResult out;
  out.t = t;
  out.winner = scored(winner.mask);
  if (loser.present) {
    out.loser = scored(loser.mask);
    out.lambda = weight[loser.mask] - t;
  } else {
    out.lambda = kInf;
  }
  out.per_index.resize(static_cast<std::size_t>(n), kInf);
  for (int i = 0; i < n; ++i) {
    const Best& li = loser_i[static_cast<std::size_t>(i)];
    if (li.present) out.per_index[static_cast<std::size_t>(i)] = weight[li.mask] - t;
  }
  return out;
}

double winner_gap(std::span<const double> objective_values) {
  if (objective_values.size() < 2)
    throw ContractError("winner gap needs at least two solutions, got " +
                        std::to_string(objective_values.size()));
  double best = kInf, second = kInf;
  for (double v : objective_values) {
    if (v < best) {
      second = best;
      best = v;
    } else if (v < second) {
      second = v;
    }
  }
  return second - best;
}

}  // namespace paretolab
