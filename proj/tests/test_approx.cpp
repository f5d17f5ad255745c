#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "paretolab/approx.hpp"
#include "paretolab/filters.hpp"
#include "paretolab/knapsack.hpp"
#include "paretolab/rng.hpp"

using namespace paretolab;

namespace {

const Directions kMaxMin = profit_weight_directions(2);

/// Exhaustive coverage oracle: every source entry must be epsilon-covered by
/// some kept entry (identity counts for entries outside ratio semantics).
template <typename T>
bool covered(const ParetoSet<T>& source, const EpsApproxSet<T>& coreset) {
  for (const auto& x : source.entries) {
    bool ok = false;
    for (const auto& y : coreset.entries)
      if (detail::eps_covers(y, x, source.directions, coreset.epsilon)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

double grid_size_bound(const ParetoSet<double>& set, double eps) {
  std::size_t d = set.directions.size();
  double bound = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& e : set.entries) {
      double v = e.objective[k];
      if (v > 0.0) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (!(hi > 0.0)) continue;
    bound *= std::ceil(std::log(hi / lo) / std::log1p(eps)) + 1.0;
  }
  return bound + static_cast<double>(d);  // slack for boundary cells
}

ParetoSet<double> random_pareto_set(Rng& rng, std::size_t points) {
  std::vector<ScoredSolution<double>> pts;
  pts.reserve(points);
  for (std::size_t i = 0; i < points; ++i)
    pts.push_back(ScoredSolution<double>{Solution::from_mask(i, 20),
                                         {rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0)}});
  return filter_sweep2d(pts, profit_weight_directions(2));
}

}  // namespace

TEST_CASE("eps_dominates ratio checks per axis") {
  Directions min1 = {Direction::Minimize, Direction::Minimize};
  CHECK(eps_dominates<double>({1.05, 1.0}, {1.0, 1.0}, min1, 0.1));
  CHECK_FALSE(eps_dominates<double>({1.2, 1.0}, {1.0, 1.0}, min1, 0.1));

  CHECK(eps_dominates<double>({1.0, 1.0}, {1.0, 1.0}, min1, 0.0));  // y = x, ratio 1

  Directions max1 = {Direction::Maximize, Direction::Maximize};
  CHECK_FALSE(eps_dominates<double>({1.0, 1.0}, {1.2, 1.0}, max1, 0.1));
  CHECK(eps_dominates<double>({1.0, 1.0}, {1.1, 1.0}, max1, 0.1));
}

TEST_CASE("eps_dominates rejects nonpositive values and negative eps") {
  Directions dirs = all_minimize(2);
  CHECK_THROWS_AS(eps_dominates<double>({0.0, 1.0}, {1.0, 1.0}, dirs, 0.1), ContractError);
  CHECK_THROWS_AS(eps_dominates<double>({1.0, 1.0}, {1.0, -2.0}, dirs, 0.1), ContractError);
  CHECK_THROWS_AS(eps_dominates<double>({1.0, 1.0}, {1.0, 1.0}, dirs, -0.5), ContractError);
}

TEST_CASE("a huge epsilon collapses an all-positive set to a singleton") {
  Rng rng(30);
  auto set = random_pareto_set(rng, 200);
  auto coreset = eps_coreset(set, 1000.0);
  CHECK(coreset.entries.size() == 1);
  CHECK(covered(set, coreset));
}

TEST_CASE("eps_coreset rejects nonpositive epsilon") {
  Rng rng(31);
  auto set = random_pareto_set(rng, 10);
  CHECK_THROWS_AS(eps_coreset(set, 0.0), ContractError);
  CHECK_THROWS_AS(eps_coreset(set, -1.0), ContractError);
}

TEST_CASE("coverage and size bound on random 2-D Pareto sets") {
  Rng rng(32);
  auto set = random_pareto_set(rng, 1000);
  for (double eps : {0.05, 0.1, 0.25}) {
    auto coreset = eps_coreset(set, eps);
    CHECK(covered(set, coreset));
    CHECK(static_cast<double>(coreset.entries.size()) <= grid_size_bound(set, eps));
    CHECK(coreset.entries.size() <= set.size());
  }
}

TEST_CASE("knapsack Pareto set with a zero entry: extremes retained verbatim") {
  auto res = nu_pareto(gen_exponential(12));
  // convert to double scalars for ratio semantics
  ParetoSet<double> set;
  set.directions = res.set.directions;
  for (const auto& e : res.set.entries) {
    ObjectiveVector<double> obj = {static_cast<double>(e.objective[0]),
                                   static_cast<double>(e.objective[1])};
    set.entries.push_back(ScoredSolution<double>{e.solution, std::move(obj)});
  }
  auto coreset = eps_coreset(set, 0.25);
  CHECK(covered(set, coreset));
  // the all-zero entry survives verbatim
  bool has_zero = false;
  for (const auto& e : coreset.entries)
    has_zero |= e.objective == ObjectiveVector<double>{0, 0};
  CHECK(has_zero);
  CHECK(static_cast<double>(coreset.entries.size()) <= grid_size_bound(set, 0.25) + 1.0);
  CHECK(coreset.entries.size() < set.size());  // 4096 entries must shrink a lot
}

TEST_CASE("coreset size is monotone in epsilon on seeded inputs") {
  Rng rng(33);
  for (int rep = 0; rep < 20; ++rep) {
    auto set = random_pareto_set(rng, 500);
    std::size_t prev = set.size() + 1;
    for (double eps : {0.05, 0.1, 0.25, 0.5}) {
      auto coreset = eps_coreset(set, eps);
      CHECK(coreset.entries.size() <= prev);
      prev = coreset.entries.size();
    }
  }
}

TEST_CASE("d = 3 coresets cover through the bucket grid") {
  Rng rng(35);
  std::vector<ScoredSolution<double>> pts;
  for (std::size_t i = 0; i < 800; ++i)
    pts.push_back(ScoredSolution<double>{
        Solution::from_mask(i, 20),
        {rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0)}});
  auto set = filter_klp(pts, profit_weight_directions(3));
  for (double eps : {0.1, 0.25}) {
    auto coreset = eps_coreset(set, eps);
    CHECK(covered(set, coreset));
    CHECK(coreset.entries.size() <= set.size());
  }
}

TEST_CASE("coreset entries are a subset of the source set") {
  Rng rng(34);
  auto set = random_pareto_set(rng, 300);
  auto coreset = eps_coreset(set, 0.1);
  for (const auto& e : coreset.entries) {
    bool found = false;
    for (const auto& s : set.entries) found |= s == e;
    CHECK(found);
  }
}
