#include "paretolab/knapsack.hpp"

namespace paretolab {

KnapsackInstance<std::int64_t> gen_nonmonotone() {
  // level sizes run 1, 2, 4, 7, 10, 9: adding the last item shrinks the
  // Pareto set (found by randomized search over small integer instances)
  KnapsackInstance<std::int64_t> inst;
  inst.n = 5;
  inst.profits = {12, 1, 5, 11, 5};
  inst.weights = {{12, 8, 10, 12, 6}};
  return inst;
}

}  // namespace paretolab
