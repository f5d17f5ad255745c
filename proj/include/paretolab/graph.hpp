#pragma once

// Bicriteria single-source shortest paths. Labels are (cost, weight) pairs,
// both minimized; per-vertex lists stay dominance-free and weight-sorted
// after every relax operation. Labels live in per-vertex append-only arenas
// so predecessor references stay valid after later list updates.

#include <cstdint>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "paretolab/errors.hpp"
#include "paretolab/pareto_set.hpp"

namespace paretolab {

inline constexpr int kPathsBruteforceMaxVertices = 12;
inline constexpr int kExpPathsMaxStages = 20;

struct Edge {
  int from = 0;
  int to = 0;
  double cost = 0.0;
  double weight = 0.0;
};

struct BiGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  int source = 0;

  void validate() const;
};

struct PathLabel {
  double cost = 0.0;
  double weight = 0.0;
  std::int32_t edge = -1;  // edge used to reach this label, -1 at the source root
  std::int32_t pred = -1;  // arena index at the edge's tail vertex
};

/// Result of the label-correcting run.
struct LabelLists {
  /// Current Pareto labels per vertex as arena handles, ascending weight.
  std::vector<std::vector<std::int32_t>> lists;
  /// Append-only label storage per vertex.
  std::vector<std::vector<PathLabel>> arena;
  std::uint64_t relax_ops = 0;
  /// Sum over relax ops of |L_u| + |L_v| before the op (runtime accounting).
  std::uint64_t accounting = 0;
  int rounds_executed = 0;

  const PathLabel& label(int v, std::int32_t handle) const {
    return arena[static_cast<std::size_t>(v)][static_cast<std::size_t>(handle)];
  }

  /// (cost, weight) values of vertex v's list, ascending weight.
  std::vector<std::pair<double, double>> values(int v) const;
};

struct BfOptions {
  /// Stop once a full round changes nothing. Cannot alter the fixed point;
  /// disable for strict relax-count accounting.
  bool early_exit = true;
  /// Re-check list invariants after every relax (slow; used by tests).
  bool validate_lists = false;
};

/// Bellman-Ford with per-vertex Pareto label lists: (|V|-1) rounds of
/// relaxing every edge in input order.
LabelLists bf_pareto(const BiGraph& g, const BfOptions& opts = {});

using ValueList = std::vector<std::pair<double, double>>;

/// All-pairs Pareto path values via the intermediate-vertex recursion.
/// result[u][v] holds the (cost, weight) values of Pareto-optimal u-v paths,
/// ascending weight; diagonal entries hold the empty path (0, 0).
std::vector<std::vector<ValueList>> fw_pareto(const BiGraph& g);

/// Chain of k parallel-edge stages, stage i offering (cost 2^i, weight 1)
/// against (cost 1, weight 2^i). Cost+weight is constant across all 2^k
/// s-t paths and costs are pairwise distinct, so every path is
/// Pareto-optimal.
BiGraph gen_exp_paths(int k);

/// Enumerates all simple source-v paths and filters by dominance.
/// Solutions are edge-incidence bit vectors. Guarded at 12 vertices.
ParetoSet<double> paths_bruteforce(const BiGraph& g, int v);

/// Same enumeration, all target vertices in one pass.
std::vector<ParetoSet<double>> paths_bruteforce_all(const BiGraph& g);

/// Vertex sequence of the walk behind a label, source first.
std::vector<int> reconstruct_path(const BiGraph& g, const LabelLists& labels, int v,
                                  std::int32_t handle);

/// Edge-incidence solution of the walk behind a label.
Solution path_edge_bits(const BiGraph& g, const LabelLists& labels, int v, std::int32_t handle);

/// Vertex v's labels as a ParetoSet over edge-incidence solutions.
ParetoSet<double> labels_to_pareto_set(const BiGraph& g, const LabelLists& labels, int v);

// text format: line 1 "n m s", then m lines "u v cost weight";
// '#' comments ignored
BiGraph read_graph(std::istream& in);
void write_graph(const BiGraph& g, std::ostream& out);

}  // namespace paretolab
