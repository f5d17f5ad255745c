#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "paretolab/graph.hpp"
#include "paretolab/rng.hpp"

using namespace paretolab;

namespace {

/// Random sparse digraph with dyadic edge values (multiples of 2^-10), so
/// sums are exact and value sets compare bit-for-bit across algorithms.
BiGraph random_graph(Rng& rng, int max_vertices = 12) {
  BiGraph g;
  g.vertex_count = 2 + static_cast<int>(rng.uniform_int(0, max_vertices - 2));
  g.source = 0;
  int m = g.vertex_count + static_cast<int>(rng.uniform_int(0, 2 * g.vertex_count));
  for (int e = 0; e < m; ++e) {
    int u = static_cast<int>(rng.uniform_int(0, g.vertex_count - 1));
    int v = static_cast<int>(rng.uniform_int(0, g.vertex_count - 1));
    double c = static_cast<double>(rng.uniform_int(1, 1024)) / 1024.0;
    double w = static_cast<double>(rng.uniform_int(1, 1024)) / 1024.0;
    g.edges.push_back(Edge{u, v, c, w});
  }
  return g;
}

ValueList sorted_values(ValueList v) {
  std::sort(v.begin(), v.end());
  return v;
}

ValueList set_values(const ParetoSet<double>& set) {
  ValueList out;
  for (const auto& e : set.entries) out.emplace_back(e.objective[0], e.objective[1]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("two incomparable parallel edges both survive") {
  BiGraph g;
  g.vertex_count = 2;
  g.source = 0;
  g.edges = {Edge{0, 1, 1, 2}, Edge{0, 1, 2, 1}};
  auto labels = bf_pareto(g);
  CHECK(sorted_values(labels.values(1)) == ValueList{{1, 2}, {2, 1}});
}

TEST_CASE("a dominated two-hop path is removed") {
  BiGraph g;
  g.vertex_count = 3;
  g.source = 0;
  g.edges = {Edge{0, 1, 1, 1}, Edge{1, 2, 1, 1}, Edge{0, 2, 1, 1}};
  auto labels = bf_pareto(g);
  CHECK(labels.values(2) == ValueList{{1, 1}});
}

TEST_CASE("label lists are strict staircases after every relax") {
  Rng rng(17);
  BfOptions opts;
  opts.validate_lists = true;  // throws on any violation
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng);
    CHECK_NOTHROW(bf_pareto(g, opts));
  }
}

TEST_CASE("bf_pareto equals simple-path enumeration on seeded graphs") {
  Rng rng(18);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng);
    auto labels = bf_pareto(g);
    auto oracle = paths_bruteforce_all(g);
    for (int v = 0; v < g.vertex_count; ++v)
      CHECK(sorted_values(labels.values(v)) == set_values(oracle[static_cast<std::size_t>(v)]));
  }
}

TEST_CASE("early exit does not change the fixed point") {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng);
    BfOptions full;
    full.early_exit = false;
    auto a = bf_pareto(g);
    auto b = bf_pareto(g, full);
    for (int v = 0; v < g.vertex_count; ++v) CHECK(a.values(v) == b.values(v));
    CHECK(b.relax_ops ==
          static_cast<std::uint64_t>(g.vertex_count - 1) * g.edges.size());
  }
}

TEST_CASE("reconstructed paths reproduce their label values exactly") {
  Rng rng(20);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng);
    auto labels = bf_pareto(g);
    for (int v = 0; v < g.vertex_count; ++v) {
      for (std::int32_t h : labels.lists[static_cast<std::size_t>(v)]) {
        auto path = reconstruct_path(g, labels, v, h);
        REQUIRE(!path.empty());
        CHECK(path.front() == g.source);
        CHECK(path.back() == v);
        Solution bits = path_edge_bits(g, labels, v, h);
        double c = 0, w = 0;
        int at = g.source;
        std::size_t hops = 0;
        // walk the path in order, following the chosen edges
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          bool advanced = false;
          for (std::size_t e = 0; e < g.edges.size(); ++e) {
            if (!bits.bits[e]) continue;
            if (g.edges[e].from == at && g.edges[e].to == path[i + 1]) {
              c += g.edges[e].cost;
              w += g.edges[e].weight;
              at = g.edges[e].to;
              advanced = true;
              ++hops;
              break;
            }
          }
          CHECK(advanced);
        }
        CHECK(c == labels.label(v, h).cost);
        CHECK(w == labels.label(v, h).weight);
      }
    }
  }
}

TEST_CASE("fw_pareto: 2-vertex single edge gives one off-diagonal list") {
  BiGraph g;
  g.vertex_count = 2;
  g.source = 0;
  g.edges = {Edge{0, 1, 3, 4}};
  auto d = fw_pareto(g);
  CHECK(d[0][1] == ValueList{{3, 4}});
  CHECK(d[1][0].empty());
  CHECK(d[0][0] == ValueList{{0, 0}});
  CHECK(d[1][1] == ValueList{{0, 0}});
}

TEST_CASE("fw_pareto agrees with per-source bf_pareto") {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_graph(rng, 6);
    auto d = fw_pareto(g);
    for (int s = 0; s < g.vertex_count; ++s) {
      BiGraph gs = g;
      gs.source = s;
      auto labels = bf_pareto(gs);
      for (int v = 0; v < g.vertex_count; ++v) {
        auto want = sorted_values(labels.values(v));
        auto got = sorted_values(d[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)]);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("fw_pareto diagonals stay at the empty path") {
  Rng rng(22);
  auto g = random_graph(rng, 8);
  g.edges.push_back(Edge{1, 1, 0.5, 0.5});  // self loop must not disturb the diagonal
  auto d = fw_pareto(g);
  for (int v = 0; v < g.vertex_count; ++v)
    CHECK(d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] == ValueList{{0, 0}});
}

TEST_CASE("gen_exp_paths: construction arithmetic") {
  auto g = gen_exp_paths(5);
  CHECK(g.vertex_count == 6);
  CHECK(g.edges.size() == 10);
  CHECK_THROWS_AS(gen_exp_paths(0), GuardError);
  CHECK_THROWS_AS(gen_exp_paths(21), GuardError);
}

TEST_CASE("gen_exp_paths: k = 1 has two Pareto-optimal s-t paths") {
  auto g = gen_exp_paths(1);
  auto labels = bf_pareto(g);
  CHECK(labels.values(1).size() == 2);
}

TEST_CASE("gen_exp_paths: all 2^k path values are Pareto-optimal") {
  for (int k : {2, 6, 10}) {
    auto g = gen_exp_paths(k);
    auto labels = bf_pareto(g);
    CHECK(labels.values(k).size() == (std::size_t{1} << k));
    if (k <= 10) {
      auto oracle = paths_bruteforce(g, k);
      CHECK(oracle.size() == (std::size_t{1} << k));
      CHECK(sorted_values(labels.values(k)) == set_values(oracle));
    }
  }
}

TEST_CASE("paths_bruteforce handles unreachable and source targets") {
  BiGraph g;
  g.vertex_count = 3;
  g.source = 0;
  g.edges = {Edge{0, 1, 1, 1}};
  auto sets = paths_bruteforce_all(g);
  CHECK(sets[2].empty());                                        // unreachable
  CHECK(set_values(sets[0]) == ValueList{{0, 0}});               // v = s
  CHECK(sets[0].entries[0].solution.to_string() == "0");         // empty edge set
  CHECK_THROWS_AS(paths_bruteforce(g, 5), ContractError);
}

TEST_CASE("paths_bruteforce refuses large graphs") {
  BiGraph g;
  g.vertex_count = 13;
  g.source = 0;
  g.edges = {Edge{0, 1, 1, 1}};
  CHECK_THROWS_AS(paths_bruteforce_all(g), GuardError);
}

TEST_CASE("graph files round-trip and reject bad input") {
  auto g = gen_exp_paths(4);
  std::stringstream ss;
  write_graph(g, ss);
  auto back = read_graph(ss);
  CHECK(back.vertex_count == g.vertex_count);
  CHECK(back.source == g.source);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    CHECK(back.edges[e].from == g.edges[e].from);
    CHECK(back.edges[e].to == g.edges[e].to);
    CHECK(back.edges[e].cost == g.edges[e].cost);
    CHECK(back.edges[e].weight == g.edges[e].weight);
  }

  std::stringstream nonpositive("2 1 0\n0 1 0 1\n");
  CHECK_THROWS_AS(read_graph(nonpositive), ParseError);
  std::stringstream out_of_range("2 1 0\n0 5 1 1\n");
  CHECK_THROWS_AS(read_graph(out_of_range), ParseError);
  std::stringstream truncated("3 2 0\n0 1 1 1\n");
  CHECK_THROWS_AS(read_graph(truncated), ParseError);
}

TEST_CASE("self loops never change any label list") {
  Rng rng(23);
  auto g = random_graph(rng, 8);
  auto before = bf_pareto(g);
  g.edges.push_back(Edge{2 % g.vertex_count, 2 % g.vertex_count, 0.5, 0.5});
  auto after = bf_pareto(g);
  for (int v = 0; v < g.vertex_count; ++v) CHECK(before.values(v) == after.values(v));
}

TEST_CASE("relax accounting sums list sizes before each operation") {
  // one edge, one round: |L_u| + |L_v| = 1 + 0 at the single relax
  BiGraph g;
  g.vertex_count = 2;
  g.source = 0;
  g.edges = {Edge{0, 1, 1, 1}};
  BfOptions opts;
  opts.early_exit = false;
  auto labels = bf_pareto(g, opts);
  CHECK(labels.relax_ops == 1);
  CHECK(labels.accounting == 1);
}
