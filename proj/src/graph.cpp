#include "paretolab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "paretolab/filters.hpp"
#include "paretolab/scalar.hpp"
#include "paretolab/text_io.hpp"

namespace paretolab {

void BiGraph::validate() const {
  if (vertex_count <= 0) throw ContractError("graph needs at least one vertex");
  if (source < 0 || source >= vertex_count) throw ContractError("source vertex out of range");
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= vertex_count || e.to < 0 || e.to >= vertex_count)
      throw ContractError("edge endpoint out of range");
    if (!(e.cost > 0.0) || !std::isfinite(e.cost))
      throw ContractError("edge cost must be strictly positive and finite");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw ContractError("edge weight must be strictly positive and finite");
  }
}

std::vector<std::pair<double, double>> LabelLists::values(int v) const {
  std::vector<std::pair<double, double>> out;
  const auto& lst = lists[static_cast<std::size_t>(v)];
  out.reserve(lst.size());
  for (std::int32_t h : lst) {
    const PathLabel& l = label(v, h);
    out.emplace_back(l.cost, l.weight);
  }
  return out;
}

namespace {

struct Cand {
  double cost;
  double weight;
  std::int32_t handle;  // existing arena handle at v, or -1 for a new label
  std::int32_t pred;    // arena handle at u for new labels
};

void check_list_invariants(const LabelLists& labels, int v) {
  const auto& lst = labels.lists[static_cast<std::size_t>(v)];
  for (std::size_t i = 1; i < lst.size(); ++i) {
    const PathLabel& a = labels.label(v, lst[i - 1]);
    const PathLabel& b = labels.label(v, lst[i]);
    if (!(a.weight < b.weight && a.cost > b.cost))
      throw InvariantError("label list not a strict staircase after relax");
  }
}

/// Merges the current list of v with u's list shifted by the edge, sweeps
/// out dominated labels. Returns whether v's list changed.
bool relax(const BiGraph& g, LabelLists& labels, int edge_id, bool validate) {
  const Edge& e = g.edges[static_cast<std::size_t>(edge_id)];
  auto& lu = labels.lists[static_cast<std::size_t>(e.from)];
  auto& lv = labels.lists[static_cast<std::size_t>(e.to)];
  labels.accounting += lu.size() + lv.size();
  ++labels.relax_ops;
  if (lu.empty()) return false;

  std::vector<Cand> kept;
  kept.reserve(lu.size() + lv.size());
  std::size_t iv = 0, iu = 0;
  bool has_best = false;
  double best_cost = 0.0;
  bool any_new = false;

  auto consider = [&](const Cand& c) {
    if (!kept.empty() && kept.back().weight == c.weight && kept.back().cost == c.cost)
      return;  // exact duplicate: first discovered wins (existing precedes new)
    if (!has_best || c.cost < best_cost) {
      kept.push_back(c);
      best_cost = c.cost;
      has_best = true;
      if (c.handle < 0) any_new = true;
    }
  };

  while (iv < lv.size() || iu < lu.size()) {
    bool pick_existing;
    Cand cu{};
    if (iu < lu.size()) {
      const PathLabel& src = labels.label(e.from, lu[iu]);
      cu = Cand{src.cost + e.cost, src.weight + e.weight, -1, lu[iu]};
    }
    if (iv >= lv.size()) {
      pick_existing = false;
    } else if (iu >= lu.size()) {
      pick_existing = true;
    } else {
      const PathLabel& ev = labels.label(e.to, lv[iv]);
      pick_existing =
          ev.weight < cu.weight || (ev.weight == cu.weight && ev.cost <= cu.cost);
    }
    if (pick_existing) {
      const PathLabel& ev = labels.label(e.to, lv[iv]);
      consider(Cand{ev.cost, ev.weight, lv[iv], -1});
      ++iv;
    } else {
      consider(cu);
      ++iu;
    }
  }

  bool changed = any_new || kept.size() != lv.size();
  if (changed) {
    std::vector<std::int32_t> next;
    next.reserve(kept.size());
    auto& arena_v = labels.arena[static_cast<std::size_t>(e.to)];
    for (const Cand& c : kept) {
      if (c.handle >= 0) {
        next.push_back(c.handle);
      } else {
        arena_v.push_back(PathLabel{c.cost, c.weight, edge_id, c.pred});
        next.push_back(static_cast<std::int32_t>(arena_v.size() - 1));
      }
    }
    lv = std::move(next);
  }
  if (validate) check_list_invariants(labels, e.to);
  return changed;
}

}  // namespace

LabelLists bf_pareto(const BiGraph& g, const BfOptions& opts) {
  g.validate();
  LabelLists labels;
  labels.lists.resize(static_cast<std::size_t>(g.vertex_count));
  labels.arena.resize(static_cast<std::size_t>(g.vertex_count));
  labels.arena[static_cast<std::size_t>(g.source)].push_back(PathLabel{0.0, 0.0, -1, -1});
  labels.lists[static_cast<std::size_t>(g.source)].push_back(0);

  for (int round = 1; round <= g.vertex_count - 1; ++round) {
    bool changed = false;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      changed |= relax(g, labels, static_cast<int>(e), opts.validate_lists);
    labels.rounds_executed = round;
    if (opts.early_exit && !changed) break;
  }
  return labels;
}

namespace {

/// Dominance-free (cost, weight) pairs, ascending weight. Exact duplicates
/// collapse to one.
ValueList filter_pairs(ValueList pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  ValueList out;
  for (const auto& p : pts) {
    if (!out.empty() && out.back().second == p.second && out.back().first == p.first) continue;
    if (out.empty() || p.first < out.back().first) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<std::vector<ValueList>> fw_pareto(const BiGraph& g) {
  g.validate();
  const std::size_t n = static_cast<std::size_t>(g.vertex_count);
  std::vector<std::vector<ValueList>> dist(n, std::vector<ValueList>(n));
  for (std::size_t v = 0; v < n; ++v) dist[v][v] = {{0.0, 0.0}};
  for (const Edge& e : g.edges) {
    if (e.from == e.to) continue;  // a self loop is dominated by the empty path
    auto& cell = dist[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)];
    cell.emplace_back(e.cost, e.weight);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !dist[u][v].empty()) dist[u][v] = filter_pairs(std::move(dist[u][v]));

  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u == m || dist[u][m].empty()) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == m || v == u || dist[m][v].empty()) continue;
        ValueList cand = dist[u][v];
        cand.reserve(cand.size() + dist[u][m].size() * dist[m][v].size());
        for (const auto& a : dist[u][m])
          for (const auto& b : dist[m][v])
            cand.emplace_back(a.first + b.first, a.second + b.second);
        dist[u][v] = filter_pairs(std::move(cand));
      }
    }
  }
  return dist;
}

BiGraph gen_exp_paths(int k) {
  if (k < 1 || k > kExpPathsMaxStages)
    throw GuardError("gen_exp_paths requires 1 <= k <= " + std::to_string(kExpPathsMaxStages) +
                     ", got " + std::to_string(k));
  BiGraph g;
  g.vertex_count = k + 1;
  g.source = 0;
  g.edges.reserve(static_cast<std::size_t>(2 * k));
  for (int i = 1; i <= k; ++i) {
    double big = std::ldexp(1.0, i);  // 2^i, exact
    g.edges.push_back(Edge{i - 1, i, big, 1.0});
    g.edges.push_back(Edge{i - 1, i, 1.0, big});
  }
  return g;
}

namespace {

struct PathEnum {
  const BiGraph* g;
  std::vector<std::vector<int>> out_edges;  // edge ids by tail vertex
  std::vector<std::vector<ScoredSolution<double>>> found;  // per target vertex
  std::vector<bool> visited;
  std::vector<bool> edge_bits;
  double cost = 0.0, weight = 0.0;

  void dfs(int at) {
    found[static_cast<std::size_t>(at)].push_back(
        ScoredSolution<double>{Solution(edge_bits), {cost, weight}});
    for (int eid : out_edges[static_cast<std::size_t>(at)]) {
      const Edge& e = g->edges[static_cast<std::size_t>(eid)];
      if (visited[static_cast<std::size_t>(e.to)]) continue;
      visited[static_cast<std::size_t>(e.to)] = true;
      edge_bits[static_cast<std::size_t>(eid)] = true;
      double pc = cost, pw = weight;
      cost += e.cost;
      weight += e.weight;
      dfs(e.to);
      cost = pc;
      weight = pw;
      edge_bits[static_cast<std::size_t>(eid)] = false;
      visited[static_cast<std::size_t>(e.to)] = false;
    }
  }
};

}  // namespace

std::vector<ParetoSet<double>> paths_bruteforce_all(const BiGraph& g) {
  g.validate();
  if (g.vertex_count > kPathsBruteforceMaxVertices)
    throw GuardError("paths_bruteforce enumerates simple paths; vertex count must be <= " +
                     std::to_string(kPathsBruteforceMaxVertices) + ", got " +
                     std::to_string(g.vertex_count));
  PathEnum en;
  en.g = &g;
  en.out_edges.resize(static_cast<std::size_t>(g.vertex_count));
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    en.out_edges[static_cast<std::size_t>(g.edges[e].from)].push_back(static_cast<int>(e));
  en.found.resize(static_cast<std::size_t>(g.vertex_count));
  en.visited.assign(static_cast<std::size_t>(g.vertex_count), false);
  en.edge_bits.assign(g.edges.size(), false);
  en.visited[static_cast<std::size_t>(g.source)] = true;
  en.dfs(g.source);

  const Directions dirs = all_minimize(2);
  std::vector<ParetoSet<double>> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count));
  for (int v = 0; v < g.vertex_count; ++v)
    out.push_back(filter_sweep2d(en.found[static_cast<std::size_t>(v)], dirs));
  return out;
}

ParetoSet<double> paths_bruteforce(const BiGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count) throw ContractError("target vertex out of range");
  return paths_bruteforce_all(g)[static_cast<std::size_t>(v)];
}

std::vector<int> reconstruct_path(const BiGraph& g, const LabelLists& labels, int v,
                                  std::int32_t handle) {
  std::vector<int> rev;
  int at = v;
  std::int32_t h = handle;
  while (true) {
    rev.push_back(at);
    const PathLabel& l = labels.label(at, h);
    if (l.edge < 0) break;
    const Edge& e = g.edges[static_cast<std::size_t>(l.edge)];
    at = e.from;
    h = l.pred;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Solution path_edge_bits(const BiGraph& g, const LabelLists& labels, int v, std::int32_t handle) {
  std::vector<bool> bits(g.edges.size(), false);
  int at = v;
  std::int32_t h = handle;
  while (true) {
    const PathLabel& l = labels.label(at, h);
    if (l.edge < 0) break;
    bits[static_cast<std::size_t>(l.edge)] = true;
    at = g.edges[static_cast<std::size_t>(l.edge)].from;
    h = l.pred;
  }
  return Solution(std::move(bits));
}

ParetoSet<double> labels_to_pareto_set(const BiGraph& g, const LabelLists& labels, int v) {
  ParetoSet<double> out;
  out.directions = all_minimize(2);
  const auto& lst = labels.lists[static_cast<std::size_t>(v)];
  out.entries.reserve(lst.size());
  for (std::int32_t h : lst) {
    const PathLabel& l = labels.label(v, h);
    out.entries.push_back(ScoredSolution<double>{path_edge_bits(g, labels, v, h), {l.cost, l.weight}});
  }
  out.sort_canonical();
  return out;
}

BiGraph read_graph(std::istream& in) {
  detail::LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("missing header 'n m s'");
  auto head = detail::split_tokens(line);
  std::int64_t n = 0, m = 0, s = 0;
  if (head.size() != 3 || !parse_scalar(head[0], n) || !parse_scalar(head[1], m) ||
      !parse_scalar(head[2], s))
    r.fail("expected header 'n m s'");
  BiGraph g;
  g.vertex_count = static_cast<int>(n);
  g.source = static_cast<int>(s);
  for (std::int64_t i = 0; i < m; ++i) {
    if (!r.next(line)) r.fail("missing edge line " + std::to_string(i + 1));
    auto toks = detail::split_tokens(line);
    std::int64_t u = 0, v = 0;
    double c = 0, w = 0;
    if (toks.size() != 4 || !parse_scalar(toks[0], u) || !parse_scalar(toks[1], v) ||
        !parse_scalar(toks[2], c) || !parse_scalar(toks[3], w))
      r.fail("expected edge line 'u v cost weight'");
    g.edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), c, w});
  }
  try {
    g.validate();
  } catch (const ContractError& e) {
    r.fail(e.what());
  }
  return g;
}

void write_graph(const BiGraph& g, std::ostream& out) {
  out << g.vertex_count << ' ' << g.edges.size() << ' ' << g.source << '\n';
  for (const Edge& e : g.edges)
    out << e.from << ' ' << e.to << ' ' << format_scalar(e.cost) << ' '
        << format_scalar(e.weight) << '\n';
}

}  // namespace paretolab
