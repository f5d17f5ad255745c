#include "paretolab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "paretolab/lambda.hpp"

namespace paretolab {

namespace {

constexpr std::uint64_t kAdversaryStream = 0x61647665'72736172ULL;  // profits / topology
constexpr std::uint64_t kAnchorStream = 0x616E6368'6F727321ULL;     // interval anchors
constexpr std::uint64_t kTrialStream = 0x74726961'6C730000ULL;

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  return derive_seed(master, kTrialStream + static_cast<std::uint64_t>(trial));
}

/// Number of perturbed coordinates per trial.
int coordinate_count(const ExperimentSpec& spec) {
  switch (spec.problem) {
    case Problem::Knapsack:
      return spec.n;
    case Problem::ShortestPath:
      return 2 * spec.n;  // fixture edge count: chain n-1 plus n+1 extras
    case Problem::Points2D:
      return 0;  // plain uniform coordinates, model unused
    case Problem::ExplicitSet:
      return spec.n;
  }
  return spec.n;
}

// --- adversarial fixtures (fixed per experiment) -------------------------

std::vector<double> adversary_profits(const ExperimentSpec& spec) {
  Rng rng(derive_seed(spec.master_seed, kAdversaryStream));
  std::vector<double> p(static_cast<std::size_t>(spec.n));
  switch (spec.adversary) {
    case AdversaryProfile::UniformProfits:
      for (auto& v : p) v = rng.next_unit();
      break;
    case AdversaryProfile::EqualProfits:
      for (auto& v : p) v = 1.0;
      break;
    case AdversaryProfile::ExponentialProfits:
      for (int i = 0; i < spec.n; ++i)
        p[static_cast<std::size_t>(i)] = std::ldexp(1.0, i + 1 - spec.n);  // 2^(i+1-n) in (0,1]
      break;
  }
  return p;
}

/// Fixture topology for shortest-path experiments: a reachability chain
/// 0 -> 1 -> ... -> n-1 plus 2n random extra edges, adversarial costs.
BiGraph adversary_graph(const ExperimentSpec& spec) {
  Rng rng(derive_seed(spec.master_seed, kAdversaryStream));
  BiGraph g;
  g.vertex_count = spec.n;
  g.source = 0;
  for (int v = 0; v + 1 < spec.n; ++v)
    g.edges.push_back(Edge{v, v + 1, rng.uniform(0.05, 1.0), 1.0});
  const int extra = 2 * spec.n - (spec.n - 1);
  for (int e = 0; e < extra; ++e) {
    int u = static_cast<int>(rng.uniform_int(0, spec.n - 1));
    int v = static_cast<int>(rng.uniform_int(0, spec.n - 1));
    if (u == v) v = (v + 1) % spec.n;
    g.edges.push_back(Edge{u, v, rng.uniform(0.05, 1.0), 1.0});
  }
  return g;
}

struct ExplicitFixture {
  std::vector<std::uint64_t> masks;
  std::vector<double> p_values;  // arbitrary objective p(x), one per solution
};

ExplicitFixture adversary_explicit_set(const ExperimentSpec& spec) {
  Rng rng(derive_seed(spec.master_seed, kAdversaryStream));
  const std::uint64_t cube = std::uint64_t{1} << spec.n;
  ExplicitFixture fx;
  if (spec.explicit_size == 0 || static_cast<std::uint64_t>(spec.explicit_size) >= cube) {
    fx.masks.resize(cube);
    for (std::uint64_t m = 0; m < cube; ++m) fx.masks[m] = m;
  } else {
    std::vector<bool> seen(cube, false);
    while (fx.masks.size() < static_cast<std::size_t>(spec.explicit_size)) {
      std::uint64_t m = rng.next_u64() & (cube - 1);
      if (!seen[m]) {
        seen[m] = true;
        fx.masks.push_back(m);
      }
    }
    std::sort(fx.masks.begin(), fx.masks.end());
  }
  fx.p_values.resize(fx.masks.size());
  for (auto& v : fx.p_values) v = rng.next_unit();
  return fx;
}

/// Exact adversarial weights for the knapsack winner-gap variant (the
/// perturbed coefficients are the profits there; weights define S).
std::vector<double> adversary_weights(const ExperimentSpec& spec) {
  Rng rng(derive_seed(spec.master_seed, kAdversaryStream + 1));
  std::vector<double> w(static_cast<std::size_t>(spec.n));
  for (auto& v : w) v = rng.uniform(0.25, 1.0);
  return w;
}

// --- per-trial statistics -------------------------------------------------

std::vector<double> sample_coords(const PerturbationModel& model, int count, Rng& rng) {
  std::vector<double> x(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) x[static_cast<std::size_t>(i)] = model.sample(i, rng);
  return x;
}

/// Count of non-dominated points under (min c, min w) among value pairs.
std::size_t count_pareto_minmin(std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  std::size_t count = 0;
  bool first = true;
  double best = 0.0;
  std::pair<double, double> prev{};
  for (const auto& p : pts) {
    if (!first && p == prev) continue;  // duplicates collapse like tie-broken solutions
    if (first || p.first < best) {
      ++count;
      best = p.first;
      first = false;
    }
    prev = p;
  }
  return count;
}

double knapsack_pareto_count(const ExperimentSpec& spec, const std::vector<double>& profits,
                             const PerturbationModel& model, Rng& rng) {
  KnapsackInstance<double> inst;
  inst.n = spec.n;
  inst.profits = profits;
  inst.weights.assign(1, sample_coords(model, spec.n, rng));
  return static_cast<double>(nu_pareto(inst).set.size());
}

double knapsack_lambda_check(const ExperimentSpec& spec, const std::vector<double>& profits,
                             const PerturbationModel& model, Rng& rng) {
  KnapsackInstance<double> inst;
  inst.n = spec.n;
  inst.profits = profits;
  inst.weights.assign(1, sample_coords(model, spec.n, rng));
  const double t = rng.next_unit() * static_cast<double>(spec.n);
  LambdaResult lr = compute_lambda(inst, t);
  if (std::isinf(lr.lambda)) return 1.0;
  for (double li : lr.per_index)
    if (li == lr.lambda) return 1.0;  // exact scalar equality, by design
  return 0.0;
}

double knapsack_winner_gap(const ExperimentSpec& spec, const std::vector<double>& exact_weights,
                           const PerturbationModel& model, Rng& rng) {
  // S = feasible solutions under exact weights and W = sum/2; the objective
  // is the trial's perturbed profit vector, maximized
  std::vector<double> profits = sample_coords(model, spec.n, rng);
  double wsum = 0.0;
  for (double w : exact_weights) wsum += w;
  const double cap = wsum / 2.0;
  std::vector<double> values;
  const std::uint64_t cube = std::uint64_t{1} << spec.n;
  for (std::uint64_t mask = 0; mask < cube; ++mask) {
    double p = 0.0, w = 0.0;
    for (int i = 0; i < spec.n; ++i)
      if ((mask >> i) & 1u) {
        p += profits[static_cast<std::size_t>(i)];
        w += exact_weights[static_cast<std::size_t>(i)];
      }
    if (w <= cap) values.push_back(-p);  // maximize: negate for the min-gap core
  }
  return winner_gap(values);
}

double shortest_path_value(const ExperimentSpec& spec, const BiGraph& topology,
                           const PerturbationModel& model, Rng& rng) {
  BiGraph g = topology;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    g.edges[e].weight = model.sample(static_cast<int>(e), rng);
  BfOptions opts;
  opts.early_exit = spec.statistic != Statistic::LabelSizes;  // strict accounting needs all rounds
  LabelLists labels = bf_pareto(g, opts);
  if (spec.statistic == Statistic::LabelSizes) return static_cast<double>(labels.accounting);
  return static_cast<double>(labels.lists[static_cast<std::size_t>(g.vertex_count - 1)].size());
}

double points_maxima_count(const ExperimentSpec& spec, Rng& rng) {
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(spec.n));
  for (auto& p : pts) {
    p.first = rng.next_unit();
    p.second = rng.next_unit();
  }
  // maximize both axes == minimize both negated axes
  for (auto& p : pts) {
    p.first = -p.first;
    p.second = -p.second;
  }
  return static_cast<double>(count_pareto_minmin(std::move(pts)));
}

double explicit_set_value(const ExperimentSpec& spec, const ExplicitFixture& fx,
                          const PerturbationModel& model, Rng& rng) {
  std::vector<double> w = sample_coords(model, spec.n, rng);
  std::vector<double> wx(fx.masks.size());
  for (std::size_t s = 0; s < fx.masks.size(); ++s) {
    double acc = 0.0;
    for (int i = 0; i < spec.n; ++i)
      if ((fx.masks[s] >> i) & 1u) acc += w[static_cast<std::size_t>(i)];
    wx[s] = acc;
  }
  if (spec.statistic == Statistic::WinnerGap) return winner_gap(wx);
  // Pareto count over (maximize p(x), minimize w.x)
  std::vector<std::pair<double, double>> pts(fx.masks.size());
  for (std::size_t s = 0; s < fx.masks.size(); ++s) pts[s] = {-fx.p_values[s], wx[s]};
  return static_cast<double>(count_pareto_minmin(std::move(pts)));
}

}  // namespace

void ExperimentSpec::validate() const {
  if (n < 0) throw ContractError("n must be >= 0");
  if (trials < 1) throw ContractError("trials must be >= 1");
  if (!(phi >= 1.0)) throw ContractError("phi must be >= 1");
  if (threads < 1) throw ContractError("threads must be >= 1");
  switch (problem) {
    case Problem::Knapsack:
      if (statistic != Statistic::ParetoCount && statistic != Statistic::LambdaCheck &&
          statistic != Statistic::WinnerGap)
        throw ContractError("knapsack experiments support pareto_count, lambda_check, winner_gap");
      if ((statistic == Statistic::LambdaCheck || statistic == Statistic::WinnerGap) && n > 20)
        throw GuardError("enumerating statistics need n <= 20");
      if (range == ValueRange::Symmetric)
        throw ContractError("knapsack weights are nonnegative; use the unit range");
      break;
    case Problem::ShortestPath:
      if (statistic != Statistic::ParetoCount && statistic != Statistic::LabelSizes)
        throw ContractError("shortest-path experiments support pareto_count, label_sizes");
      if (n < 2) throw ContractError("shortest-path experiments need n >= 2 vertices");
      if (range == ValueRange::Symmetric)
        throw ContractError("edge weights are strictly positive; use the unit range");
      break;
    case Problem::Points2D:
      if (statistic != Statistic::MaximaCount)
        throw ContractError("points experiments support maxima_count");
      if (n < 1) throw ContractError("points experiments need n >= 1");
      break;
    case Problem::ExplicitSet:
      if (statistic != Statistic::ParetoCount && statistic != Statistic::WinnerGap)
        throw ContractError("explicit-set experiments support pareto_count, winner_gap");
      if (n > 20) throw GuardError("explicit sets enumerate up to 2^n solutions; n <= 20");
      if (explicit_size < 0) throw ContractError("explicit_size must be >= 0");
      if (statistic == Statistic::WinnerGap && explicit_size == 1)
        throw ContractError("winner gap needs at least two solutions");
      break;
  }
}

std::string statistic_name(Statistic s) {
  switch (s) {
    case Statistic::ParetoCount:
      return "pareto_count";
    case Statistic::LabelSizes:
      return "label_sizes";
    case Statistic::WinnerGap:
      return "winner_gap";
    case Statistic::LambdaCheck:
      return "lambda_check";
    case Statistic::MaximaCount:
      return "maxima_count";
  }
  return "unknown";
}

PerturbationModel model_for(const ExperimentSpec& spec) {
  const int count = coordinate_count(spec);
  Rng rng(derive_seed(spec.master_seed, kAnchorStream));
  const double width = 1.0 / spec.phi;
  std::vector<double> anchors(static_cast<std::size_t>(count));
  PerturbationModel model;
  if (spec.noise == DensityKind::Triangular) {
    const double lo = spec.range == ValueRange::Unit ? 0.0 : -1.0;
    for (auto& a : anchors) a = rng.uniform(lo + width, 1.0 - width);
    model = PerturbationModel::triangular(spec.phi, std::move(anchors), spec.range);
  } else {
    const double lo = spec.range == ValueRange::Unit ? 0.0 : -1.0;
    for (auto& a : anchors) a = rng.uniform(lo, 1.0 - width);
    model = PerturbationModel::uniform(spec.phi, std::move(anchors), spec.range);
  }
  return model;
}

KnapsackInstance<double> sample_knapsack_instance(const ExperimentSpec& spec,
                                                  const PerturbationModel& model, int trial) {
  spec.validate();
  model.validate(spec.n);
  Rng rng(trial_seed(spec.master_seed, trial));
  KnapsackInstance<double> inst;
  inst.n = spec.n;
  inst.profits = adversary_profits(spec);
  inst.weights.assign(1, sample_coords(model, spec.n, rng));
  return inst;
}

ExperimentReport run_experiment(const ExperimentSpec& spec, const PerturbationModel& model) {
  spec.validate();
  if (spec.problem != Problem::Points2D) model.validate(coordinate_count(spec));

  // adversarial fixtures, shared read-only across trials
  std::vector<double> profits;
  std::vector<double> exact_weights;
  BiGraph topology;
  ExplicitFixture fixture;
  switch (spec.problem) {
    case Problem::Knapsack:
      if (spec.statistic == Statistic::WinnerGap)
        exact_weights = adversary_weights(spec);
      else
        profits = adversary_profits(spec);
      break;
    case Problem::ShortestPath:
      topology = adversary_graph(spec);
      break;
    case Problem::Points2D:
      break;
    case Problem::ExplicitSet:
      fixture = adversary_explicit_set(spec);
      break;
  }

  ExperimentReport report;
  report.spec = spec;
  report.statistic_name = statistic_name(spec.statistic);
  report.rows.resize(static_cast<std::size_t>(spec.trials));

  auto run_trial = [&](int trial) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(trial_seed(spec.master_seed, trial));
    double value = 0.0;
    switch (spec.problem) {
      case Problem::Knapsack:
        if (spec.statistic == Statistic::ParetoCount)
          value = knapsack_pareto_count(spec, profits, model, rng);
        else if (spec.statistic == Statistic::LambdaCheck)
          value = knapsack_lambda_check(spec, profits, model, rng);
        else
          value = knapsack_winner_gap(spec, exact_weights, model, rng);
        break;
      case Problem::ShortestPath:
        value = shortest_path_value(spec, topology, model, rng);
        break;
      case Problem::Points2D:
        value = points_maxima_count(spec, rng);
        break;
      case Problem::ExplicitSet:
        value = explicit_set_value(spec, fixture, model, rng);
        break;
    }
    const auto t1 = std::chrono::steady_clock::now();
    TrialRow& row = report.rows[static_cast<std::size_t>(trial)];
    row.trial = trial;
    row.seed = trial_seed(spec.master_seed, trial);
    row.n = spec.n;
    row.phi = spec.phi;
    row.value = value;
    row.elapsed_ns =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  };

  if (spec.threads <= 1) {
    for (int t = 0; t < spec.trials; ++t) {
      try {
        run_trial(t);
      } catch (const std::exception& e) {
        throw std::runtime_error("trial " + std::to_string(t) + " failed: " + e.what());
      }
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
      while (true) {
        int t = next.fetch_add(1);
        if (t >= spec.trials) return;
        try {
          run_trial(t);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error)
            first_error = std::make_exception_ptr(
                std::runtime_error("trial " + std::to_string(t) + " failed: " + e.what()));
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const int k = std::min(spec.threads, spec.trials);
    pool.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  double sum = 0.0, maxv = -std::numeric_limits<double>::infinity();
  for (const auto& r : report.rows) {
    sum += r.value;
    maxv = std::max(maxv, r.value);
  }
  report.mean = sum / static_cast<double>(spec.trials);
  double ss = 0.0;
  for (const auto& r : report.rows) ss += (r.value - report.mean) * (r.value - report.mean);
  report.variance = spec.trials > 1 ? ss / static_cast<double>(spec.trials - 1) : 0.0;
  report.max_value = maxv;

  switch (spec.statistic) {
    case Statistic::ParetoCount:
      report.bound_reference = static_cast<double>(spec.n) * static_cast<double>(spec.n) * spec.phi + 1.0;
      break;
    case Statistic::MaximaCount:
      report.bound_reference = harmonic(spec.n);
      break;
    default:
      report.bound_reference = std::numeric_limits<double>::quiet_NaN();
      break;
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  return run_experiment(spec, model_for(spec));
}

void write_csv(const ExperimentReport& report, std::ostream& out, bool include_timing) {
  out << "trial,seed,n,phi,statistic,value,elapsed_ns\n";
  for (const auto& r : report.rows) {
    out << r.trial << ',' << r.seed << ',' << r.n << ',' << format_scalar(r.phi) << ','
        << report.statistic_name << ',' << format_scalar(r.value) << ','
        << (include_timing ? r.elapsed_ns : 0) << '\n';
  }
  out << "#agg,mean," << format_scalar(report.mean) << '\n';
  out << "#agg,variance," << format_scalar(report.variance) << '\n';
  out << "#agg,max," << format_scalar(report.max_value) << '\n';
  out << "#agg,bound,"
      << (std::isnan(report.bound_reference) ? std::string("-") : format_scalar(report.bound_reference))
      << '\n';
}

double harmonic(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace paretolab
