// paretolab CLI: compute Pareto sets from instance files, solve knapsack
// instances, extract ε-coresets, generate fixture instances, and run seeded
// perturbation experiments.
//
// Exit codes: 0 success, 2 input error, 3 guard/limit violation, 4 internal
// invariant failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paretolab/approx.hpp"
#include "paretolab/experiment.hpp"
#include "paretolab/graph.hpp"
#include "paretolab/knapsack.hpp"
#include "paretolab/lambda.hpp"
#include "paretolab/roundsolve.hpp"

namespace pl = paretolab;

namespace {

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputSink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw pl::ContractError("cannot open output file '" + path + "'");
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pl::ContractError("cannot open input file '" + path + "'");
  return in;
}

template <typename T>
std::string entry_line(const pl::ScoredSolution<T>& e) {
  std::string line;
  for (std::size_t k = 0; k < e.objective.size(); ++k) {
    if (k) line += ' ';
    line += pl::format_scalar(e.objective[k]);
  }
  std::string bits = e.solution.to_string();
  if (!bits.empty()) {
    line += ' ';
    line += bits;
  }
  return line;
}

template <typename T>
void print_pareto_set(const pl::ParetoSet<T>& set, std::ostream& out) {
  for (const auto& e : set.entries) out << entry_line(e) << '\n';
}

template <typename T>
pl::ParetoSet<T> knapsack_pareto(const pl::KnapsackInstance<T>& inst, bool prune) {
  pl::NuOptions opts;
  opts.prune_capacity = prune;
  return inst.dimension() == 2 ? pl::nu_pareto(inst, opts).set
                               : pl::nu_pareto_multi(inst, pl::MultiFilter::Klp, opts).set;
}

void print_graph_pareto(const pl::BiGraph& g, std::ostream& out) {
  pl::LabelLists labels = pl::bf_pareto(g);
  for (int v = 0; v < g.vertex_count; ++v) {
    for (std::int32_t h : labels.lists[static_cast<std::size_t>(v)]) {
      const pl::PathLabel& l = labels.label(v, h);
      out << pl::format_scalar(l.cost) << ' ' << pl::format_scalar(l.weight);
      for (int u : pl::reconstruct_path(g, labels, v, h)) out << ' ' << u;
      out << '\n';
    }
  }
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::int64_t v = 0;
    if (!pl::parse_scalar(tok, v)) throw pl::ContractError("bad integer list '" + csv + "'");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw pl::ContractError("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    double v = 0;
    if (!pl::parse_scalar(tok, v)) throw pl::ContractError("bad number list '" + csv + "'");
    out.push_back(v);
  }
  if (out.empty()) throw pl::ContractError("empty number list");
  return out;
}

struct ExperimentArgs {
  std::string problem = "knapsack";
  std::string statistic = "pareto-count";
  int n = 10;
  double phi = 1.0;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string adversary = "uniform";
  std::string model = "uniform";
  std::string range = "unit";
  int explicit_size = 0;
  int threads = 1;
  std::string output;
  std::string plot;
  std::string sweep_n;
  std::string sweep_phi;
  bool timing = false;
};

pl::ExperimentSpec spec_from(const ExperimentArgs& a) {
  pl::ExperimentSpec spec;
  if (a.problem == "knapsack")
    spec.problem = pl::Problem::Knapsack;
  else if (a.problem == "shortest-path")
    spec.problem = pl::Problem::ShortestPath;
  else if (a.problem == "points")
    spec.problem = pl::Problem::Points2D;
  else if (a.problem == "explicit")
    spec.problem = pl::Problem::ExplicitSet;
  else
    throw pl::ContractError("unknown problem '" + a.problem + "'");

  if (a.statistic == "pareto-count" || a.statistic == "pareto_count")
    spec.statistic = pl::Statistic::ParetoCount;
  else if (a.statistic == "label-sizes" || a.statistic == "label_sizes")
    spec.statistic = pl::Statistic::LabelSizes;
  else if (a.statistic == "winner-gap" || a.statistic == "winner_gap")
    spec.statistic = pl::Statistic::WinnerGap;
  else if (a.statistic == "lambda-check" || a.statistic == "lambda_check")
    spec.statistic = pl::Statistic::LambdaCheck;
  else if (a.statistic == "maxima" || a.statistic == "maxima-count" || a.statistic == "maxima_count")
    spec.statistic = pl::Statistic::MaximaCount;
  else
    throw pl::ContractError("unknown statistic '" + a.statistic + "'");

  if (a.adversary == "uniform")
    spec.adversary = pl::AdversaryProfile::UniformProfits;
  else if (a.adversary == "equal")
    spec.adversary = pl::AdversaryProfile::EqualProfits;
  else if (a.adversary == "exponential")
    spec.adversary = pl::AdversaryProfile::ExponentialProfits;
  else
    throw pl::ContractError("unknown adversary '" + a.adversary + "'");

  if (a.model == "uniform")
    spec.noise = pl::DensityKind::Uniform;
  else if (a.model == "triangular")
    spec.noise = pl::DensityKind::Triangular;
  else
    throw pl::ContractError("unknown model '" + a.model + "'");

  if (a.range == "unit")
    spec.range = pl::ValueRange::Unit;
  else if (a.range == "symmetric")
    spec.range = pl::ValueRange::Symmetric;
  else
    throw pl::ContractError("unknown range '" + a.range + "'");

  spec.n = a.n;
  spec.phi = a.phi;
  spec.trials = a.trials;
  spec.master_seed = a.seed;
  spec.explicit_size = a.explicit_size;
  spec.threads = a.threads;
  return spec;
}

void cmd_experiment(const ExperimentArgs& args) {
  if (!args.sweep_n.empty() && !args.sweep_phi.empty())
    throw pl::ContractError("--sweep-n and --sweep-phi are mutually exclusive");
  pl::ExperimentSpec base = spec_from(args);
  if (args.phi < 1.0) throw pl::ContractError("phi must be >= 1");

  OutputSink sink(args.output);
  std::unique_ptr<OutputSink> plot;
  if (!args.plot.empty()) {
    plot = std::make_unique<OutputSink>(args.plot);
    plot->out() << "x,mean\n";
  }

  auto run_one = [&](const pl::ExperimentSpec& spec, double x, bool header) {
    pl::ExperimentReport report = pl::run_experiment(spec);
    std::ostringstream csv;
    pl::write_csv(report, csv, args.timing);
    std::string text = csv.str();
    if (!header) text.erase(0, text.find('\n') + 1);  // one header per file
    sink.out() << text;
    if (plot) plot->out() << pl::format_scalar(x) << ',' << pl::format_scalar(report.mean) << '\n';
  };

  if (!args.sweep_n.empty()) {
    bool first = true;
    for (int n : parse_int_list(args.sweep_n)) {
      pl::ExperimentSpec spec = base;
      spec.n = n;
      run_one(spec, static_cast<double>(n), first);
      first = false;
    }
  } else if (!args.sweep_phi.empty()) {
    bool first = true;
    for (double phi : parse_double_list(args.sweep_phi)) {
      pl::ExperimentSpec spec = base;
      spec.phi = phi;
      if (phi < 1.0) throw pl::ContractError("phi must be >= 1");
      run_one(spec, phi, first);
      first = false;
    }
  } else {
    run_one(base, static_cast<double>(base.n), true);
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Pareto sets for knapsack and bicriteria shortest paths, "
               "epsilon-coresets, and seeded perturbation experiments"};
  app.require_subcommand(1);

  // pareto
  std::string in_path, out_path, kind = "knapsack";
  bool exact = false, prune = false;
  auto* pareto = app.add_subcommand("pareto", "enumerate the Pareto set of an instance file");
  pareto->add_option("input", in_path, "instance file")->required();
  pareto->add_option("--kind", kind, "instance kind: knapsack|graph")
      ->check(CLI::IsMember({"knapsack", "graph"}));
  pareto->add_flag("--exact", exact, "parse scalars as exact 64-bit integers (knapsack)");
  pareto->add_flag("--prune-capacity", prune, "drop over-capacity candidates during the DP");
  pareto->add_option("--output", out_path, "write to file instead of stdout");
  pareto->callback([&]() {
    OutputSink sink(out_path);
    if (kind == "graph") {
      auto in = open_input(in_path);
      print_graph_pareto(pl::read_graph(in), sink.out());
    } else if (exact) {
      auto in = open_input(in_path);
      print_pareto_set(knapsack_pareto(pl::read_knapsack<std::int64_t>(in), prune), sink.out());
    } else {
      auto in = open_input(in_path);
      print_pareto_set(knapsack_pareto(pl::read_knapsack<double>(in), prune), sink.out());
    }
  });

  // solve
  auto* solve = app.add_subcommand("solve", "solve a knapsack instance optimally");
  solve->add_option("input", in_path, "knapsack instance file")->required();
  solve->add_flag("--exact", exact, "parse scalars as exact 64-bit integers");
  solve->add_option("--output", out_path, "write to file instead of stdout");
  solve->callback([&]() {
    OutputSink sink(out_path);
    if (exact) {
      auto in = open_input(in_path);
      sink.out() << entry_line(pl::solve_knapsack(pl::read_knapsack<std::int64_t>(in))) << '\n';
    } else {
      auto in = open_input(in_path);
      sink.out() << entry_line(pl::solve_knapsack(pl::read_knapsack<double>(in))) << '\n';
    }
  });

  // approx
  double eps = 0.0;
  int target = -1;
  auto* approx = app.add_subcommand("approx", "epsilon-coreset of a computed Pareto set");
  approx->add_option("input", in_path, "instance file")->required();
  approx->add_option("--eps", eps, "approximation factor, > 0")->required();
  approx->add_option("--kind", kind, "instance kind: knapsack|graph")
      ->check(CLI::IsMember({"knapsack", "graph"}));
  approx->add_option("--target", target, "target vertex (graph; default: last vertex)");
  approx->add_option("--output", out_path, "write to file instead of stdout");
  approx->callback([&]() {
    OutputSink sink(out_path);
    if (kind == "graph") {
      auto in = open_input(in_path);
      pl::BiGraph g = pl::read_graph(in);
      int v = target >= 0 ? target : g.vertex_count - 1;
      pl::LabelLists labels = pl::bf_pareto(g);
      auto coreset = pl::eps_coreset(pl::labels_to_pareto_set(g, labels, v), eps);
      for (const auto& e : coreset.entries) sink.out() << entry_line(e) << '\n';
    } else {
      auto in = open_input(in_path);
      auto set = knapsack_pareto(pl::read_knapsack<double>(in), false);
      auto coreset = pl::eps_coreset(set, eps);
      for (const auto& e : coreset.entries) sink.out() << entry_line(e) << '\n';
    }
  });

  // gen
  int gen_n = 0, gen_k = 0;
  auto* gen = app.add_subcommand("gen", "generate fixture instances");
  gen->require_subcommand(1);
  auto* gen_exp = gen->add_subcommand("exponential", "p_i = w_i = 2^i knapsack instance");
  gen_exp->add_option("--n", gen_n, "item count")->required();
  gen_exp->add_option("--output", out_path, "write to file instead of stdout");
  gen_exp->callback([&]() {
    OutputSink sink(out_path);
    pl::write_knapsack(pl::gen_exponential(gen_n), sink.out());
  });
  auto* gen_nm = gen->add_subcommand("nonmonotone", "fixture whose Pareto levels shrink at a step");
  gen_nm->add_option("--output", out_path, "write to file instead of stdout");
  gen_nm->callback([&]() {
    OutputSink sink(out_path);
    pl::write_knapsack(pl::gen_nonmonotone(), sink.out());
  });
  auto* gen_ep = gen->add_subcommand("exp-paths", "graph with 2^k Pareto-optimal s-t paths");
  gen_ep->add_option("--k", gen_k, "stage count")->required();
  gen_ep->add_option("--output", out_path, "write to file instead of stdout");
  gen_ep->callback([&]() {
    OutputSink sink(out_path);
    pl::write_graph(pl::gen_exp_paths(gen_k), sink.out());
  });

  // experiment
  ExperimentArgs ex;
  auto* experiment = app.add_subcommand("experiment", "run a seeded perturbation experiment");
  experiment->add_option("--problem", ex.problem, "knapsack|shortest-path|points|explicit");
  experiment->add_option("--statistic", ex.statistic,
                         "pareto-count|label-sizes|winner-gap|lambda-check|maxima");
  experiment->add_option("--n", ex.n, "instance size");
  experiment->add_option("--phi", ex.phi, "perturbation parameter, >= 1");
  experiment->add_option("--trials", ex.trials, "trial count");
  experiment->add_option("--seed", ex.seed, "master seed")->envname("PARETOLAB_SEED");
  experiment->add_option("--adversary", ex.adversary, "uniform|equal|exponential profit profile");
  experiment->add_option("--model", ex.model, "noise model: uniform|triangular");
  experiment->add_option("--range", ex.range, "coefficient range: unit|symmetric");
  experiment->add_option("--explicit-size", ex.explicit_size,
                         "explicit set size (0 = full cube)");
  experiment->add_option("--threads", ex.threads, "parallel trial workers");
  experiment->add_option("--output", ex.output, "CSV output file (default stdout)");
  experiment->add_option("--plot", ex.plot, "companion (x,mean) CSV for plotting");
  experiment->add_option("--sweep-n", ex.sweep_n, "comma list of n values to sweep");
  experiment->add_option("--sweep-phi", ex.sweep_phi, "comma list of phi values to sweep");
  experiment->add_flag("--timing", ex.timing,
                       "emit real per-trial timing (breaks byte determinism)");
  experiment->callback([&]() { cmd_experiment(ex); });

  // lambda
  double t_value = 0.0;
  auto* lambda = app.add_subcommand("lambda", "winner/loser diagnostics at a weight threshold");
  lambda->add_option("input", in_path, "knapsack instance file")->required();
  lambda->add_option("--t", t_value, "weight threshold, >= 0")->required();
  lambda->add_option("--output", out_path, "write to file instead of stdout");
  lambda->callback([&]() {
    OutputSink sink(out_path);
    auto in = open_input(in_path);
    pl::LambdaResult lr = pl::compute_lambda(pl::read_knapsack<double>(in), t_value);
    sink.out() << "t " << pl::format_scalar(lr.t) << '\n';
    sink.out() << "winner " << entry_line(lr.winner) << '\n';
    if (lr.loser)
      sink.out() << "loser " << entry_line(*lr.loser) << '\n';
    else
      sink.out() << "loser -\n";
    sink.out() << "lambda " << pl::format_scalar(lr.lambda) << '\n';
    for (std::size_t i = 0; i < lr.per_index.size(); ++i)
      sink.out() << "lambda_" << i << ' ' << pl::format_scalar(lr.per_index[i]) << '\n';
  });

  // roundsolve
  auto* roundsolve = app.add_subcommand("roundsolve", "round-and-solve with optimality certificate");
  roundsolve->add_option("input", in_path, "knapsack instance file (profits in [0,1])")->required();
  roundsolve->add_option("--output", out_path, "write to file instead of stdout");
  roundsolve->callback([&]() {
    OutputSink sink(out_path);
    auto in = open_input(in_path);
    pl::RoundSolveResult r = pl::round_and_solve(pl::read_knapsack<double>(in));
    sink.out() << entry_line(r.solution) << " bits_used=" << r.bits_used
               << " certified=" << (r.certified ? 1 : 0)
               << " fallback=" << (r.fallback_used ? 1 : 0) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const pl::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pl::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const pl::ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pl::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
