#pragma once

// Seeded Monte-Carlo harness over φ-perturbed instances. The adversarial
// part of an experiment (profit profile, interval anchors, graph topology,
// explicit solution set) is fixed once from the master seed; each trial
// redraws only the perturbed coefficients from its own derived seed, so
// results are independent of trial execution order and thread count.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "paretolab/graph.hpp"
#include "paretolab/knapsack.hpp"
#include "paretolab/perturb.hpp"

namespace paretolab {

enum class Problem { Knapsack, ShortestPath, Points2D, ExplicitSet };

enum class Statistic { ParetoCount, LabelSizes, WinnerGap, LambdaCheck, MaximaCount };

/// Adversarial profit profiles for knapsack experiments.
enum class AdversaryProfile { UniformProfits, EqualProfits, ExponentialProfits };

struct ExperimentSpec {
  Problem problem = Problem::Knapsack;
  Statistic statistic = Statistic::ParetoCount;
  int n = 10;
  double phi = 1.0;
  int trials = 100;
  std::uint64_t master_seed = 0;
  AdversaryProfile adversary = AdversaryProfile::UniformProfits;
  DensityKind noise = DensityKind::Uniform;
  ValueRange range = ValueRange::Unit;
  int explicit_size = 0;  // ExplicitSet: 0 selects the full cube
  int threads = 1;

  void validate() const;
};

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double phi = 1.0;
  double value = 0.0;
  std::uint64_t elapsed_ns = 0;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::string statistic_name;
  std::vector<TrialRow> rows;
  double mean = 0.0;
  double variance = 0.0;  // sample variance, 0 for a single trial
  double max_value = 0.0;
  /// Analytic reference the statistic is compared against (n^2*phi+1 for
  /// Pareto counts, the harmonic number for maxima); NaN when no pinned
  /// constant exists.
  double bound_reference = 0.0;
};

std::string statistic_name(Statistic s);

/// Perturbation model with adversarial anchors derived from the experiment's
/// master seed (uniform interval starts, or triangle centers).
PerturbationModel model_for(const ExperimentSpec& spec);

ExperimentReport run_experiment(const ExperimentSpec& spec, const PerturbationModel& model);

/// Convenience overload using model_for(spec).
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Deterministic per-trial knapsack instance: adversarial profits, weights
/// freshly perturbed from the trial's derived seed.
KnapsackInstance<double> sample_knapsack_instance(const ExperimentSpec& spec,
                                                  const PerturbationModel& model, int trial);

/// CSV schema: header `trial,seed,n,phi,statistic,value,elapsed_ns`, one row
/// per trial, then `#agg`-prefixed footer lines (mean, variance, max,
/// bound). elapsed_ns prints as 0 unless include_timing is set: wall-clock
/// output would break byte-for-byte reproducibility.
void write_csv(const ExperimentReport& report, std::ostream& out, bool include_timing = false);

/// Harmonic number H_n: the exact expected count of maxima among n points
/// with i.i.d. continuous coordinates.
double harmonic(int n);

}  // namespace paretolab
