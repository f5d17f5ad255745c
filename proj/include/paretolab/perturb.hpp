#pragma once

// φ-perturbed coefficients: random variables whose density is bounded above
// by φ. The adversary picks the anchors (interval starts or density centers);
// the noise is drawn per coordinate, independently.

#include <functional>
#include <vector>

#include "paretolab/rng.hpp"

namespace paretolab {

enum class NoiseKind { UniformInterval, BoundedDensity };

/// Built-in densities for the BoundedDensity kind. Custom supplies an
/// inverse CDF; keeping its density below φ is the caller's obligation.
enum class DensityKind { Uniform, Triangular, Custom };

enum class ValueRange { Unit, Symmetric };  // [0,1] or [-1,1]

struct PerturbationModel {
  double phi = 1.0;
  NoiseKind kind = NoiseKind::UniformInterval;
  DensityKind density = DensityKind::Uniform;
  ValueRange range = ValueRange::Unit;
  /// Per-coordinate interval starts (uniform) or symmetric-triangle centers;
  /// empty means the leftmost admissible anchor for every coordinate.
  std::vector<double> anchors;
  std::function<double(int coordinate, double u)> inverse_cdf;  // DensityKind::Custom

  double lo() const { return range == ValueRange::Unit ? 0.0 : -1.0; }
  double hi() const { return 1.0; }

  /// Checks φ >= 1 and that every coordinate's support stays inside the
  /// configured range. `n` is the coordinate count.
  void validate(int n) const;

  /// One draw for coordinate i. Deterministic given the rng state.
  double sample(int i, Rng& rng) const;

  static PerturbationModel uniform(double phi, std::vector<double> starts = {},
                                   ValueRange range = ValueRange::Unit);
  static PerturbationModel triangular(double phi, std::vector<double> centers = {},
                                      ValueRange range = ValueRange::Unit);
};

}  // namespace paretolab
