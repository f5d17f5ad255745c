#include "paretolab/perturb.hpp"

#include <cmath>
#include <string>

#include "paretolab/errors.hpp"

namespace paretolab {

void PerturbationModel::validate(int n) const {
  if (!(phi >= 1.0)) throw ContractError("phi must be >= 1");
  if (!anchors.empty() && static_cast<int>(anchors.size()) != n)
    throw ContractError("anchor count must match coordinate count");
  const double width = 1.0 / phi;
  auto anchor = [&](int i) {
    return anchors.empty() ? 0.0 : anchors[static_cast<std::size_t>(i)];
  };
  if (kind == NoiseKind::UniformInterval ||
      (kind == NoiseKind::BoundedDensity && density == DensityKind::Uniform)) {
    for (int i = 0; i < n; ++i) {
      double a = anchors.empty() ? lo() : anchor(i);
      if (a < lo() || a + width > hi())
        throw ContractError("interval [" + std::to_string(a) + ", " + std::to_string(a + width) +
                            "] escapes the value range");
    }
  } else if (density == DensityKind::Triangular) {
    if (hi() - lo() < 2.0 * width)
      throw ContractError("triangular density of base 2/phi does not fit the value range");
    for (int i = 0; i < n; ++i) {
      double c = anchors.empty() ? lo() + width : anchor(i);
      if (c - width < lo() || c + width > hi())
        throw ContractError("triangular support escapes the value range");
    }
  } else if (density == DensityKind::Custom) {
    if (!inverse_cdf) throw ContractError("custom density needs an inverse CDF");
  }
}

double PerturbationModel::sample(int i, Rng& rng) const {
  const double u = rng.next_unit();
  const double width = 1.0 / phi;
  if (kind == NoiseKind::UniformInterval ||
      (kind == NoiseKind::BoundedDensity && density == DensityKind::Uniform)) {
    double a = anchors.empty() ? lo() : anchors[static_cast<std::size_t>(i)];
    return a + u * width;
  }
  if (density == DensityKind::Triangular) {
    double c = anchors.empty() ? lo() + width : anchors[static_cast<std::size_t>(i)];
    if (u < 0.5) return c + width * (std::sqrt(2.0 * u) - 1.0);
    return c + width * (1.0 - std::sqrt(2.0 * (1.0 - u)));
  }
  return inverse_cdf(i, u);
}

PerturbationModel PerturbationModel::uniform(double phi, std::vector<double> starts,
                                             ValueRange range) {
  PerturbationModel m;
  m.phi = phi;
  m.kind = NoiseKind::UniformInterval;
  m.range = range;
  m.anchors = std::move(starts);
  return m;
}

PerturbationModel PerturbationModel::triangular(double phi, std::vector<double> centers,
                                                ValueRange range) {
  PerturbationModel m;
  m.phi = phi;
  m.kind = NoiseKind::BoundedDensity;
  m.density = DensityKind::Triangular;
  m.range = range;
  m.anchors = std::move(centers);
  return m;
}

}  // namespace paretolab
