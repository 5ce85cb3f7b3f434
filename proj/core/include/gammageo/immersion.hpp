// Copyright 2026 The gammageo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMMAGEO_IMMERSION_HPP_
#define GAMMAGEO_IMMERSION_HPP_

// Affine immersion of the gamma manifold in R^3 as the graph
// (mu, alpha) -> (mu, alpha, log Gamma(alpha) - alpha log mu), mu = alpha / beta,
// with constant transversal field (0, 0, 1). Exponential distributions form
// the curve alpha = 1.

#include <vector>

#include <Eigen/Core>

#include "gammageo/distributions.hpp"

namespace gammageo {

struct ImmersionPoint {
  double mu;
  double alpha;
  double z;
  Eigen::Vector3d as_r3() const { return {mu, alpha, z}; }
};

struct TransversalField {
  Eigen::Vector3d xi{0.0, 0.0, 1.0};
};

struct TubeSpec {
  double radius = 0.2;
  // Range of the curve parameter searched for the nearest curve point.
  double mu_lo = 1e-3;
  double mu_hi = 1e3;
  void validate() const;  // radius > 0, 0 < mu_lo < mu_hi
};

ImmersionPoint immerse_gamma(double mu, double alpha);
ImmersionPoint exponential_curve(double mu);

struct CurveDistance {
  double distance;
  double mu_star;
  // The minimizer sits on an end of the search range.
  bool boundary_minimum;
};

// Euclidean distance from p to {(mu, 1, -log mu) : mu in [mu_lo, mu_hi]}.
// Log-spaced scan, then bisection on the derivative (golden section when the
// bracket has no sign change); mu_star to ~1e-12 relative.
CurveDistance distance_to_exponential_curve(const Eigen::Vector3d& p, double mu_lo,
                                            double mu_hi);

bool tube_contains(double mu, double alpha, const TubeSpec& tube);

struct TubeInterval {
  double delta;  // [1 - delta, 1 + delta] in alpha is inside the tube
  bool certified;
};

// Largest delta, found by bisection, such that every sampled point of
// [mu_lo, mu_hi] x [1 - delta, 1 + delta] lies inside the tube.
TubeInterval certify_tube_interval(const TubeSpec& tube, double mu_lo, double mu_hi,
                                   int mu_samples = 9, int alpha_samples = 33);

struct SurfaceRow {
  double mu;
  double alpha;
  double beta;  // alpha / mu, the (alpha, beta) chart image
  double z;
};

// Row-major over mu_grid (outer) and alpha_grid (inner).
std::vector<SurfaceRow> immersion_surface_grid(const std::vector<double>& mu_grid,
                                               const std::vector<double>& alpha_grid);

// Parameters of the log-gamma density of N = exp(-X), X ~ gamma(alpha, beta).
LogGammaParams loggamma_isometry(const GammaParams& p);

// Fisher metric of the gamma family in (mu, alpha). Not diagonal:
// g = [[alpha / mu^2, -1 / mu], [-1 / mu, psi'(alpha)]].
Eigen::Matrix2d gamma_metric_2d(double mu, double alpha);

}  // namespace gammageo

#endif  // GAMMAGEO_IMMERSION_HPP_
