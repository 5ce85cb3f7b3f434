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

#ifndef GAMMAGEO_GEODESY_HPP_
#define GAMMAGEO_GEODESY_HPP_

// Geodesics and Riemannian distance on a MetricField. Distances are lengths
// of the connecting geodesic found; global minimality is not checked.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gammageo/errors.hpp"
#include "gammageo/geometry_core.hpp"

namespace gammageo {

// Integration left the chart; carries the last state inside it.
class DomainExitError : public DomainError {
 public:
  DomainExitError(const std::string& what, double t, Eigen::VectorXd point,
                  Eigen::VectorXd velocity)
      : DomainError(what), t_(t), point_(std::move(point)), velocity_(std::move(velocity)) {}
  double t() const noexcept { return t_; }
  const Eigen::VectorXd& last_point() const noexcept { return point_; }
  const Eigen::VectorXd& last_velocity() const noexcept { return velocity_; }

 private:
  double t_;
  Eigen::VectorXd point_;
  Eigen::VectorXd velocity_;
};

struct GeodesicPath {
  std::vector<Eigen::VectorXd> points;
  std::vector<Eigen::VectorXd> velocities;
  int step_count = 0;
  double energy = 0.0;  // g(v, v) at the start
};

// Fixed-step RK4 for x'' + G^k_ij x'^i x'^j = 0 on [0, t_end].
// A metric too ill-conditioned to invert counts as leaving the chart.
// Throws DomainError if steps < 16 and DomainExitError on leaving the chart.
GeodesicPath integrate_geodesic(const MetricField& field, const Eigen::VectorXd& x0,
                                const Eigen::VectorXd& v0, double t_end, int steps,
                                const DerivativeConfig& cfg = {});

// g(v, v) at x.
double speed_squared(const MetricField& field, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& v);

struct GeodesicConfig {
  int steps = 200;
  double residual_tol = 1e-9;  // endpoint miss, chart max-norm
  int max_newton = 40;
  // Fallback: interior points of the polyline and descent budget.
  int polyline_points = 64;
  int max_sweeps = 4000;
  DerivativeConfig derivatives;
};

struct ShootingResult {
  Eigen::VectorXd initial_velocity;
  double distance = 0.0;
  bool converged = false;
  double residual = 0.0;
  // "shooting" or "polyline".
  std::string method;
  std::vector<Eigen::VectorXd> polyline;
};

// Shooting by damped Newton with a finite-difference Jacobian from the chart
// straight line, with homotopy on the target when a full step fails; then
// polyline energy minimization by coordinate descent.
ShootingResult geodesic_distance(const MetricField& field, const Eigen::VectorXd& p,
                                 const Eigen::VectorXd& q, const GeodesicConfig& cfg = {});

struct SliceDistance {
  double distance = 0.0;
  Eigen::VectorXd foot;
  bool boundary_minimum = false;
  bool converged = false;
};

// min over the slice x[fixed_index] = fixed_value of geodesic_distance(p, .),
// searching the free coordinates inside search_box (one interval per free
// coordinate, in order). Grid of grid_points^(dim-1), then compass search.
SliceDistance distance_to_submanifold(const MetricField& field, const Eigen::VectorXd& p,
                                      int fixed_index, double fixed_value,
                                      const std::vector<std::pair<double, double>>& search_box,
                                      int grid_points = 9, const GeodesicConfig& cfg = {});

}  // namespace gammageo

#endif  // GAMMAGEO_GEODESY_HPP_
