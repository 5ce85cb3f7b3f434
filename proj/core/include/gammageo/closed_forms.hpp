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

#ifndef GAMMAGEO_CLOSED_FORMS_HPP_
#define GAMMAGEO_CLOSED_FORMS_HPP_

// Published closed-form expressions for the McKay manifold, its three
// coordinate slices and the located 5-manifold, transcribed term for term.
// Two printed expressions disagree with the curvature pipeline; they are kept
// as printed and the corrected versions live in the *_corrected functions.
//
// Riemann components follow the reported sign convention of geometry_core.
// Indices in ClosedFormEntry are zero-based.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gammageo/distributions.hpp"
#include "gammageo/geometry_core.hpp"
#include "gammageo/metric_fields.hpp"

namespace gammageo {

Eigen::Matrix3d mckay_metric(const McKayParams& p);
// Throws SingularMatrixError when the common denominator
// D = psi'(a2) + psi'(a1) (1 - (a1 + a2) psi'(a2)) is negligible.
Eigen::Matrix3d mckay_metric_inverse(const McKayParams& p);
// D above.
double mckay_denominator(const McKayParams& p);

struct McKayRiemann {
  double r1212, r1213, r1223, r1313, r1323, r2323;
};
McKayRiemann mckay_riemann_components(const McKayParams& p);
Eigen::Matrix3d mckay_ricci(const McKayParams& p);
double mckay_scalar(const McKayParams& p);
// Scalar curvature as a function of the two shapes only.
double mckay_scalar(double alpha1, double alpha2);

struct McKaySectional {
  double s12, s13, s23;
};
McKaySectional mckay_sectional(const McKayParams& p);
Eigen::Vector3d mckay_mean(const McKayParams& p);

// Corrected forms of the two expressions that fail the pipeline check.
double mckay_r1323_corrected(const McKayParams& p);
double m3_ricci11_corrected(double alpha1, double alpha2);

// Coordinates (alpha1, alpha2, sigma12, gamma1, gamma2); throws DomainError
// unless alpha1, alpha2 > 2.
Eigen::Matrix<double, 5, 5> five_manifold_metric(const FiveGammaParams& p);

struct ClosedFormEntry {
  std::string object;  // metric, inverse, christoffel, riemann, ricci, scalar, sectional, mean
  std::vector<int> index;
  double value = 0.0;
  std::string provenance;
};

struct ClosedFormReport {
  std::string model;
  Eigen::VectorXd point;
  Eigen::MatrixXd metric;
  Eigen::MatrixXd inverse;
  std::vector<ClosedFormEntry> entries;
  // Recurring denominator of the printed curvature expressions.
  double denominator = 0.0;
  // |denominator| < 1e-12 times the scale of its terms.
  bool near_singular = false;

  const ClosedFormEntry* find(const std::string& object, const std::vector<int>& index) const;
};

// All printed objects of the McKay manifold at p.
ClosedFormReport mckay_report(const McKayParams& p);
// All printed objects of a slice: metric, inverse, six Christoffels,
// R_1212, Ricci and scalar. coords are in the slice chart (see SubmanifoldId).
ClosedFormReport submanifold_geometry(SubmanifoldId id, const Eigen::Vector2d& coords);

// Free shape parameter of M1 (alpha2) or M2 (alpha1) for correlation rho.
// Throws DomainError for M3 or rho outside (0, 1).
double rho_maps(SubmanifoldId id, double rho);

// (rho, scalar) along M1 or M2 through rho_maps and the printed scalar.
std::vector<std::pair<double, double>> scalar_vs_rho_curve(SubmanifoldId id,
                                                           const std::vector<double>& rho_grid);

}  // namespace gammageo

#endif  // GAMMAGEO_CLOSED_FORMS_HPP_
