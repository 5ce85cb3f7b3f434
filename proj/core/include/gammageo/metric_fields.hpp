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

#ifndef GAMMAGEO_METRIC_FIELDS_HPP_
#define GAMMAGEO_METRIC_FIELDS_HPP_

// Metric fields fed to the curvature pipeline. Metrics here are derived
// independently of closed_forms (expected Hessians of the log-densities) and
// carry analytic first derivatives.

#include "gammageo/geometry_core.hpp"

namespace gammageo {

// The three 2-D coordinate slices of the McKay manifold.
//   M1: alpha1 = 1, chart (sigma12, alpha2)
//   M2: alpha2 = 1, chart (alpha1, sigma12)
//   M3: sigma12 = 1, chart (alpha1, alpha2)
enum class SubmanifoldId { kM1, kM2, kM3 };

const char* to_string(SubmanifoldId id);
// Index of the fixed McKay coordinate in (alpha1, sigma12, alpha2).
int fixed_coordinate(SubmanifoldId id);

// McKay manifold in (alpha1, sigma12, alpha2).
MetricField mckay_field();
MetricField submanifold_field(SubmanifoldId id);
// Located bivariate gamma in (alpha1, alpha2, sigma12, gamma1, gamma2), alpha > 2.
MetricField five_gamma_field();
// Gamma manifold in (alpha, beta) and in (mu = alpha / beta, alpha).
MetricField gamma_field();
MetricField gamma_natural_field();

// Restriction of a field to the slice x[fixed_index] = fixed_value.
MetricField slice_field(const MetricField& full, int fixed_index, double fixed_value,
                        std::string name);

// Test fixtures.
MetricField euclidean_field(int dim);
// Unit 2-sphere in (theta, phi), 0 < theta < pi.
MetricField unit_sphere_field();
// Poincare half plane (x, y), y > 0; curvature -1.
MetricField hyperbolic_field();

}  // namespace gammageo

#endif  // GAMMAGEO_METRIC_FIELDS_HPP_
