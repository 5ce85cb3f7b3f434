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

#ifndef GAMMAGEO_QUADRATURE_HPP_
#define GAMMAGEO_QUADRATURE_HPP_

// Adaptive Gauss-Kronrod (7/15) quadrature for vector-valued integrands,
// plus the endpoint and tail handling the Fisher oracle needs.

#include <functional>

#include <Eigen/Core>

namespace gammageo {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_subdivisions = 4000;
  // Probability mass allowed beyond the truncation point of an infinite
  // support.
  double tail_cutoff_mass = 1e-15;

  // Throws DomainError unless tolerances are positive and
  // tail_cutoff_mass <= 1e-10.
  void validate() const;
};

struct QuadratureResult {
  Eigen::VectorXd value;
  double error = 0.0;  // max-norm error estimate
  int subdivisions = 0;
};

using VectorIntegrand = std::function<Eigen::VectorXd(double)>;

// Integrates f over the finite interval [a, b]. Throws ConvergenceError when
// max_subdivisions is exhausted before the tolerance is met.
QuadratureResult integrate(const VectorIntegrand& f, int dim, double a, double b,
                           const QuadratureConfig& cfg);

double integrate_scalar(const std::function<double(double)>& f, double a, double b,
                        const QuadratureConfig& cfg, double* error = nullptr);

// Integrand behaves like (x - a)^lo_power near a and (b - x)^hi_power near b,
// powers > -1. Each half of [a, b] is integrated after the substitution
// x = a + h t^m (resp. b - h t^m) with m chosen so that the transformed
// integrand vanishes at the endpoint.
QuadratureResult integrate_endpoint_powers(const VectorIntegrand& f, int dim, double a,
                                           double b, double lo_power, double hi_power,
                                           const QuadratureConfig& cfg);

// Exponent m of the substitution x = a + h t^m for endpoint power p.
int endpoint_substitution_exponent(double power);

// Smallest T with P(X > T) <= mass for X ~ Gamma(shape, rate).
double gamma_upper_cutoff(double shape, double rate, double mass);

}  // namespace gammageo

#endif  // GAMMAGEO_QUADRATURE_HPP_
