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

#ifndef GAMMAGEO_FISHER_ORACLE_HPP_
#define GAMMAGEO_FISHER_ORACLE_HPP_

// Numerical Fisher information g_ij = E[-d^2 log f / d theta^i d theta^j]
// by adaptive quadrature over the support. This is the ground truth that
// printed metrics are checked against, so nothing here reads closed_forms.

#include <functional>
#include <string>

#include <Eigen/Core>

#include "gammageo/quadrature.hpp"

namespace gammageo {

struct FisherMatrix {
  Eigen::MatrixXd entries;
  Eigen::VectorXd params;
  double estimated_error = 0.0;
  int dim() const { return static_cast<int>(entries.rows()); }
};

// Support (lo, hi) of a one-dimensional density after tail truncation. The
// weighted integrand behaves like (x - lo)^lo_power and (hi - x)^hi_power
// at the ends.
struct UnivariateSupport {
  double lo;
  double hi;
  double lo_power;
  double hi_power;
};

// A family evaluated at one fixed parameter point.
struct UnivariateKernel {
  std::function<double(double)> log_density;
  std::function<Eigen::MatrixXd(double)> param_hessian;
  std::function<Eigen::VectorXd(double)> score;
  UnivariateSupport support;
};

struct UnivariateFamily {
  std::string name;
  int dim = 0;
  std::function<bool(const Eigen::VectorXd&)> in_domain;
  // log f(x; theta), unbound; used for finite-difference cross-checks.
  std::function<double(double, const Eigen::VectorXd&)> log_density;
  std::function<UnivariateKernel(const Eigen::VectorXd&, double tail_mass)> bind;
};

// Bivariate families on a wedge, integrated in coordinates (u, w) in which
// the density factorizes into independent gamma parts: for McKay u = x,
// w = y - x; for the located form u = x - gamma1, w = y - x - (gamma2 - gamma1).
struct WedgeSupport {
  double u_hi;
  double w_hi;
  double u_power;  // density ~ u^u_power near u = 0
  double w_power;
  // Hessian and score entries may add a factor u^-shift (resp. w^-shift).
  double derivative_shift = 0.0;
};

// Evaluated in (u, w): recovering w as y - x cancels for small w, and the
// located family's Hessian carries 1/w^2.
struct WedgeKernel {
  std::function<Eigen::Vector2d(double u, double w)> to_xy;
  std::function<double(double u, double w)> log_density;
  std::function<Eigen::MatrixXd(double u, double w)> param_hessian;
  std::function<Eigen::VectorXd(double u, double w)> score;
  WedgeSupport support;
};

struct WedgeFamily {
  std::string name;
  int dim = 0;
  std::function<bool(const Eigen::VectorXd&)> in_domain;
  std::function<double(double, double, const Eigen::VectorXd&)> log_density;
  std::function<WedgeKernel(const Eigen::VectorXd&, double tail_mass)> bind;
};

// Gamma in (alpha, beta), beta the mean.
UnivariateFamily gamma_family();
// Gamma in the (mu = alpha / beta, alpha) chart of the affine immersion.
UnivariateFamily gamma_natural_family();
// Log-gamma on N in (0, 1), coordinates (alpha, beta).
UnivariateFamily loggamma_family();
// McKay in (alpha1, sigma12, alpha2).
WedgeFamily mckay_family();
// Located bivariate gamma in (alpha1, alpha2, sigma12, gamma1, gamma2);
// in_domain requires alpha1, alpha2 > 2 so the location entries converge.
WedgeFamily five_gamma_family();

// Central-difference Hessian of theta -> log_density(theta). Symmetric by
// construction. Throws StepUnderflowError if theta +- step leaves in_domain.
Eigen::MatrixXd log_density_param_hessian(
    const std::function<double(const Eigen::VectorXd&)>& log_density,
    const Eigen::VectorXd& params, double step,
    const std::function<bool(const Eigen::VectorXd&)>& in_domain);

// Expected negative Hessian by quadrature over the (truncated) support.
FisherMatrix fisher_univariate(const UnivariateFamily& family,
                               const Eigen::VectorXd& params,
                               const QuadratureConfig& cfg = {});
// E[score score^T]; secondary cross-check of the Hessian form.
FisherMatrix fisher_univariate_score_form(const UnivariateFamily& family,
                                          const Eigen::VectorXd& params,
                                          const QuadratureConfig& cfg = {});

FisherMatrix fisher_bivariate_wedge(const WedgeFamily& family,
                                    const Eigen::VectorXd& params,
                                    const QuadratureConfig& cfg = {});
FisherMatrix fisher_bivariate_wedge_score_form(const WedgeFamily& family,
                                               const Eigen::VectorXd& params,
                                               const QuadratureConfig& cfg = {});

// E[g(u, w)] over the wedge by tensor-product quadrature in (u, w);
// endpoint powers of g are assumed to be >= 0.
double wedge_expectation(const WedgeFamily& family, const Eigen::VectorXd& params,
                         const std::function<double(double u, double w)>& g,
                         const QuadratureConfig& cfg = {});

}  // namespace gammageo

#endif  // GAMMAGEO_FISHER_ORACLE_HPP_
