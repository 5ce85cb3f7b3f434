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

#ifndef GAMMAGEO_GEOMETRY_CORE_HPP_
#define GAMMAGEO_GEOMETRY_CORE_HPP_

// Curvature of a Riemannian metric given as a field g(x). Connection and
// curvature follow from g, its first derivatives (analytic when the field
// supplies them) and second derivatives by Richardson-extrapolated central
// differences of the first.
//
// Sign convention. R^l_kij = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk
// - G^l_jm G^m_ik, lowered on the first index, is the standard tensor. The
// lowered tensor reported by riemann_lowered() is its negative, so that
// R_ijkl matches the printed closed forms. Ricci, scalar, sectional and mean
// curvature are all standard: the unit sphere has sectional curvature +1.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace gammageo {

class Tensor3 {
 public:
  explicit Tensor3(int n = 0) : n_(n), data_(static_cast<size_t>(n) * n * n, 0.0) {}
  int dim() const noexcept { return n_; }
  double& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
  double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

 private:
  size_t index(int a, int b, int c) const {
    return (static_cast<size_t>(a) * n_ + b) * n_ + c;
  }
  int n_;
  std::vector<double> data_;
};

class Tensor4 {
 public:
  explicit Tensor4(int n = 0) : n_(n), data_(static_cast<size_t>(n) * n * n * n, 0.0) {}
  int dim() const noexcept { return n_; }
  double& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }

 private:
  size_t index(int a, int b, int c, int d) const {
    return ((static_cast<size_t>(a) * n_ + b) * n_ + c) * n_ + d;
  }
  int n_;
  std::vector<double> data_;
};

struct MetricField {
  std::string name;
  int dim = 0;
  std::function<bool(const Eigen::VectorXd&)> in_domain;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> metric;
  // Optional: element k is the matrix d g_ij / d x^k.
  std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> first_derivatives;
};

struct DerivativeConfig {
  // Central-difference step relative to max(|x_k|, floor).
  double relative_step = 1e-3;
  double step_floor = 1e-3;
  // Condition number above which the metric counts as singular.
  double max_condition = 1e13;
};

struct MetricDerivatives {
  Eigen::MatrixXd g;
  std::vector<Eigen::MatrixXd> dg;                // dg[k] = d_k g
  std::vector<std::vector<Eigen::MatrixXd>> d2g;  // d2g[k][m] = d_k d_m g
};

// Throws SingularMatrixError (carrying the 1-norm condition
// number) when g is numerically singular or not positive definite.
Eigen::MatrixXd invert_metric(const Eigen::MatrixXd& g, double max_condition = 1e13);

// Throws DomainError if x is outside the field's domain and
// StepUnderflowError if the difference stencil leaves it. With order 1, d2g
// is left empty.
MetricDerivatives metric_derivatives(const MetricField& field, const Eigen::VectorXd& x,
                                     const DerivativeConfig& cfg = {}, int order = 2);

// G^l_ij stored as (l, i, j).
Tensor3 christoffels(const MetricField& field, const Eigen::VectorXd& x,
                     const DerivativeConfig& cfg = {});
// Reported (sign-flipped) lowered Riemann tensor R_ijkl.
Tensor4 riemann_lowered(const MetricField& field, const Eigen::VectorXd& x,
                        const DerivativeConfig& cfg = {});
Eigen::MatrixXd ricci(const MetricField& field, const Eigen::VectorXd& x,
                      const DerivativeConfig& cfg = {});
double scalar_curvature(const MetricField& field, const Eigen::VectorXd& x,
                        const DerivativeConfig& cfg = {});
double sectional_curvature(const MetricField& field, const Eigen::VectorXd& x, int i,
                           int j, const DerivativeConfig& cfg = {});
// rho(l) = R_ll / ((n - 1) g_ll), n >= 2.
Eigen::VectorXd mean_curvature(const MetricField& field, const Eigen::VectorXd& x,
                               const DerivativeConfig& cfg = {});

struct GeometryReport {
  Eigen::VectorXd point;
  Eigen::MatrixXd metric;
  Eigen::MatrixXd inverse;
  Tensor3 christoffel;
  Tensor4 riemann;  // reported sign convention
  Eigen::MatrixXd ricci;
  double scalar = 0.0;
  // sectional(i, j) for i != j, zero on the diagonal.
  Eigen::MatrixXd sectional;
  Eigen::VectorXd mean;
};

GeometryReport full_report(const MetricField& field, const Eigen::VectorXd& x,
                           const DerivativeConfig& cfg = {});

// Curvature quantities from an already computed reported Riemann tensor.
Eigen::MatrixXd ricci_from_riemann(const Tensor4& riemann, const Eigen::MatrixXd& ginv);
Eigen::MatrixXd sectional_from_riemann(const Tensor4& riemann, const Eigen::MatrixXd& g);
Eigen::VectorXd mean_from_ricci(const Eigen::MatrixXd& ricci, const Eigen::MatrixXd& g);

}  // namespace gammageo

#endif  // GAMMAGEO_GEOMETRY_CORE_HPP_
