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

#include "gammageo/geometry_core.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "gammageo/errors.hpp"

namespace gammageo {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using MatrixList = std::vector<MatrixXd>;

MatrixXd richardson(const std::function<MatrixXd(const VectorXd&)>& f, const VectorXd& x,
                    int k, double h,
                    const std::function<bool(const VectorXd&)>& in_domain) {
  auto at = [&](double t) -> MatrixXd {
    VectorXd y = x;
    y[k] += t;
    if (!in_domain(y)) {
      throw StepUnderflowError("difference stencil leaves the domain");
    }
    return f(y);
  };
  auto central = [&](double t) -> MatrixXd { return (at(t) - at(-t)) / (2.0 * t); };
  const MatrixXd coarse = central(h);
  const MatrixXd fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

// Richardson for a list of matrices, elementwise.
MatrixList richardson_list(const std::function<MatrixList(const VectorXd&)>& f,
                           const VectorXd& x, int k, double h,
                           const std::function<bool(const VectorXd&)>& in_domain) {
  auto at = [&](double t) {
    VectorXd y = x;
    y[k] += t;
    if (!in_domain(y)) {
      throw StepUnderflowError("difference stencil leaves the domain");
    }
    return f(y);
  };
  MatrixList p1 = at(h), m1 = at(-h), p2 = at(0.5 * h), m2 = at(-0.5 * h);
  MatrixList out(p1.size());
  for (size_t i = 0; i < p1.size(); ++i) {
    const MatrixXd coarse = (p1[i] - m1[i]) / (2.0 * h);
    const MatrixXd fine = (p2[i] - m2[i]) / h;
    out[i] = (4.0 * fine - coarse) / 3.0;
  }
  return out;
}

double step_for(double xk, const DerivativeConfig& cfg) {
  return cfg.relative_step * std::max(std::abs(xk), cfg.step_floor);
}

struct Connection {
  MatrixXd g;
  MatrixXd ginv;
  Tensor3 gamma;   // G^l_ij as (l, i, j)
  Tensor4 dgamma;  // d_m G^l_ij as (m, l, i, j)
};

Connection connection(const MetricField& field, const VectorXd& x,
                      const DerivativeConfig& cfg, bool with_derivative = true) {
  const MetricDerivatives d = metric_derivatives(field, x, cfg, with_derivative ? 2 : 1);
  const int n = field.dim;
  Connection c{d.g, invert_metric(d.g, cfg.max_condition), Tensor3(n), Tensor4(n)};
  // First kind G_kij = (d_i g_jk + d_j g_ik - d_k g_ij) / 2.
  Tensor3 first(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        first(k, i, j) = 0.5 * (d.dg[i](j, k) + d.dg[j](i, k) - d.dg[k](i, j));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += c.ginv(l, k) * first(k, i, j);
        c.gamma(l, i, j) = s;
      }
  if (!with_derivative) return c;
  for (int m = 0; m < n; ++m) {
    const MatrixXd dginv = -c.ginv * d.dg[m] * c.ginv;
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int k = 0; k < n; ++k) {
            const double dfirst =
                0.5 * (d.d2g[m][i](j, k) + d.d2g[m][j](i, k) - d.d2g[m][k](i, j));
            s += dginv(l, k) * first(k, i, j) + c.ginv(l, k) * dfirst;
          }
          c.dgamma(m, l, i, j) = s;
        }
  }
  return c;
}

Tensor4 reported_riemann(const Connection& c) {
  const int n = static_cast<int>(c.g.rows());
  // Mixed standard tensor R^l_kij.
  Tensor4 mixed(n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = c.dgamma(i, l, j, k) - c.dgamma(j, l, i, k);
          for (int m = 0; m < n; ++m) {
            s += c.gamma(l, i, m) * c.gamma(m, j, k) - c.gamma(l, j, m) * c.gamma(m, i, k);
          }
          mixed(l, k, i, j) = s;
        }
  Tensor4 out(n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) s += c.g(p, l) * mixed(l, k, i, j);
          out(p, k, i, j) = -s;
        }
  return out;
}

}  // namespace

MatrixXd invert_metric(const MatrixXd& g, double max_condition) {
  if (g.rows() != g.cols() || g.rows() == 0) {
    throw DomainError("invert_metric: metric must be a non-empty square matrix");
  }
  if (!g.allFinite()) {
    throw SingularMatrixError("invert_metric: non-finite metric entries",
                              std::numeric_limits<double>::infinity());
  }
  const MatrixXd sym = 0.5 * (g + g.transpose());
  const Eigen::LLT<MatrixXd> llt(sym);
  double cond = std::numeric_limits<double>::infinity();
  MatrixXd inv;
  if (llt.info() == Eigen::Success) {
    inv = llt.solve(MatrixXd::Identity(g.rows(), g.cols()));
    // Exact 1-norm condition number; within a factor dim of the 2-norm value.
    auto norm1 = [](const MatrixXd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); };
    if (inv.allFinite()) cond = norm1(sym) * norm1(inv);
  }
  if (!(cond <= max_condition)) {
    throw SingularMatrixError("invert_metric: metric is singular or not positive definite",
                              cond);
  }
  return 0.5 * (inv + inv.transpose());
}

MetricDerivatives metric_derivatives(const MetricField& field, const VectorXd& x,
                                     const DerivativeConfig& cfg, int order) {
  if (x.size() != field.dim || !field.in_domain(x)) {
    throw DomainError(field.name + ": point outside the domain");
  }
  const int n = field.dim;
  std::function<MatrixList(const VectorXd&)> first = field.first_derivatives;
  if (!first) {
    first = [&field, &cfg, n](const VectorXd& y) {
      MatrixList out(n);
      for (int k = 0; k < n; ++k) {
        out[k] = richardson(field.metric, y, k, step_for(y[k], cfg), field.in_domain);
      }
      return out;
    };
  }
  MetricDerivatives d;
  d.g = field.metric(x);
  d.dg = first(x);
  if (order < 2) return d;
  d.d2g.resize(n);
  for (int k = 0; k < n; ++k) {
    // d2g[k][m] = d_k (d_m g); symmetrized below.
    d.d2g[k] = richardson_list(first, x, k, step_for(x[k], cfg), field.in_domain);
  }
  for (int k = 0; k < n; ++k)
    for (int m = k + 1; m < n; ++m) {
      const MatrixXd avg = 0.5 * (d.d2g[k][m] + d.d2g[m][k]);
      d.d2g[k][m] = avg;
      d.d2g[m][k] = avg;
    }
  return d;
}

Tensor3 christoffels(const MetricField& field, const VectorXd& x,
                     const DerivativeConfig& cfg) {
  return connection(field, x, cfg, false).gamma;
}

Tensor4 riemann_lowered(const MetricField& field, const VectorXd& x,
                        const DerivativeConfig& cfg) {
  return reported_riemann(connection(field, x, cfg));
}

MatrixXd ricci_from_riemann(const Tensor4& r, const MatrixXd& ginv) {
  const int n = r.dim();
  MatrixXd out = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s -= ginv(k, l) * r(l, i, k, j);
      out(i, j) = s;
    }
  return 0.5 * (out + out.transpose());
}

MatrixXd sectional_from_riemann(const Tensor4& r, const MatrixXd& g) {
  const int n = r.dim();
  MatrixXd out = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out(i, j) = -r(i, j, i, j) / (g(i, i) * g(j, j) - g(i, j) * g(i, j));
    }
  return out;
}

VectorXd mean_from_ricci(const MatrixXd& ric, const MatrixXd& g) {
  const int n = static_cast<int>(g.rows());
  if (n < 2) throw DomainError("mean curvature needs dimension >= 2");
  VectorXd out(n);
  for (int l = 0; l < n; ++l) out[l] = ric(l, l) / ((n - 1) * g(l, l));
  return out;
}

MatrixXd ricci(const MetricField& field, const VectorXd& x, const DerivativeConfig& cfg) {
  const Connection c = connection(field, x, cfg);
  return ricci_from_riemann(reported_riemann(c), c.ginv);
}

double scalar_curvature(const MetricField& field, const VectorXd& x,
                        const DerivativeConfig& cfg) {
  const Connection c = connection(field, x, cfg);
  return (c.ginv.cwiseProduct(ricci_from_riemann(reported_riemann(c), c.ginv))).sum();
}

double sectional_curvature(const MetricField& field, const VectorXd& x, int i, int j,
                           const DerivativeConfig& cfg) {
  if (i == j || i < 0 || j < 0 || i >= field.dim || j >= field.dim) {
    throw DomainError("sectional_curvature: need distinct in-range indices");
  }
  const Connection c = connection(field, x, cfg);
  return sectional_from_riemann(reported_riemann(c), c.g)(i, j);
}

VectorXd mean_curvature(const MetricField& field, const VectorXd& x,
                        const DerivativeConfig& cfg) {
  const Connection c = connection(field, x, cfg);
  return mean_from_ricci(ricci_from_riemann(reported_riemann(c), c.ginv), c.g);
}

GeometryReport full_report(const MetricField& field, const VectorXd& x,
                           const DerivativeConfig& cfg) {
  Connection c = connection(field, x, cfg);
  GeometryReport rep;
  rep.point = x;
  rep.riemann = reported_riemann(c);
  rep.ricci = ricci_from_riemann(rep.riemann, c.ginv);
  rep.scalar = c.ginv.cwiseProduct(rep.ricci).sum();
  rep.sectional = sectional_from_riemann(rep.riemann, c.g);
  rep.mean = mean_from_ricci(rep.ricci, c.g);
  rep.metric = std::move(c.g);
  rep.inverse = std::move(c.ginv);
  rep.christoffel = std::move(c.gamma);
  return rep;
}

}  // namespace gammageo
