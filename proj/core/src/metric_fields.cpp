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

#include "gammageo/metric_fields.hpp"

#include <cmath>
#include <utility>

#include "gammageo/errors.hpp"
#include "gammageo/immersion.hpp"
#include "gammageo/special_functions.hpp"

namespace gammageo {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

bool positive_finite(const VectorXd& x) {
  for (int i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(x[i])) return false;
  }
  return true;
}

void symmetrize_upper(MatrixXd& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
}

MatrixXd mckay_metric_at(const VectorXd& x) {
  const double a1 = x[0], s = x[1], a2 = x[2];
  MatrixXd g(3, 3);
  g(0, 0) = (-3.0 * a1 + a2) / (4.0 * a1 * a1) + trigamma(a1);
  g(0, 1) = (a1 - a2) / (4.0 * a1 * s);
  g(0, 2) = -1.0 / (2.0 * a1);
  g(1, 1) = (a1 + a2) / (4.0 * s * s);
  g(1, 2) = 1.0 / (2.0 * s);
  g(2, 2) = trigamma(a2);
  symmetrize_upper(g);
  return g;
}

std::vector<MatrixXd> mckay_metric_derivatives(const VectorXd& x) {
  const double a1 = x[0], s = x[1], a2 = x[2];
  std::vector<MatrixXd> d(3, MatrixXd::Zero(3, 3));
  // d / d alpha1
  d[0](0, 0) = 3.0 / (4.0 * a1 * a1) - a2 / (2.0 * a1 * a1 * a1) + tetragamma(a1);
  d[0](0, 1) = a2 / (4.0 * a1 * a1 * s);
  d[0](0, 2) = 1.0 / (2.0 * a1 * a1);
  d[0](1, 1) = 1.0 / (4.0 * s * s);
  // d / d sigma12
  d[1](0, 1) = -(a1 - a2) / (4.0 * a1 * s * s);
  d[1](1, 1) = -(a1 + a2) / (2.0 * s * s * s);
  d[1](1, 2) = -1.0 / (2.0 * s * s);
  // d / d alpha2
  d[2](0, 0) = 1.0 / (4.0 * a1 * a1);
  d[2](0, 1) = -1.0 / (4.0 * a1 * s);
  d[2](1, 1) = 1.0 / (4.0 * s * s);
  d[2](2, 2) = tetragamma(a2);
  for (auto& m : d) symmetrize_upper(m);
  return d;
}

MatrixXd five_metric_at(const VectorXd& x) {
  const double a1 = x[0], a2 = x[1], s = x[2];
  const double c = std::sqrt(a1 / s), c2 = a1 / s;
  MatrixXd g = MatrixXd::Zero(5, 5);
  g(0, 0) = (-3.0 * a1 + a2) / (4.0 * a1 * a1) + trigamma(a1);
  g(0, 1) = -1.0 / (2.0 * a1);
  g(0, 2) = (a1 - a2) / (4.0 * a1 * s);
  g(0, 3) = c / (a1 - 1.0);
  g(0, 4) = -c / (2.0 * a1);
  g(1, 1) = trigamma(a2);
  g(1, 2) = 1.0 / (2.0 * s);
  g(1, 3) = -c / (a2 - 1.0);
  g(1, 4) = c / (a2 - 1.0);
  g(2, 2) = (a1 + a2) / (4.0 * s * s);
  g(2, 4) = c / (2.0 * s);
  g(3, 3) = c2 / (a1 - 2.0) + c2 / (a2 - 2.0);
  g(3, 4) = -c2 / (a2 - 2.0);
  g(4, 4) = c2 / (a2 - 2.0);
  symmetrize_upper(g);
  return g;
}

std::vector<MatrixXd> five_metric_derivatives(const VectorXd& x) {
  const double a1 = x[0], a2 = x[1], s = x[2];
  const double c = std::sqrt(a1 / s), c2 = a1 / s;
  const double e1 = a1 - 1.0, e2 = a2 - 1.0, f1 = a1 - 2.0, f2 = a2 - 2.0;
  std::vector<MatrixXd> d(5, MatrixXd::Zero(5, 5));
  MatrixXd& da1 = d[0];
  MatrixXd& da2 = d[1];
  MatrixXd& ds = d[2];
  da1(0, 0) = 3.0 / (4.0 * a1 * a1) - a2 / (2.0 * a1 * a1 * a1) + tetragamma(a1);
  da2(0, 0) = 1.0 / (4.0 * a1 * a1);
  da1(0, 1) = 1.0 / (2.0 * a1 * a1);
  da1(0, 2) = a2 / (4.0 * a1 * a1 * s);
  da2(0, 2) = -1.0 / (4.0 * a1 * s);
  ds(0, 2) = -(a1 - a2) / (4.0 * a1 * s * s);
  da1(0, 3) = c / (2.0 * a1 * e1) - c / (e1 * e1);
  ds(0, 3) = -c / (2.0 * s * e1);
  da1(0, 4) = c / (4.0 * a1 * a1);
  ds(0, 4) = c / (4.0 * a1 * s);
  da2(1, 1) = tetragamma(a2);
  ds(1, 2) = -1.0 / (2.0 * s * s);
  da1(1, 3) = -c / (2.0 * a1 * e2);
  da2(1, 3) = c / (e2 * e2);
  ds(1, 3) = c / (2.0 * s * e2);
  da1(1, 4) = -da1(1, 3);
  da2(1, 4) = -da2(1, 3);
  ds(1, 4) = -ds(1, 3);
  da1(2, 2) = 1.0 / (4.0 * s * s);
  da2(2, 2) = 1.0 / (4.0 * s * s);
  ds(2, 2) = -(a1 + a2) / (2.0 * s * s * s);
  da1(2, 4) = c / (4.0 * a1 * s);
  ds(2, 4) = -3.0 * c / (4.0 * s * s);
  da1(3, 3) = (1.0 / s) * (1.0 / f1 + 1.0 / f2) - c2 / (f1 * f1);
  da2(3, 3) = -c2 / (f2 * f2);
  ds(3, 3) = -(a1 / (s * s)) * (1.0 / f1 + 1.0 / f2);
  da1(3, 4) = -1.0 / (s * f2);
  da2(3, 4) = c2 / (f2 * f2);
  ds(3, 4) = a1 / (s * s * f2);
  da1(4, 4) = -da1(3, 4);
  da2(4, 4) = -da2(3, 4);
  ds(4, 4) = -ds(3, 4);
  for (auto& m : d) symmetrize_upper(m);
  return d;
}

}  // namespace

const char* to_string(SubmanifoldId id) {
  switch (id) {
    case SubmanifoldId::kM1: return "m1";
    case SubmanifoldId::kM2: return "m2";
    case SubmanifoldId::kM3: return "m3";
  }
  return "?";
}

int fixed_coordinate(SubmanifoldId id) {
  switch (id) {
    case SubmanifoldId::kM1: return 0;
    case SubmanifoldId::kM2: return 2;
    case SubmanifoldId::kM3: return 1;
  }
  throw DomainError("unknown submanifold");
}

MetricField mckay_field() {
  MetricField f;
  f.name = "mckay";
  f.dim = 3;
  f.in_domain = [](const VectorXd& x) { return x.size() == 3 && positive_finite(x); };
  f.metric = mckay_metric_at;
  f.first_derivatives = mckay_metric_derivatives;
  return f;
}

MetricField slice_field(const MetricField& full, int fixed_index, double fixed_value,
                        std::string name) {
  if (fixed_index < 0 || fixed_index >= full.dim) {
    throw DomainError("slice_field: fixed index out of range");
  }
  const int n = full.dim - 1;
  auto lift = [=](const VectorXd& y) {
    VectorXd x(full.dim);
    for (int i = 0, k = 0; i < full.dim; ++i) x[i] = i == fixed_index ? fixed_value : y[k++];
    return x;
  };
  std::vector<int> keep;
  for (int i = 0; i < full.dim; ++i)
    if (i != fixed_index) keep.push_back(i);
  auto restrict = [keep, n](const MatrixXd& m) {
    MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) = m(keep[i], keep[j]);
    return out;
  };
  MetricField f;
  f.name = std::move(name);
  f.dim = n;
  f.in_domain = [full, lift, n](const VectorXd& y) {
    return y.size() == n && full.in_domain(lift(y));
  };
  f.metric = [full, lift, restrict](const VectorXd& y) { return restrict(full.metric(lift(y))); };
  if (full.first_derivatives) {
    f.first_derivatives = [full, lift, restrict, keep](const VectorXd& y) {
      const std::vector<MatrixXd> d = full.first_derivatives(lift(y));
      std::vector<MatrixXd> out;
      for (int k : keep) out.push_back(restrict(d[k]));
      return out;
    };
  }
  return f;
}

MetricField submanifold_field(SubmanifoldId id) {
  return slice_field(mckay_field(), fixed_coordinate(id), 1.0, to_string(id));
}

MetricField five_gamma_field() {
  MetricField f;
  f.name = "mckay5";
  f.dim = 5;
  f.in_domain = [](const VectorXd& x) {
    return x.size() == 5 && positive_finite(x.head(3)) && x[0] > 2.0 && x[1] > 2.0 &&
           std::isfinite(x[3]) && std::isfinite(x[4]);
  };
  f.metric = five_metric_at;
  f.first_derivatives = five_metric_derivatives;
  return f;
}

MetricField gamma_field() {
  MetricField f;
  f.name = "gamma";
  f.dim = 2;
  f.in_domain = [](const VectorXd& x) { return x.size() == 2 && positive_finite(x); };
  f.metric = [](const VectorXd& x) {
    const double a = x[0], b = x[1];
    MatrixXd g = MatrixXd::Zero(2, 2);
    g(0, 0) = trigamma(a) - 1.0 / a;
    g(1, 1) = a / (b * b);
    return g;
  };
  f.first_derivatives = [](const VectorXd& x) {
    const double a = x[0], b = x[1];
    std::vector<MatrixXd> d(2, MatrixXd::Zero(2, 2));
    d[0](0, 0) = tetragamma(a) + 1.0 / (a * a);
    d[0](1, 1) = 1.0 / (b * b);
    d[1](1, 1) = -2.0 * a / (b * b * b);
    return d;
  };
  return f;
}

MetricField gamma_natural_field() {
  MetricField f;
  f.name = "gamma-natural";
  f.dim = 2;
  f.in_domain = [](const VectorXd& x) { return x.size() == 2 && positive_finite(x); };
  f.metric = [](const VectorXd& x) { return MatrixXd(gamma_metric_2d(x[0], x[1])); };
  f.first_derivatives = [](const VectorXd& x) {
    const double mu = x[0], a = x[1];
    std::vector<MatrixXd> d(2, MatrixXd::Zero(2, 2));
    d[0] << -2.0 * a / (mu * mu * mu), 1.0 / (mu * mu), 1.0 / (mu * mu), 0.0;
    d[1] << 1.0 / (mu * mu), 0.0, 0.0, tetragamma(a);
    return d;
  };
  return f;
}

MetricField euclidean_field(int dim) {
  MetricField f;
  f.name = "euclidean";
  f.dim = dim;
  f.in_domain = [dim](const VectorXd& x) { return x.size() == dim && x.allFinite(); };
  f.metric = [dim](const VectorXd&) { return MatrixXd::Identity(dim, dim); };
  f.first_derivatives = [dim](const VectorXd&) {
    return std::vector<MatrixXd>(dim, MatrixXd::Zero(dim, dim));
  };
  return f;
}

MetricField unit_sphere_field() {
  MetricField f;
  f.name = "sphere";
  f.dim = 2;
  f.in_domain = [](const VectorXd& x) {
    return x.size() == 2 && x[0] > 0.0 && x[0] < M_PI && std::isfinite(x[1]);
  };
  f.metric = [](const VectorXd& x) {
    MatrixXd g = MatrixXd::Zero(2, 2);
    g(0, 0) = 1.0;
    g(1, 1) = std::sin(x[0]) * std::sin(x[0]);
    return g;
  };
  return f;
}

MetricField hyperbolic_field() {
  MetricField f;
  f.name = "hyperbolic";
  f.dim = 2;
  f.in_domain = [](const VectorXd& x) {
    return x.size() == 2 && std::isfinite(x[0]) && x[1] > 0.0 && std::isfinite(x[1]);
  };
  f.metric = [](const VectorXd& x) {
    return MatrixXd(MatrixXd::Identity(2, 2) / (x[1] * x[1]));
  };
  f.first_derivatives = [](const VectorXd& x) {
    std::vector<MatrixXd> d(2, MatrixXd::Zero(2, 2));
    d[1] = MatrixXd::Identity(2, 2) * (-2.0 / (x[1] * x[1] * x[1]));
    return d;
  };
  return f;
}

}  // namespace gammageo
