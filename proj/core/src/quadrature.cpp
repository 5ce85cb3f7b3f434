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

#include "gammageo/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gammageo/errors.hpp"

namespace gammageo {
namespace {

// Kronrod 15-point abscissae (non-negative half) and weights; the Gauss
// 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  Eigen::VectorXd value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const VectorIntegrand& f, int dim, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Eigen::VectorXd fc = f(center);
  Eigen::VectorXd kronrod = fc * kWgk[7];
  Eigen::VectorXd gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    Eigen::VectorXd sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  if (!kronrod.allFinite()) {
    throw ConvergenceError("quadrature: non-finite integrand value", INFINITY);
  }
  double err = (kronrod - gauss).cwiseAbs().maxCoeff();
  if (dim == 0) err = 0.0;
  return {a, b, std::move(kronrod), err};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("QuadratureConfig: tolerances must be > 0");
  }
  if (max_subdivisions < 1) {
    throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
  }
  if (!(tail_cutoff_mass > 0.0) || tail_cutoff_mass > 1e-10) {
    throw DomainError("QuadratureConfig: tail_cutoff_mass must lie in (0, 1e-10]");
  }
}

QuadratureResult integrate(const VectorIntegrand& f, int dim, double a, double b,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return {Eigen::VectorXd::Zero(dim), 0.0, 0};
  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, dim, a, b);
  Eigen::VectorXd total = first.value;
  double total_error = first.error;
  heap.push(std::move(first));
  int subdivisions = 0;
  auto tolerance = [&] {
    return std::max(cfg.abs_tol, cfg.rel_tol * total.cwiseAbs().maxCoeff());
  };
  while (total_error > tolerance()) {
    if (subdivisions >= cfg.max_subdivisions) {
      throw ConvergenceError("quadrature: max_subdivisions exhausted", total_error);
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gauss_kronrod(f, dim, worst.a, mid);
    Segment right = gauss_kronrod(f, dim, mid, worst.b);
    total += left.value + right.value - worst.value;
    // Incremental update; the exact re-sum every 64 steps bounds drift.
    total_error += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
    ++subdivisions;
    if (subdivisions % 64 == 0) {
      auto copy = heap;
      total_error = 0.0;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {std::move(total), total_error, subdivisions};
}

double integrate_scalar(const std::function<double(double)>& f, double a, double b,
                        const QuadratureConfig& cfg, double* error) {
  auto wrapped = [&f](double x) {
    Eigen::VectorXd v(1);
    v[0] = f(x);
    return v;
  };
  QuadratureResult r = integrate(wrapped, 1, a, b, cfg);
  if (error != nullptr) *error = r.error;
  return r.value[0];
}

int endpoint_substitution_exponent(double power) {
  if (!(power > -1.0)) {
    throw DomainError("endpoint power must be > -1 for an integrable singularity");
  }
  if (power >= 1.0) return 1;
  // Transformed integrand m t^(m (p + 1) - 1) with exponent >= 1.
  return std::clamp(static_cast<int>(std::ceil(2.0 / (power + 1.0))), 1, 16);
}

QuadratureResult integrate_endpoint_powers(const VectorIntegrand& f, int dim, double a,
                                           double b, double lo_power, double hi_power,
                                           const QuadratureConfig& cfg) {
  const double mid = 0.5 * (a + b);
  const double h = mid - a;
  const int m_lo = endpoint_substitution_exponent(lo_power);
  const int m_hi = endpoint_substitution_exponent(hi_power);
  auto left = [&](double t) -> Eigen::VectorXd {
    if (t <= 0.0) return Eigen::VectorXd::Zero(dim);
    const double jac = m_lo * std::pow(t, m_lo - 1);
    return f(a + h * std::pow(t, m_lo)) * (h * jac);
  };
  auto right = [&](double t) -> Eigen::VectorXd {
    if (t <= 0.0) return Eigen::VectorXd::Zero(dim);
    const double jac = m_hi * std::pow(t, m_hi - 1);
    return f(b - h * std::pow(t, m_hi)) * (h * jac);
  };
  QuadratureResult lo = integrate(left, dim, 0.0, 1.0, cfg);
  QuadratureResult hi = integrate(right, dim, 0.0, 1.0, cfg);
  return {lo.value + hi.value, lo.error + hi.error, lo.subdivisions + hi.subdivisions};
}

double gamma_upper_cutoff(double shape, double rate, double mass) {
  if (!(shape > 0.0) || !(rate > 0.0) || !(mass > 0.0 && mass < 1.0)) {
    throw DomainError("gamma_upper_cutoff: invalid arguments");
  }
  return boost::math::gamma_q_inv(shape, mass) / rate;
}

}  // namespace gammageo
