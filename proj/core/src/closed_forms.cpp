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

#include "gammageo/closed_forms.hpp"

#include <cmath>

#include "gammageo/errors.hpp"
#include "gammageo/special_functions.hpp"

namespace gammageo {
namespace {

using Eigen::MatrixXd;

struct Shapes {
  double a1, a2, t1, t2, q1, q2, D;
  Shapes(double alpha1, double alpha2)
      : a1(alpha1),
        a2(alpha2),
        t1(trigamma(alpha1)),
        t2(trigamma(alpha2)),
        q1(tetragamma(alpha1)),
        q2(tetragamma(alpha2)) {
    D = t1 + t2 - (a1 + a2) * t1 * t2;
  }
  double scale() const { return std::abs(t1) + std::abs(t2) + std::abs((a1 + a2) * t1 * t2); }
};

bool negligible(double denom, double scale) { return std::abs(denom) < 1e-12 * scale; }

void add(ClosedFormReport& r, std::string object, std::vector<int> index, double value,
         std::string provenance) {
  r.entries.push_back({std::move(object), std::move(index), value, std::move(provenance)});
}

void add_matrix(ClosedFormReport& r, const std::string& object, const MatrixXd& m,
                const std::string& provenance) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j) {
      add(r, object, {i, j}, m(i, j),
          provenance + " " + object + "_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
}

}  // namespace

Eigen::Matrix3d mckay_metric(const McKayParams& p) {
  const double a1 = p.alpha1(), s = p.sigma12(), a2 = p.alpha2();
  Eigen::Matrix3d g;
  g(0, 0) = (-3.0 * a1 + a2) / (4.0 * a1 * a1) + trigamma(a1);
  g(0, 1) = g(1, 0) = (a1 - a2) / (4.0 * a1 * s);
  g(0, 2) = g(2, 0) = -1.0 / (2.0 * a1);
  g(1, 1) = (a1 + a2) / (4.0 * s * s);
  g(1, 2) = g(2, 1) = 1.0 / (2.0 * s);
  g(2, 2) = trigamma(a2);
  return g;
}

double mckay_denominator(const McKayParams& p) {
  return Shapes(p.alpha1(), p.alpha2()).D;
}

Eigen::Matrix3d mckay_metric_inverse(const McKayParams& p) {
  const Shapes z(p.alpha1(), p.alpha2());
  const double a1 = z.a1, a2 = z.a2, s = p.sigma12(), t1 = z.t1, t2 = z.t2;
  // Printed denominators: t2 + t1 (1 - (a1 + a2) t2) and its negative.
  const double den = t2 + t1 * (1.0 - (a1 + a2) * t2);
  const double neg = -t2 + t1 * (-1.0 + (a1 + a2) * t2);
  if (negligible(den, z.scale())) {
    throw SingularMatrixError("mckay_metric_inverse: denominator is negligible",
                              std::abs(z.scale() / den));
  }
  Eigen::Matrix3d gi;
  gi(0, 0) = -((-1.0 + (a1 + a2) * t2) / den);
  gi(0, 1) = gi(1, 0) = s * (1.0 + (a1 - a2) * t2) / (a1 * den);
  gi(0, 2) = gi(2, 0) = 1.0 / neg;
  gi(1, 1) = s * s * (-1.0 + (-3.0 * a1 + a2 + 4.0 * a1 * a1 * t1) * t2) / (a1 * a1 * neg);
  gi(1, 2) = gi(2, 1) = s * (-1.0 + 2.0 * a1 * t1) / (a1 * den);
  gi(2, 2) = -((-1.0 + (a1 + a2) * t1) / den);
  return gi;
}

McKayRiemann mckay_riemann_components(const McKayParams& p) {
  const Shapes z(p.alpha1(), p.alpha2());
  const double a1 = z.a1, a2 = z.a2, s = p.sigma12();
  const double t1 = z.t1, t2 = z.t2, q1 = z.q1, q2 = z.q2, D = z.D;
  McKayRiemann r;
  r.r1212 = t2 * (t1 + (a1 + a2) * q1) / (16.0 * s * s * D);
  r.r1213 = t2 * (t1 + 2.0 * a1 * q1) / (16.0 * a1 * s * D);
  r.r1223 = -t1 * t2 / (16.0 * s * s * D);
  r.r1313 = -(-(t1 * t2) + ((3.0 * a1 - a2) * t1 + 4.0 * a1 * a1 * q1) * q2) /
            (16.0 * a1 * a1 * D);
  r.r1323 = -t2 * (t2 + (-a1 + a2) * q2) / (16.0 * a1 * s * D);
  r.r2323 = t1 * (t2 + (a1 + a2) * q2) / (16.0 * s * s * D);
  return r;
}

double mckay_r1323_corrected(const McKayParams& p) {
  const Shapes z(p.alpha1(), p.alpha2());
  // Leading factor psi'(a1) in place of the printed psi'(a2).
  return -z.t1 * (z.t2 + (-z.a1 + z.a2) * z.q2) / (16.0 * z.a1 * p.sigma12() * z.D);
}

Eigen::Matrix3d mckay_ricci(const McKayParams& p) {
  const Shapes z(p.alpha1(), p.alpha2());
  const double a1 = z.a1, a2 = z.a2, s = p.sigma12();
  const double t1 = z.t1, t2 = z.t2, q1 = z.q1, q2 = z.q2, D2 = z.D * z.D;
  const double t1s = t1 * t1, t2s = t2 * t2;
  Eigen::Matrix3d r;
  r(0, 0) = ((-3.0 * t1s * t2 - 3.0 * t1 * t2s) / (16.0 * a1) +
             (a2 * t1s * t2 + a2 * t1 * t2s) / (16.0 * a1 * a1) +
             (t1s * t2s - 2.0 * t1 * t2 * q1) / 4.0 +
             (-(a2 * t2 * q1) + a2 * a2 * t2s * q1) / (16.0 * a1 * a1) +
             (a1 * t1 * t2s * q1 + a2 * t1 * t2s * q1) / 4.0 +
             (3.0 * t2 * q1 + 3.0 * t1 * q2) / (16.0 * a1) +
             (-3.0 * t2s * q1 - 3.0 * t1s * q2) / 16.0 +
             (-(a2 * t2s * q1) - a2 * t1s * q2) / (8.0 * a1) +
             (-(a2 * t1 * q2) + a2 * a2 * t1s * q2) / (16.0 * a1 * a1) +
             (q1 * q2 - a1 * t1 * q1 * q2 - a2 * t1 * q1 * q2) / 4.0) /
            D2;
  r(0, 1) = ((t1s * t2 + t1 * t2s - t2 * q1) / (16.0 * s) +
             (-(a2 * t1s * t2) - a2 * t1 * t2s + a2 * t2 * q1) / (16.0 * a1 * s) +
             (a1 * t2s * q1 - t1 * q2 + a1 * t1s * q2) / (16.0 * s) +
             (-(a2 * a2 * t2s * q1) + a2 * t1 * q2 - a2 * a2 * t1s * q2) / (16.0 * a1 * s)) /
            D2;
  r(0, 2) = ((-(t1s * t2) - t1 * t2s + t2 * q1) / (8.0 * a1) +
             (t2s * (q1 + 2.0 * t1s) + q2 * (t1s + 2.0 * q1)) / 8.0 +
             (-(a2 * t2s * q1) + t1 * q2 - a2 * t1s * q2) / (8.0 * a1)) /
            D2;
  r(1, 1) = ((a1 + a2) * (t2 * (t1 * (t1 + t2) - q1 + (a1 + a2) * t2 * q1)) / (16.0 * s * s) +
             (a1 + a2) * (t1 * (-1.0 + (a1 + a2) * t1) * q2) / (16.0 * s * s)) /
            D2;
  r(1, 2) = ((t2 * (t1 * (t1 + t2) - q1 + (a1 + a2) * t2 * q1)) / (8.0 * s) +
             (t1 * (-1.0 + (a1 + a2) * t1) * q2) / (8.0 * s)) /
            D2;
  r(2, 2) = ((-2.0 * t1 * t2 + (a1 + a2) * t2 * (t1s - q1) + q1) * q2 / 4.0 +
             t1s * t2s / 4.0) /
            D2;
  r(1, 0) = r(0, 1);
  r(2, 0) = r(0, 2);
  r(2, 1) = r(1, 2);
  return r;
}

double mckay_scalar(double alpha1, double alpha2) {
  const Shapes z(alpha1, alpha2);
  const double a1 = z.a1, a2 = z.a2;
  const double t1 = z.t1, t2 = z.t2, q1 = z.q1, q2 = z.q2, D2 = z.D * z.D;
  return (t1 * t1 * t2 + t1 * t2 * t2 + a1 * t2 * t2 * q1) / (2.0 * D2) +
         (-(t2 * q1) - t1 * q2) / D2 +
         (a2 * t2 * t2 * q1 + a1 * t1 * t1 * q2 + a2 * t1 * t1 * q2) / (2.0 * D2) +
         (-(a1 * q1 * q2) - a2 * q1 * q2) / (2.0 * D2);
}

double mckay_scalar(const McKayParams& p) { return mckay_scalar(p.alpha1(), p.alpha2()); }

McKaySectional mckay_sectional(const McKayParams& p) {
  const Shapes z(p.alpha1(), p.alpha2());
  const double a1 = z.a1, a2 = z.a2;
  const double t1 = z.t1, t2 = z.t2, q1 = z.q1, q2 = z.q2, D = z.D;
  McKaySectional k;
  k.s12 = -t2 * (t1 + (a1 + a2) * q1) / (4.0 * (-1.0 + (a1 + a2) * t1) * D);
  k.s13 = -(t1 * t2 + ((-3.0 * a1 + a2) * t1 - 4.0 * a1 * a1 * q1) * q2) /
          (4.0 * D * (-1.0 + (a2 + a1 * (-3.0 + 4.0 * a1 * t1)) * t2));
  k.s23 = -t1 * (t2 + (a1 + a2) * q2) / (4.0 * (-1.0 + (a1 + a2) * t2) * D);
  return k;
}

Eigen::Vector3d mckay_mean(const McKayParams& p) {
  const Shapes z(p.alpha1(), p.alpha2());
  const double a1 = z.a1, a2 = z.a2;
  const double t1 = z.t1, t2 = z.t2, q1 = z.q1, q2 = z.q2, D2 = z.D * z.D;
  const double t1s = t1 * t1, t2s = t2 * t2, a1s = a1 * a1, a2s = a2 * a2;
  const double W = a2 + a1 * (-3.0 + 4.0 * a1 * t1);
  Eigen::Vector3d m;
  m[0] = ((-3.0 * a1 * t1s * t2 + a2 * t1s * t2 - 3.0 * a1 * t1 * t2s) / 8.0 +
          (a2 * t1 * t2s + 4.0 * a1s * t1s * t2s + 3.0 * a1 * t2 * q1) / 8.0 +
          (-(a2 * t2 * q1) - 8.0 * a1s * t1 * t2 * q1 - 3.0 * a1s * t2s * q1) / 8.0 +
          (-2.0 * a1 * a2 * t2s * q1 + a2s * t2s * q1 + 4.0 * a1s * a1 * t1 * t2s * q1) / 8.0 +
          (4.0 * a1s * a2 * t1 * t2s * q1 + 3.0 * a1 * t1 * q2 - a2 * t1 * q2) / 8.0 +
          (-3.0 * a1s * t1s * q2 - 2.0 * a1 * a2 * t1s * q2 + a2s * t1s * q2) / 8.0 +
          (a1s * q1 * q2 - a1s * a1 * t1 * q1 * q2 - a1s * a2 * t1 * q1 * q2) / 2.0) /
         (W * D2);
  m[1] = ((t2 * (t1 * (t1 + t2) - q1 + (a1 + a2) * t2 * q1)) / 8.0 +
          (t1 * (-1.0 + (a1 + a2) * t1) * q2) / 8.0) /
         D2;
  m[2] = ((-2.0 * t1 * t2 + (a1 + a2) * t2 * (t1s - q1) + q1) * q2 / 8.0 + t1s * t2s / 8.0) /
         (t2 * D2);
  return m;
}

Eigen::Matrix<double, 5, 5> five_manifold_metric(const FiveGammaParams& p) {
  const double a1 = p.alpha1(), a2 = p.alpha2(), s = p.sigma12();
  if (!(a1 > 2.0) || !(a2 > 2.0)) {
    throw DomainError("five_manifold_metric: requires alpha1, alpha2 > 2");
  }
  const double ra = std::sqrt(a1), rs = std::sqrt(s);
  Eigen::Matrix<double, 5, 5> g;
  g(0, 0) = trigamma(a1) + (-3.0 * a1 + a2) / (4.0 * a1 * a1);
  g(0, 1) = -1.0 / (2.0 * a1);
  g(0, 2) = (a1 - a2) / (4.0 * a1 * s);
  g(0, 3) = ra / ((-1.0 + a1) * rs);
  g(0, 4) = -1.0 / (2.0 * ra * rs);
  g(1, 0) = -1.0 / (2.0 * a1);
  g(1, 1) = trigamma(a2);
  g(1, 2) = 1.0 / (2.0 * s);
  g(1, 3) = ra / ((1.0 - a2) * rs);
  g(1, 4) = ra / ((-1.0 + a2) * rs);
  g(2, 0) = (a1 - a2) / (4.0 * a1 * s);
  g(2, 1) = 1.0 / (2.0 * s);
  g(2, 2) = (a1 + a2) / (4.0 * s * s);
  g(2, 3) = 0.0;
  g(2, 4) = ra / (2.0 * std::pow(s, 1.5));
  g(3, 0) = ra / ((-1.0 + a1) * rs);
  g(3, 1) = ra / ((1.0 - a2) * rs);
  g(3, 2) = 0.0;
  g(3, 3) = a1 / ((-2.0 + a1) * s) + a1 / ((-2.0 + a2) * s);
  g(3, 4) = -a1 / ((-2.0 + a2) * s);
  g(4, 0) = -1.0 / (2.0 * ra * rs);
  g(4, 1) = ra / ((-1.0 + a2) * rs);
  g(4, 2) = ra / (2.0 * std::pow(s, 1.5));
  g(4, 3) = -a1 / ((-2.0 + a2) * s);
  g(4, 4) = a1 / ((-2.0 + a2) * s);
  return g;
}

const ClosedFormEntry* ClosedFormReport::find(const std::string& object,
                                              const std::vector<int>& index) const {
  for (const auto& e : entries) {
    if (e.object == object && e.index == index) return &e;
  }
  return nullptr;
}

ClosedFormReport mckay_report(const McKayParams& p) {
  ClosedFormReport r;
  r.model = "mckay";
  r.point = p.coords();
  r.metric = mckay_metric(p);
  const Shapes z(p.alpha1(), p.alpha2());
  r.denominator = z.D;
  r.near_singular = negligible(z.D, z.scale());
  add_matrix(r, "metric", r.metric, "McKay");
  if (!r.near_singular) {
    r.inverse = mckay_metric_inverse(p);
    add_matrix(r, "inverse", r.inverse, "McKay");
  }
  const McKayRiemann R = mckay_riemann_components(p);
  add(r, "riemann", {0, 1, 0, 1}, R.r1212, "McKay curvature R_1212");
  add(r, "riemann", {0, 1, 0, 2}, R.r1213, "McKay curvature R_1213");
  add(r, "riemann", {0, 1, 1, 2}, R.r1223, "McKay curvature R_1223");
  add(r, "riemann", {0, 2, 0, 2}, R.r1313, "McKay curvature R_1313");
  add(r, "riemann", {0, 2, 1, 2}, R.r1323, "McKay curvature R_1323");
  add(r, "riemann", {1, 2, 1, 2}, R.r2323, "McKay curvature R_2323");
  add_matrix(r, "ricci", mckay_ricci(p), "McKay Ricci");
  add(r, "scalar", {}, mckay_scalar(p), "McKay scalar curvature");
  const McKaySectional k = mckay_sectional(p);
  add(r, "sectional", {0, 1}, k.s12, "McKay sectional rho(1,2)");
  add(r, "sectional", {0, 2}, k.s13, "McKay sectional rho(1,3)");
  add(r, "sectional", {1, 2}, k.s23, "McKay sectional rho(2,3)");
  const Eigen::Vector3d m = mckay_mean(p);
  for (int l = 0; l < 3; ++l) {
    add(r, "mean", {l}, m[l], "McKay mean curvature rho(" + std::to_string(l + 1) + ")");
  }
  return r;
}

namespace {

struct SliceForms {
  Eigen::Matrix2d g, gi;
  double gamma[2][2][2];  // gamma[k][i][j] = G^k_ij
  double r1212;
  Eigen::Matrix2d ricci;
  double scalar;
  double denominator;
  double scale;
};

SliceForms m1_forms(double s, double a2) {
  const double t = trigamma(a2), q = tetragamma(a2), d = -1.0 + (1.0 + a2) * t;
  SliceForms f;
  f.g << (1.0 + a2) / (4.0 * s * s), 1.0 / (2.0 * s), 1.0 / (2.0 * s), t;
  f.gi << 4.0 * s * s * t / d, -2.0 * s / d, -2.0 * s / d, (1.0 + a2) / d;
  f.gamma[0][0][0] = (-4.0 + 1.0 / d) / (4.0 * s);
  f.gamma[0][0][1] = f.gamma[0][1][0] = t / (-2.0 + 2.0 * (1.0 + a2) * t);
  f.gamma[0][1][1] = -(s * q / d);
  f.gamma[1][0][0] = -(1.0 + a2) / (8.0 * s * s * d);
  f.gamma[1][0][1] = f.gamma[1][1][0] = -1.0 / (4.0 * s * d);
  f.gamma[1][1][1] = (1.0 + a2) * q / (2.0 * d);
  const double u = t + (1.0 + a2) * q;
  f.r1212 = -u / (16.0 * s * s * d);
  f.ricci(0, 0) = (1.0 + a2) * u / (16.0 * s * s * d * d);
  f.ricci(0, 1) = f.ricci(1, 0) = u / (8.0 * s * d * d);
  f.ricci(1, 1) = t * u / (4.0 * d * d);
  f.scalar = u / (2.0 * d * d);
  f.denominator = d;
  f.scale = 1.0 + std::abs((1.0 + a2) * t);
  return f;
}

SliceForms m2_forms(double a1, double s) {
  const double t = trigamma(a1), q = tetragamma(a1), d = -1.0 + (1.0 + a1) * t;
  SliceForms f;
  const double off = (-1.0 + a1) / (4.0 * a1 * s);
  f.g << (1.0 - 3.0 * a1) / (4.0 * a1 * a1) + t, off, off, (1.0 + a1) / (4.0 * s * s);
  const double goff = -((-1.0 + a1) * s / (a1 * d));
  f.gi << (1.0 + a1) / d, goff, goff,
      s * s * (1.0 + a1 * (-3.0 + 4.0 * a1 * t)) / (a1 * a1 * d);
  f.gamma[0][0][0] = (-1.0 + a1 * (3.0 + 4.0 * a1 * (1.0 + a1) * q)) / (8.0 * a1 * a1 * d);
  f.gamma[0][0][1] = f.gamma[0][1][0] = -(-1.0 + a1) / (8.0 * a1 * s * d);
  f.gamma[0][1][1] = -(1.0 + a1) / (8.0 * s * s * d);
  f.gamma[1][0][0] =
      s * (-1.0 + a1 * (-3.0 + 8.0 * t - 4.0 * (-1.0 + a1) * a1 * q)) / (8.0 * a1 * a1 * a1 * d);
  f.gamma[1][0][1] = f.gamma[1][1][0] = (1.0 + a1 * (-3.0 + 4.0 * a1 * t)) / (8.0 * a1 * a1 * d);
  f.gamma[1][1][1] = (-8.0 + (-1.0 + a1) / (a1 * d)) / (8.0 * s);
  const double u = t + (1.0 + a1) * q;
  f.r1212 = -u / (16.0 * s * s * d);
  f.ricci(0, 0) = (1.0 + a1 * (-3.0 + 4.0 * a1 * t)) * u / (16.0 * a1 * a1 * d * d);
  f.ricci(0, 1) = f.ricci(1, 0) = (-1.0 + a1) * u / (16.0 * a1 * s * d * d);
  f.ricci(1, 1) = (1.0 + a1) * u / (16.0 * s * s * d * d);
  f.scalar = u / (2.0 * d * d);
  f.denominator = d;
  f.scale = 1.0 + std::abs((1.0 + a1) * t);
  return f;
}

SliceForms m3_forms(double a1, double a2) {
  const double t1 = trigamma(a1), t2 = trigamma(a2), q1 = tetragamma(a1), q2 = tetragamma(a2);
  const double W = a2 + a1 * (-3.0 + 4.0 * a1 * t1);
  const double d = -1.0 + W * t2;
  SliceForms f;
  f.g << (-3.0 * a1 + a2) / (4.0 * a1 * a1) + t1, -1.0 / (2.0 * a1), -1.0 / (2.0 * a1), t2;
  f.gi << 4.0 * a1 * a1 * t2 / d, 2.0 * a1 / d, 2.0 * a1 / d, W / d;
  f.gamma[0][0][0] = (3.0 + 2.0 * t2 * (3.0 * a1 - 2.0 * a2 + 4.0 * a1 * a1 * a1 * q1)) /
                     (4.0 * a1 * d);
  f.gamma[0][0][1] = f.gamma[0][1][0] = t2 / (2.0 * d);
  f.gamma[0][1][1] = a1 * q2 / d;
  f.gamma[1][0][0] = (-a2 + a1 * (-3.0 + 12.0 * a1 * t1 + 8.0 * a1 * a1 * q1)) /
                     (8.0 * a1 * a1 * d);
  f.gamma[1][0][1] = f.gamma[1][1][0] = 1.0 / (4.0 * a1 * d);
  f.gamma[1][1][1] = W * q2 / (2.0 * d);
  const double X = -a2 + a1 * (-3.0 + 12.0 * a1 * t1 + 8.0 * a1 * a1 * q1);
  f.r1212 = (-t2 + X * q2) / (16.0 * a1 * a1 * d);
  f.ricci(0, 0) = W * (X * q2) / (-16.0 * a1 * a1 * d * d) + t2 * W * t2 / (16.0 * a1 * a1 * d * d);
  f.ricci(0, 1) = f.ricci(1, 0) = (-t2 + X * q2) / (8.0 * a1 * d * d);
  const double Y = a2 + a1 * (3.0 - 4.0 * a1 * (3.0 * t1 + 2.0 * a1 * q1));
  f.ricci(1, 1) = t2 * (t2 + Y * q2) / (4.0 * d * d);
  f.scalar = (t2 + Y * q2) / (2.0 * d * d);
  f.denominator = d;
  f.scale = 1.0 + std::abs(W * t2);
  return f;
}

}  // namespace

double m3_ricci11_corrected(double alpha1, double alpha2) {
  const double a1 = alpha1, a2 = alpha2;
  const double t1 = trigamma(a1), t2 = trigamma(a2), q1 = tetragamma(a1), q2 = tetragamma(a2);
  const double W = a2 + a1 * (-3.0 + 4.0 * a1 * t1);
  const double d = -1.0 + W * t2;
  const double X = -a2 + a1 * (-3.0 + 12.0 * a1 * t1 + 8.0 * a1 * a1 * q1);
  // Second term carries psi'(a2) once; the printed form squares it.
  return W * (X * q2) / (-16.0 * a1 * a1 * d * d) + W * t2 / (16.0 * a1 * a1 * d * d);
}

ClosedFormReport submanifold_geometry(SubmanifoldId id, const Eigen::Vector2d& coords) {
  if (!(coords[0] > 0.0) || !(coords[1] > 0.0) || !coords.allFinite()) {
    throw DomainError(std::string(to_string(id)) + ": coordinates must be positive");
  }
  SliceForms f;
  switch (id) {
    case SubmanifoldId::kM1: f = m1_forms(coords[0], coords[1]); break;
    case SubmanifoldId::kM2: f = m2_forms(coords[0], coords[1]); break;
    case SubmanifoldId::kM3: f = m3_forms(coords[0], coords[1]); break;
  }
  const std::string tag = id == SubmanifoldId::kM1   ? "M1"
                          : id == SubmanifoldId::kM2 ? "M2"
                                                     : "M3";
  ClosedFormReport r;
  r.model = to_string(id);
  r.point = coords;
  r.metric = f.g;
  r.inverse = f.gi;
  r.denominator = f.denominator;
  r.near_singular = negligible(f.denominator, f.scale);
  add_matrix(r, "metric", f.g, tag);
  add_matrix(r, "inverse", f.gi, tag);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) {
        add(r, "christoffel", {k, i, j}, f.gamma[k][i][j],
            tag + " Christoffel G^" + std::to_string(k + 1) + "_" + std::to_string(i + 1) +
                std::to_string(j + 1));
      }
  add(r, "riemann", {0, 1, 0, 1}, f.r1212, tag + " curvature R_1212");
  add_matrix(r, "ricci", f.ricci, tag + " Ricci");
  add(r, "scalar", {}, f.scalar, tag + " scalar curvature");
  return r;
}

double rho_maps(SubmanifoldId id, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("rho_maps: rho must lie in (0, 1)");
  const double r2 = rho * rho;
  switch (id) {
    case SubmanifoldId::kM1: return (1.0 - r2) / r2;
    case SubmanifoldId::kM2: return r2 / (1.0 - r2);
    case SubmanifoldId::kM3: break;
  }
  throw DomainError("rho_maps: M3 has no single-parameter correlation map");
}

std::vector<std::pair<double, double>> scalar_vs_rho_curve(SubmanifoldId id,
                                                           const std::vector<double>& rho_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(rho_grid.size());
  for (double rho : rho_grid) {
    const double shape = rho_maps(id, rho);
    // The scalar of M1 and M2 depends on the free shape only; sigma12 = 1.
    const Eigen::Vector2d coords = id == SubmanifoldId::kM1 ? Eigen::Vector2d(1.0, shape)
                                                            : Eigen::Vector2d(shape, 1.0);
    out.emplace_back(rho, submanifold_geometry(id, coords).find("scalar", {})->value);
  }
  return out;
}

}  // namespace gammageo
