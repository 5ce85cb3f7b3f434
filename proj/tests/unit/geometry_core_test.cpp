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

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "gammageo/closed_forms.hpp"
#include "gammageo/errors.hpp"
#include "gammageo/geometry_core.hpp"
#include "gammageo/metric_fields.hpp"
#include "support_oracles.hpp"

using namespace gammageo;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd vec(std::initializer_list<double> v) {
  VectorXd out(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

const double kPsi1 = std::numbers::pi * std::numbers::pi / 6;  // psi'(1)
const double kPsi2 = -2.4041138063191885708;                   // psi''(1)

void check_symmetries(const GeometryReport& r, double tol) {
  const int n = static_cast<int>(r.point.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(r.christoffel(k, i, j) == r.christoffel(k, j, i));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const double v = r.riemann(a, b, c, d);
          CHECK(std::abs(v + r.riemann(b, a, c, d)) <= tol);
          CHECK(std::abs(v + r.riemann(a, b, d, c)) <= tol);
          CHECK(std::abs(v - r.riemann(c, d, a, b)) <= tol);
        }
  CHECK((r.ricci - r.ricci.transpose()).cwiseAbs().maxCoeff() <= tol);
  CHECK((r.sectional - r.sectional.transpose()).cwiseAbs().maxCoeff() <= tol);
}

}  // namespace

TEST_SUITE("geometry_core") {
  TEST_CASE("invert_metric") {
    CHECK((invert_metric(MatrixXd::Identity(3, 3)) - MatrixXd::Identity(3, 3)).norm() == 0.0);
    MatrixXd d = MatrixXd::Zero(2, 2);
    d(0, 0) = 4;
    d(1, 1) = 0.5;
    const MatrixXd di = invert_metric(d);
    CHECK(di(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(di(1, 1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(di(0, 1) == 0.0);
    const McKayParams p(1, 1, 1);
    const MatrixXd prod = MatrixXd(mckay_metric(p)) * invert_metric(mckay_metric(p));
    CHECK((prod - MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
    MatrixXd indefinite = MatrixXd::Identity(2, 2);
    indefinite(1, 1) = -1;
    CHECK_THROWS_AS(invert_metric(indefinite), SingularMatrixError);
    MatrixXd nearly = MatrixXd::Identity(2, 2);
    nearly(1, 1) = 1e-15;
    CHECK_THROWS_AS(invert_metric(nearly), SingularMatrixError);
  }

  TEST_CASE("Christoffel symbols") {
    const Tensor3 flat = christoffels(euclidean_field(3), vec({0.3, -1, 2}));
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(flat(k, i, j) == 0.0);
    // M1 at (sigma12, alpha2) = (1, 1).
    const Tensor3 m1 = christoffels(submanifold_field(SubmanifoldId::kM1), vec({1, 1}));
    CHECK(m1(0, 1, 1) == doctest::Approx(-kPsi2 / (-1 + 2 * kPsi1)).epsilon(1e-10));
    CHECK(m1(0, 1, 1) == doctest::Approx(1.049892).epsilon(1e-6));
  }

  TEST_CASE("Christoffels against finite differences of the metric") {
    for (const auto& [field, x] :
         std::vector<std::pair<MetricField, VectorXd>>{{mckay_field(), vec({2, 1, 3})},
                                                       {mckay_field(), vec({0.6, 2.5, 1.2})},
                                                       {five_gamma_field(), vec({3, 2.5, 1, 0.4, 0.9})},
                                                       {gamma_natural_field(), vec({2, 3})}}) {
      const Tensor3 lib = christoffels(field, x);
      const auto ref = oracle::christoffels(field.metric, x);
      const int n = field.dim;
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) CHECK(std::abs(lib(k, i, j) - ref[k][i][j]) < 1e-6);
    }
  }

  TEST_CASE("analytic metric derivatives converge like central differences") {
    for (const auto& [field, x] : std::vector<std::pair<MetricField, VectorXd>>{
             {mckay_field(), vec({2, 1, 3})},
             {mckay_field(), vec({0.5, 0.5, 4})},
             {five_gamma_field(), vec({3, 3.5, 0.8, 0.2, 0.6})},
             {submanifold_field(SubmanifoldId::kM3), vec({1.5, 2})}}) {
      const auto analytic = field.first_derivatives(x);
      for (int k = 0; k < field.dim; ++k) {
        auto fd_err = [&](double h) {
          VectorXd xp = x, xm = x;
          xp[k] += h;
          xm[k] -= h;
          return ((field.metric(xp) - field.metric(xm)) / (2 * h) - analytic[k]).cwiseAbs().maxCoeff();
        };
        const double e1 = fd_err(2e-2), e2 = fd_err(1e-2);
        if (e1 < 1e-11) continue;  // derivative linear in this coordinate
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
      }
    }
  }

  TEST_CASE("Riemann tensor") {
    // M1 at (1, 1): the one independent component.
    const Tensor4 m1 = riemann_lowered(submanifold_field(SubmanifoldId::kM1), vec({1, 1}));
    const double want = -(kPsi1 + 2 * kPsi2) / (16 * (-1 + 2 * kPsi1));
    CHECK(m1(0, 1, 0, 1) == doctest::Approx(want).epsilon(1e-9));
    CHECK(m1(0, 1, 0, 1) == doctest::Approx(0.086340).epsilon(1e-5));
    CHECK(std::abs(m1(0, 0, 0, 1)) < 1e-14);
    CHECK(std::abs(m1(1, 0, 0, 1) + m1(0, 1, 0, 1)) < 1e-15);

    // McKay at (1, 1, 1) against printed components. R_1323 is a known
    // misprint and is checked against the corrected expression instead.
    const McKayParams p(1, 1, 1);
    const Tensor4 r = riemann_lowered(mckay_field(), p.coords());
    const McKayRiemann printed = mckay_riemann_components(p);
    CHECK(oracle::rel_err(r(0, 1, 0, 2), printed.r1213) < 1e-8);
    CHECK(oracle::rel_err(r(0, 1, 1, 2), printed.r1223) < 1e-8);
    CHECK(oracle::rel_err(r(0, 2, 1, 2), mckay_r1323_corrected(p)) < 1e-8);
  }

  TEST_CASE("Riemann tensor against an independent finite-difference oracle") {
    // The oracle uses the standard convention; the library reports its negative.
    for (const auto& [field, x] :
         std::vector<std::pair<MetricField, VectorXd>>{{mckay_field(), vec({2, 1, 3})},
                                                       {submanifold_field(SubmanifoldId::kM2), vec({1.3, 0.7})},
                                                       {unit_sphere_field(), vec({1.1, 0.4})}}) {
      const Tensor4 lib = riemann_lowered(field, x);
      const auto ref = oracle::riemann_standard(field.metric, x);
      const int n = field.dim;
      size_t idx = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) CHECK(std::abs(lib(a, b, c, d) + ref[idx++]) < 1e-5);
    }
  }

  TEST_CASE("Ricci tensor") {
    const MatrixXd flat = ricci(euclidean_field(2), vec({1, 2}));
    CHECK(flat.cwiseAbs().maxCoeff() == 0.0);
    const MatrixXd m1 = ricci(submanifold_field(SubmanifoldId::kM1), vec({1, 1}));
    const double want =
        kPsi1 * (kPsi1 + 2 * kPsi2) / (4 * (-1 + 2 * kPsi1) * (-1 + 2 * kPsi1));
    CHECK(m1(1, 1) == doctest::Approx(want).epsilon(1e-9));
    CHECK(m1(1, 1) == doctest::Approx(-0.248086).epsilon(1e-5));
    const McKayParams p(1, 1, 1);
    const MatrixXd r = ricci(mckay_field(), p.coords());
    const MatrixXd printed = mckay_ricci(p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(std::abs(r(i, j) - printed(i, j)) < 1e-8 * std::max(1.0, std::abs(printed(i, j))));
  }

  TEST_CASE("scalar curvature") {
    CHECK(scalar_curvature(unit_sphere_field(), vec({0.9, 2.0})) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(scalar_curvature(hyperbolic_field(), vec({0.3, 1.7})) == doctest::Approx(-2.0).epsilon(1e-8));
    const double m1 = scalar_curvature(submanifold_field(SubmanifoldId::kM1), vec({1, 1}));
    CHECK(m1 == doctest::Approx((kPsi1 + 2 * kPsi2) / (2 * (-1 + 2 * kPsi1) * (-1 + 2 * kPsi1)))
                    .epsilon(1e-9));
    CHECK(m1 == doctest::Approx(-0.301640).epsilon(1e-5));
    // Near the origin of the shape quadrant the pipeline follows the printed
    // formula, whose diagonal limit is -3/4 rather than -1/2.
    const double small = scalar_curvature(mckay_field(), vec({1e-3, 1, 1e-3}));
    CHECK(oracle::rel_err(small, mckay_scalar(McKayParams(1e-3, 1, 1e-3))) < 1e-6);
    CHECK(small == doctest::Approx(-0.751499).epsilon(1e-5));
  }

  TEST_CASE("sectional curvature") {
    const MetricField m1 = submanifold_field(SubmanifoldId::kM1);
    const double s = sectional_curvature(m1, vec({1, 1}), 0, 1);
    CHECK(s == doctest::Approx(scalar_curvature(m1, vec({1, 1})) / 2).epsilon(1e-12));
    CHECK(s == doctest::Approx(-0.150820).epsilon(1e-5));
    CHECK(sectional_curvature(m1, vec({1, 1}), 1, 0) == doctest::Approx(s).epsilon(1e-14));
    const McKayParams p(1, 1, 1);
    const double s12 = sectional_curvature(mckay_field(), p.coords(), 0, 1);
    CHECK(oracle::rel_err(std::abs(s12), std::abs(mckay_sectional(p).s12)) < 1e-8);
    CHECK(sectional_curvature(mckay_field(), p.coords(), 2, 0) ==
          doctest::Approx(sectional_curvature(mckay_field(), p.coords(), 0, 2)).epsilon(1e-14));
    CHECK(sectional_curvature(unit_sphere_field(), vec({1.0, 0.2}), 0, 1) ==
          doctest::Approx(1.0).epsilon(1e-8));
  }

  TEST_CASE("mean curvature") {
    // Diagonal 2-manifold: rho(1) = R_11 / g_11 = sectional.
    const MetricField g = gamma_field();
    const VectorXd x = vec({1.7, 0.8});
    const VectorXd mean = mean_curvature(g, x);
    const MatrixXd ric = ricci(g, x);
    CHECK(mean[0] == doctest::Approx(ric(0, 0) / g.metric(x)(0, 0)).epsilon(1e-12));
    CHECK(mean[0] == doctest::Approx(sectional_curvature(g, x, 0, 1)).epsilon(1e-8));

    const McKayParams p(1, 1, 1);
    const VectorXd m = mean_curvature(mckay_field(), p.coords());
    const double closed = mckay_ricci(p)(1, 1) / (2 * mckay_metric(p)(1, 1));
    CHECK(oracle::rel_err(m[1], closed) < 1e-10);
    const McKayParams q(2, 1, 3);
    CHECK(oracle::rel_err(mean_curvature(mckay_field(), q.coords())[2], mckay_mean(q)[2]) < 1e-8);
  }

  TEST_CASE("full report invariants") {
    const GeometryReport r = full_report(mckay_field(), vec({1, 1, 1}));
    check_symmetries(r, 1e-12);
    const double rebuilt = r.inverse.cwiseProduct(r.ricci).sum();
    CHECK(r.scalar == doctest::Approx(rebuilt).epsilon(1e-14));

    const GeometryReport flat = full_report(euclidean_field(3), vec({1, 2, 3}));
    CHECK(flat.scalar == 0.0);
    CHECK(flat.ricci.cwiseAbs().maxCoeff() == 0.0);
    CHECK(flat.mean.cwiseAbs().maxCoeff() == 0.0);

    // Frozen values at (2, 1, 3).
    const GeometryReport q = full_report(mckay_field(), vec({2, 1, 3}));
    CHECK(q.scalar == doctest::Approx(-1.50385741470998).epsilon(1e-10));
    CHECK(q.riemann(0, 1, 0, 1) == doctest::Approx(0.145316840698).epsilon(1e-9));
    CHECK(q.riemann(0, 2, 1, 2) == doctest::Approx(0.0207714343976).epsilon(1e-9));
    CHECK(q.sectional(0, 1) == doctest::Approx(-0.261282471315).epsilon(1e-9));
    CHECK(q.mean[1] == doctest::Approx(-0.25598471758).epsilon(1e-9));
    check_symmetries(q, 1e-12);
  }

  TEST_CASE("two-dimensional slices: scalar is twice the sectional") {
    for (auto id : {SubmanifoldId::kM1, SubmanifoldId::kM2, SubmanifoldId::kM3})
      for (double a : {0.5, 1.0, 3.0})
        for (double b : {0.7, 2.0}) {
          const MetricField f = submanifold_field(id);
          const GeometryReport r = full_report(f, vec({a, b}));
          CHECK(r.scalar == doctest::Approx(2 * r.sectional(0, 1)).epsilon(1e-10));
        }
  }

  TEST_CASE("scalar curvature is a chart invariant under covariance scaling") {
    for (double s : {0.5, 2.0, 7.0}) {
      const double a = scalar_curvature(mckay_field(), vec({1.5, 1, 2.5}));
      const double b = scalar_curvature(mckay_field(), vec({1.5, s, 2.5}));
      CHECK(oracle::rel_err(b, a) < 1e-8);
    }
  }

  TEST_CASE("domain handling") {
    CHECK_THROWS_AS(full_report(mckay_field(), vec({-1, 1, 1})), DomainError);
    CHECK_THROWS_AS(full_report(mckay_field(), vec({1, 1})), DomainError);
    CHECK_THROWS_AS(full_report(five_gamma_field(), vec({2.0, 3, 1, 0, 0})), DomainError);
  }
}
