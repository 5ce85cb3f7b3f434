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
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "gammageo/closed_forms.hpp"
#include "gammageo/distributions.hpp"
#include "gammageo/errors.hpp"
#include "gammageo/fisher_oracle.hpp"
#include "gammageo/geometry_core.hpp"
#include "gammageo/metric_fields.hpp"
#include "gammageo/verification.hpp"
#include "support_oracles.hpp"

using namespace gammageo;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

const double kPsi1 = std::numbers::pi * std::numbers::pi / 6;

std::vector<McKayParams> standard_grid() {
  std::vector<McKayParams> out;
  for (double a1 : {0.5, 1.0, 2.0, 4.0})
    for (double s : {0.5, 1.0, 2.0})
      for (double a2 : {0.5, 1.0, 2.0, 4.0}) out.emplace_back(a1, s, a2);
  return out;
}

Eigen::Vector2d slice_coords(SubmanifoldId id, const McKayParams& p) {
  switch (id) {
    case SubmanifoldId::kM1: return {p.sigma12(), p.alpha2()};
    case SubmanifoldId::kM2: return {p.alpha1(), p.sigma12()};
    case SubmanifoldId::kM3: return {p.alpha1(), p.alpha2()};
  }
  return {};
}

}  // namespace

TEST_SUITE("closed_forms") {
  TEST_CASE("McKay metric at substitution points") {
    const Eigen::Matrix3d g = mckay_metric(McKayParams(1, 1, 1));
    Eigen::Matrix3d want;
    want << -0.5 + kPsi1, 0, -0.5, 0, 0.5, 0.5, -0.5, 0.5, kPsi1;
    CHECK((g - want).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(mckay_metric(McKayParams(2, 1, 2))(0, 1) == 0.0);
    CHECK(g == g.transpose());
    // Hand-derived chain-rule expression, independent of the transcription.
    for (const McKayParams& p : standard_grid()) {
      const auto ref = oracle::mckay_fisher(p.alpha1(), p.sigma12(), p.alpha2());
      const Eigen::Matrix3d m = mckay_metric(p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(m(i, j) - ref(i, j)) < 1e-12 * (1 + std::abs(ref(i, j))));
    }
  }

  TEST_CASE("McKay metric against the quadrature oracle") {
    const FisherMatrix f = fisher_bivariate_wedge(mckay_family(), Eigen::Vector3d(2, 1, 3));
    CHECK((f.entries - MatrixXd(mckay_metric(McKayParams(2, 1, 3)))).cwiseAbs().maxCoeff() < 1e-5);
  }

  TEST_CASE("McKay inverse") {
    const McKayParams p(1, 1, 1);
    CHECK(mckay_metric_inverse(p)(0, 2) == doctest::Approx(1 / (kPsi1 * (2 * kPsi1 - 2))).epsilon(1e-14));
    CHECK(mckay_metric_inverse(p)(0, 2) == doctest::Approx(0.4713091).epsilon(1e-6));
    CHECK((mckay_metric(p) * mckay_metric_inverse(p) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
    for (const McKayParams& q : standard_grid()) {
      const Eigen::Matrix3d inv = mckay_metric_inverse(q);
      CHECK((mckay_metric(q) * inv - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
      const MatrixXd la = invert_metric(mckay_metric(q));
      CHECK((inv - Eigen::Matrix3d(la)).cwiseAbs().maxCoeff() < 1e-10 * (1 + la.cwiseAbs().maxCoeff()));
    }
  }

  TEST_CASE("McKay curvature components") {
    const McKayParams p(1, 1, 1);
    const double psi1 = kPsi1;
    const double want = -psi1 * psi1 / (16 * (2 * psi1 - 2 * psi1 * psi1));
    CHECK(mckay_riemann_components(p).r1223 == doctest::Approx(want).epsilon(1e-12));
    CHECK(mckay_riemann_components(p).r1223 == doctest::Approx(0.0797).epsilon(1e-3));
  }

  TEST_CASE("McKay scalar depends on shapes only") {
    for (double a1 : {0.3, 1.0, 2.5})
      for (double a2 : {0.4, 3.0}) {
        const double base = mckay_scalar(McKayParams(a1, 1.3, a2));
        CHECK(mckay_scalar(McKayParams(a1, 7 * 1.3, a2)) == base);
        CHECK(mckay_scalar(a1, a2) == base);
      }
  }

  TEST_CASE("McKay scalar near the origin") {
    // Monotone approach from below; the printed formula tends to -3/4, not -1/2.
    const double r1 = mckay_scalar(0.1, 0.1), r2 = mckay_scalar(0.01, 0.01), r3 = mckay_scalar(1e-3, 1e-3);
    CHECK(r1 < r2);
    CHECK(r2 < r3);
    CHECK(r3 == doctest::Approx(-0.75150).epsilon(1e-4));
    CHECK(mckay_scalar(1e-6, 1e-6) == doctest::Approx(-0.75).epsilon(1e-4));
  }

  TEST_CASE("mean curvature is consistent with printed Ricci and metric") {
    for (const McKayParams& p : {McKayParams(2, 1, 3), McKayParams(1, 1, 1), McKayParams(0.5, 2, 4)}) {
      const Eigen::Vector3d m = mckay_mean(p);
      const Eigen::Matrix3d r = mckay_ricci(p);
      const Eigen::Matrix3d g = mckay_metric(p);
      for (int l = 0; l < 3; ++l) CHECK(oracle::rel_err(m[l], r(l, l) / (2 * g(l, l))) < 1e-10);
    }
  }

  TEST_CASE("five-manifold metric") {
    const FiveGammaParams p(3, 3, 1, 0.5, 1);
    const Eigen::Matrix<double, 5, 5> g = five_manifold_metric(p);
    CHECK(g == g.transpose());
    CHECK(g(2, 3) == 0.0);
    // Shared (alpha1, alpha2, sigma12) block at zero location equals the
    // McKay metric after reordering to (alpha1, sigma12, alpha2).
    for (double a1 : {2.5, 3.0, 5.0})
      for (double a2 : {2.2, 4.0})
        for (double s : {0.5, 2.0}) {
          const Eigen::Matrix<double, 5, 5> f = five_manifold_metric(FiveGammaParams(a1, a2, s, 0, 0));
          const Eigen::Matrix3d m = mckay_metric(McKayParams(a1, s, a2));
          const int perm[3] = {0, 2, 1};
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(f(perm[i], perm[j]) == doctest::Approx(m(i, j)).epsilon(1e-13));
        }
    CHECK_THROWS_AS(five_manifold_metric(FiveGammaParams::unchecked(2, 3, 1, 0, 0)), DomainError);
    const FisherMatrix f = fisher_bivariate_wedge(five_gamma_family(), p.coords());
    CHECK((f.entries - MatrixXd(g)).cwiseAbs().maxCoeff() < 1e-4);
  }

  TEST_CASE("submanifold geometry") {
    const ClosedFormReport m1 = submanifold_geometry(SubmanifoldId::kM1, {1, 1});
    CHECK(m1.metric(0, 0) == 0.5);
    CHECK(m1.metric(0, 1) == 0.5);
    CHECK(m1.metric(1, 1) == doctest::Approx(kPsi1).epsilon(1e-15));
    CHECK(m1.find("scalar", {})->value == doctest::Approx(-0.301640).epsilon(1e-5));
    CHECK(mckay_correlation(McKayParams(1, 1, 1)) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m1.find("christoffel", {0, 1, 1}) != nullptr);
    CHECK(m1.find("riemann", {0, 1, 0, 1}) != nullptr);
    CHECK(m1.find("nonsense", {}) == nullptr);

    // M2's scalar in alpha1 is M1's scalar in alpha2.
    for (double a : {0.1, 0.7, 1.0, 3.0, 40.0}) {
      const double r1 = submanifold_geometry(SubmanifoldId::kM1, {1.0, a}).find("scalar", {})->value;
      const double r2 = submanifold_geometry(SubmanifoldId::kM2, {a, 2.5}).find("scalar", {})->value;
      CHECK(r2 == doctest::Approx(r1).epsilon(1e-13));
    }
    // Slice scalars carry no covariance dependence.
    for (auto id : {SubmanifoldId::kM1, SubmanifoldId::kM2}) {
      const int k = id == SubmanifoldId::kM1 ? 0 : 1;
      Eigen::Vector2d x(1.7, 1.7);
      const double base = submanifold_geometry(id, x).find("scalar", {})->value;
      x[k] = 9.0;
      CHECK(submanifold_geometry(id, x).find("scalar", {})->value == doctest::Approx(base).epsilon(1e-14));
    }
    CHECK_THROWS_AS(submanifold_geometry(SubmanifoldId::kM3, {0.0, 1.0}), DomainError);
  }

  TEST_CASE("slice inverses and Christoffels over the standard grid") {
    for (auto id : {SubmanifoldId::kM1, SubmanifoldId::kM2, SubmanifoldId::kM3}) {
      const MetricField field = submanifold_field(id);
      for (const McKayParams& p : standard_grid()) {
        const Eigen::Vector2d x = slice_coords(id, p);
        const ClosedFormReport r = submanifold_geometry(id, x);
        CHECK((r.metric * r.inverse - MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
        const Tensor3 gam = christoffels(field, x);
        for (int k = 0; k < 2; ++k)
          for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
              const ClosedFormEntry* e = r.find("christoffel", {k, i, j});
              REQUIRE(e != nullptr);
              CHECK(std::abs(e->value - gam(k, i, j)) <= 1e-8 * std::max(std::abs(gam(k, i, j)), 1e-1));
            }
      }
    }
  }

  TEST_CASE("rho maps") {
    CHECK(rho_maps(SubmanifoldId::kM1, 0.5) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(rho_maps(SubmanifoldId::kM2, 1 / std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 1; i <= 50; ++i) {
      const double rho = i / 51.0;
      const double a2 = rho_maps(SubmanifoldId::kM1, rho);
      CHECK(std::abs(mckay_correlation(McKayParams(1, 1, a2)) - rho) < 1e-15);
      const double a1 = rho_maps(SubmanifoldId::kM2, rho);
      CHECK(std::abs(mckay_correlation(McKayParams(a1, 1, 1)) - rho) < 1e-15);
    }
    CHECK_THROWS_AS(rho_maps(SubmanifoldId::kM3, 0.5), DomainError);
    CHECK_THROWS_AS(rho_maps(SubmanifoldId::kM1, 0.0), DomainError);
    CHECK_THROWS_AS(rho_maps(SubmanifoldId::kM1, 1.0), DomainError);
  }

  TEST_CASE("scalar against correlation curves") {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
    const auto m1 = scalar_vs_rho_curve(SubmanifoldId::kM1, grid);
    const auto m2 = scalar_vs_rho_curve(SubmanifoldId::kM2, grid);
    REQUIRE(m1.size() == grid.size());
    for (size_t i = 0; i < m1.size(); ++i) {
      CHECK(m1[i].first == grid[i]);
      CHECK(m1[i].second > -1.0 / 3);
      CHECK(m1[i].second < 0.0);
      if (i > 0) {
        CHECK(m1[i].second > m1[i - 1].second);
        CHECK(m2[i].second < m2[i - 1].second);
      }
      // Mirror: rho on M2 and sqrt(1 - rho^2) on M1 give swapped shapes.
      const double mirrored = std::sqrt(1 - grid[i] * grid[i]);
      const double r1 = scalar_vs_rho_curve(SubmanifoldId::kM1, {mirrored})[0].second;
      CHECK(m2[i].second == doctest::Approx(r1).epsilon(1e-12));
    }
    CHECK(scalar_vs_rho_curve(SubmanifoldId::kM1, {0.01})[0].second == doctest::Approx(-1.0 / 3).epsilon(0.03));
    CHECK_THROWS_AS(scalar_vs_rho_curve(SubmanifoldId::kM3, {0.5}), DomainError);
  }

  TEST_CASE("near-singular denominator flag") {
    CHECK_FALSE(mckay_report(McKayParams(2, 1, 3)).near_singular);
    CHECK(mckay_report(McKayParams(2, 1, 3)).denominator == doctest::Approx(mckay_denominator(McKayParams(2, 1, 3))));
  }
}

TEST_SUITE("verification") {
  TEST_CASE("tolerance") {
    const Tolerance t;
    CHECK(t.accepts(1.0, 1.0 + 5e-8));
    CHECK_FALSE(t.accepts(1.0, 1.0 + 5e-7));
    CHECK(t.accepts(0.0, 5e-10));
    CHECK_FALSE(t.accepts(0.0, 5e-9));
  }

  TEST_CASE("index labels are one-based") {
    CHECK(index_label({0, 1, 0, 2}) == "1213");
    CHECK(index_label({}).empty());
  }

  TEST_CASE("McKay closed forms against the pipeline") {
    // Away from (1, 1, 1) the printed R_1323 is the only disagreement.
    for (const McKayParams& p : {McKayParams(2, 1, 3), McKayParams(0.5, 2, 4), McKayParams(4, 0.5, 1)}) {
      const VerificationReport v =
          verify_against_pipeline(mckay_report(p), full_report(mckay_field(), p.coords()));
      REQUIRE(v.errata.size() == 1);
      CHECK(index_label(v.errata[0].index) == "1323");
      CHECK(v.errata[0].numeric == doctest::Approx(mckay_r1323_corrected(p)).epsilon(1e-7));
      size_t riemann_rows = 0;
      for (const Comparison& c : v.rows) riemann_rows += c.object == "riemann";
      CHECK(riemann_rows == 81);
    }
    const McKayParams one(1, 1, 1);
    CHECK(verify_against_pipeline(mckay_report(one), full_report(mckay_field(), one.coords())).all_agree());
  }

  TEST_CASE("slice closed forms against the pipeline") {
    for (const McKayParams& p : standard_grid()) {
      for (auto id : {SubmanifoldId::kM1, SubmanifoldId::kM2}) {
        const Eigen::Vector2d x = slice_coords(id, p);
        const VerificationReport v =
            verify_against_pipeline(submanifold_geometry(id, x), full_report(submanifold_field(id), x));
        CHECK(v.all_agree());
      }
      const Eigen::Vector2d x = slice_coords(SubmanifoldId::kM3, p);
      const VerificationReport v = verify_against_pipeline(submanifold_geometry(SubmanifoldId::kM3, x),
                                                           full_report(submanifold_field(SubmanifoldId::kM3), x));
      for (const Erratum& e : v.errata) {
        CHECK(index_label(e.index) == "11");
        CHECK(e.numeric == doctest::Approx(m3_ricci11_corrected(x[0], x[1])).epsilon(1e-7));
      }
    }
  }

  TEST_CASE("oracle comparison flags a corrupted metric") {
    const Eigen::Vector3d x(2, 1, 3);
    const FisherMatrix f = fisher_bivariate_wedge(mckay_family(), x);
    MatrixXd g = mckay_metric(McKayParams(2, 1, 3));
    Tolerance tol;
    tol.rel = 0;
    tol.abs_floor = 1e-5;
    CHECK(verify_metric_against_oracle("mckay", g, f, tol).all_agree());
    g(0, 2) += 1e-3;
    g(2, 0) += 1e-3;
    const VerificationReport bad = verify_metric_against_oracle("mckay", g, f, tol);
    CHECK_FALSE(bad.all_agree());
    CHECK(bad.max_abs_dev() == doctest::Approx(1e-3).epsilon(1e-2));
  }
}
