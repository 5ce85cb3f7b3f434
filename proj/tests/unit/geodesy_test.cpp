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

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "gammageo/errors.hpp"
#include "gammageo/geodesy.hpp"
#include "gammageo/metric_fields.hpp"
#include "gammageo/parallel.hpp"

using namespace gammageo;
using Eigen::VectorXd;

namespace {

VectorXd vec3(double a, double b, double c) { return Eigen::Vector3d(a, b, c); }

VectorXd random_mckay(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.8, 3.0);
  return vec3(d(rng), d(rng), d(rng));
}

}  // namespace

TEST_SUITE("geodesy") {
  TEST_CASE("zero velocity stays put") {
    const VectorXd x = vec3(1, 1, 1);
    const GeodesicPath path = integrate_geodesic(mckay_field(), x, VectorXd::Zero(3), 1.0, 50);
    for (const VectorXd& p : path.points) CHECK(p == x);
    CHECK(path.energy == 0.0);
  }

  TEST_CASE("Euclidean geodesics are straight lines") {
    const VectorXd x = vec3(0.5, -1, 2), v = vec3(1, 2, -0.3);
    const GeodesicPath path = integrate_geodesic(euclidean_field(3), x, v, 2.0, 64);
    REQUIRE(path.points.size() == 65);
    for (size_t i = 0; i < path.points.size(); ++i) {
      const double t = 2.0 * static_cast<double>(i) / 64;
      CHECK((path.points[i] - (x + t * v)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("speed is conserved") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n(0, 0.3);
    for (int trial = 0; trial < 5; ++trial) {
      const VectorXd x = random_mckay(rng);
      const VectorXd v = vec3(n(rng), n(rng), n(rng));
      const GeodesicPath path = integrate_geodesic(mckay_field(), x, v, 1.0, 200);
      for (size_t i = 0; i < path.points.size(); ++i) {
        const double e = speed_squared(mckay_field(), path.points[i], path.velocities[i]);
        CHECK(std::abs(e - path.energy) <= 1e-6 * path.energy);
      }
    }
  }

  TEST_CASE("fourth-order convergence under step halving") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n(0, 0.3);
    const VectorXd x = vec3(1, 1, 1);
    const VectorXd v = vec3(n(rng), n(rng), n(rng));
    const VectorXd ref = integrate_geodesic(mckay_field(), x, v, 1.0, 1024).points.back();
    auto err = [&](int steps) {
      return (integrate_geodesic(mckay_field(), x, v, 1.0, steps).points.back() - ref).norm();
    };
    const double e1 = err(16), e2 = err(32), e3 = err(64);
    CHECK(e1 / e2 == doctest::Approx(16).epsilon(0.25));
    CHECK(e2 / e3 == doctest::Approx(16).epsilon(0.25));
  }

  TEST_CASE("integration errors") {
    CHECK_THROWS_AS(integrate_geodesic(mckay_field(), vec3(1, 1, 1), vec3(1, 0, 0), 1.0, 8), DomainError);
    // Straight into alpha1 = 0.
    try {
      integrate_geodesic(euclidean_field(3), vec3(1, 1, 1), vec3(-1, 0, 0), 1.0, 32);
    } catch (...) {
      FAIL("Euclidean chart has no boundary");
    }
    bool exited = false;
    try {
      integrate_geodesic(mckay_field(), vec3(0.2, 1, 1), vec3(-5, 0, 0), 1.0, 64);
    } catch (const DomainExitError& e) {
      exited = true;
      CHECK(e.last_point()[0] > 0);
      CHECK(e.t() < 1.0);
    }
    CHECK(exited);
  }

  TEST_CASE("distance basics") {
    const VectorXd p = vec3(1, 1, 1);
    const ShootingResult self = geodesic_distance(mckay_field(), p, p);
    CHECK(self.converged);
    CHECK(self.distance == 0.0);

    const VectorXd a = vec3(0.3, 0, 0), b = vec3(1.3, 2, -1);
    const ShootingResult flat = geodesic_distance(euclidean_field(3), a, b);
    CHECK(flat.distance == doctest::Approx((b - a).norm()).epsilon(1e-10));

    const VectorXd q = vec3(2, 1.5, 1.2);
    const ShootingResult r = geodesic_distance(mckay_field(), p, q);
    REQUIRE(r.converged);
    CHECK(r.residual < 1e-9);
    CHECK(r.method == "shooting");
    // The exponential map with the returned velocity lands on q.
    const GeodesicPath path = integrate_geodesic(mckay_field(), p, r.initial_velocity, 1.0, 200);
    CHECK((path.points.back() - q).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(r.distance == doctest::Approx(std::sqrt(path.energy)).epsilon(1e-12));
    CHECK(r.distance == doctest::Approx(0.858097).epsilon(1e-5));

    // Positive on distinct points.
    const ShootingResult tiny = geodesic_distance(mckay_field(), p, vec3(1 + 1e-8, 1, 1));
    CHECK(tiny.distance > 0);
  }

  TEST_CASE("symmetry and triangle inequality") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
      const VectorXd p = random_mckay(rng), q = random_mckay(rng);
      const ShootingResult pq = geodesic_distance(mckay_field(), p, q);
      const ShootingResult qp = geodesic_distance(mckay_field(), q, p);
      REQUIRE(pq.converged);
      REQUIRE(qp.converged);
      CHECK(std::abs(pq.distance - qp.distance) <= 1e-5 * pq.distance);
    }
    for (int i = 0; i < 10; ++i) {
      const VectorXd p = random_mckay(rng), q = random_mckay(rng), r = random_mckay(rng);
      const double pr = geodesic_distance(mckay_field(), p, r).distance;
      const double pq = geodesic_distance(mckay_field(), p, q).distance;
      const double qr = geodesic_distance(mckay_field(), q, r).distance;
      CHECK(pr <= pq + qr + 1e-5);
    }
  }

  TEST_CASE("distance to a coordinate slice") {
    const std::vector<std::pair<double, double>> wide = {{0.4, 2.5}, {0.4, 4.0}};
    const SliceDistance on = distance_to_submanifold(mckay_field(), vec3(1, 1.5, 2), 0, 1.0, wide);
    CHECK(on.distance < 1e-9);

    // Box sized so the 40 x 40 brute-force grid resolves distance to 1e-3.
    const std::vector<std::pair<double, double>> box = {{0.9, 1.6}, {1.1, 2.0}};
    const VectorXd p = vec3(1.6, 1.0, 2.0);
    const SliceDistance s = distance_to_submanifold(mckay_field(), p, 0, 1.0, box);
    CHECK(s.converged);
    CHECK_FALSE(s.boundary_minimum);
    CHECK(s.foot[0] == 1.0);
    // The oracle only needs ~1e-6 accuracy, well inside the 1e-3 check.
    GeodesicConfig coarse;
    coarse.steps = 64;
    coarse.residual_tol = 1e-7;
    const int n = 40;
    std::vector<double> d(n * n);
    parallel_for(d.size(), [&](std::size_t k) {
      const int i = static_cast<int>(k) / n, j = static_cast<int>(k) % n;
      const VectorXd q = vec3(1.0, box[0].first + (box[0].second - box[0].first) * i / (n - 1),
                              box[1].first + (box[1].second - box[1].first) * j / (n - 1));
      const ShootingResult r = geodesic_distance(mckay_field(), p, q, coarse);
      d[k] = r.converged ? r.distance : INFINITY;
    });
    const double best = *std::min_element(d.begin(), d.end());
    CHECK(s.distance <= best + 1e-9);
    CHECK(std::abs(s.distance - best) < 1e-3);
  }
}
