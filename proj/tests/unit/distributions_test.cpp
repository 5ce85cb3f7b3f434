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
#include <vector>

#include "doctest.h"
#include "gammageo/distributions.hpp"
#include "gammageo/errors.hpp"
#include "gammageo/sampling_estimation.hpp"
#include "gammageo/special_functions.hpp"
#include "support_oracles.hpp"

using namespace gammageo;

using oracle::wedge_integral;

TEST_SUITE("distributions") {
  TEST_CASE("gamma density spot values") {
    CHECK(gamma_pdf(1.0, GammaParams(1, 1)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(gamma_pdf(2.0, GammaParams(1, 2)) ==
          doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));
    CHECK(gamma_logpdf(2.0, GammaParams(3, 2)) ==
          doctest::Approx(std::log(gamma_pdf(2.0, GammaParams(3, 2)))).epsilon(1e-15));
  }

  TEST_CASE("log-gamma density") {
    for (double n : {0.01, 0.3, 0.5, 0.99}) {
      CHECK(loggamma_pdf(n, LogGammaParams(1, 1)) == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(loggamma_pdf(std::exp(-1.0), LogGammaParams(2, 2)) ==
          doctest::Approx(gamma_pdf(1.0, GammaParams(2, 2)) * std::exp(1.0)).epsilon(1e-14));
  }

  TEST_CASE("log-gamma change of variables reproduces gamma") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> ux(0.05, 8.0), up(0.3, 6.0);
    for (int i = 0; i < 25; ++i) {
      const double x = ux(eng), a = up(eng), b = up(eng);
      CAPTURE(x);
      CHECK(loggamma_pdf(std::exp(-x), LogGammaParams(a, b)) * std::exp(-x) ==
            doctest::Approx(gamma_pdf(x, GammaParams(a, b))).epsilon(1e-12));
    }
  }

  TEST_CASE("three-parameter gamma") {
    CHECK(three_gamma_pdf(2.0, ThreeGammaParams(1, 1, 1)) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    std::mt19937_64 eng(5);
    std::uniform_real_distribution<double> u(0.2, 5.0);
    for (int i = 0; i < 20; ++i) {
      const double x = u(eng), a = u(eng), b = u(eng);
      const double want = gamma_pdf(x, GammaParams(a, b));
      CHECK(oracle::rel_err(three_gamma_pdf(x, ThreeGammaParams(b, a, 0.0)), want) < 1e-14);
    }
    CHECK_THROWS_AS(three_gamma_pdf(0.5, ThreeGammaParams(2, 3, 0.5)), DomainError);
    CHECK_THROWS_AS(ThreeGammaParams(1, 1, -0.1), DomainError);
  }

  TEST_CASE("three-parameter gamma moments") {
    const auto m1 = three_gamma_moments(ThreeGammaParams(1, 1, 0));
    CHECK(m1.mean == 1.0);
    CHECK(m1.sd == 1.0);
    CHECK(m1.cv == 1.0);
    const auto m2 = three_gamma_moments(ThreeGammaParams(2, 4, 3));
    CHECK(m2.mean == doctest::Approx(5.0));
    CHECK(m2.sd == doctest::Approx(1.0));
    CHECK(m2.cv == doctest::Approx(0.2));

    // Monte Carlo: shape 4, rate alpha/beta = 2, shifted by 3.
    std::mt19937_64 eng(2024);
    const int n = 1000000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
      const double x = 3.0 + sample_gamma(4.0, 2.0, eng);
      sum += x;
      sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean - 5.0) < 4 * 1.0 / std::sqrt(double(n)));
    // sd of the sample variance for a gamma: sqrt((mu4 - sigma^4) / n).
    const double mu4 = 3.0 + 6.0 / 4.0;  // kurtosis 3 + 6/alpha, sigma = 1
    CHECK(std::abs(std::sqrt(var) - 1.0) < 4 * std::sqrt((mu4 - 1.0) / n) / 2.0);
  }

  TEST_CASE("McKay density: parametrizations agree") {
    std::mt19937_64 eng(3);
    std::uniform_real_distribution<double> u(0.3, 4.0);
    for (int i = 0; i < 20; ++i) {
      const McKayParams p(u(eng), u(eng), u(eng));
      const double x = u(eng), y = x + u(eng);
      const McKayRateParams r(p.alpha1(), std::sqrt(p.alpha1() / p.sigma12()), p.alpha2());
      CHECK(oracle::rel_err(mckay_pdf({x, y}, p), mckay_pdf({x, y}, r)) < 1e-14);
    }
    CHECK(mckay_pdf({1, 2}, McKayParams(1, 1, 1)) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  }

  TEST_CASE("McKay density against a direct transcription") {
    // c^(a1+a2) x^(a1-1) (y-x)^(a2-1) e^(-c y) / (Gamma(a1) Gamma(a2)).
    const double a1 = 2.5, a2 = 1.7, c = 1.3;
    for (double x : {0.2, 1.0, 3.0})
      for (double w : {0.1, 0.9, 2.2}) {
        const double want = std::pow(c, a1 + a2) * std::pow(x, a1 - 1) * std::pow(w, a2 - 1) *
                            std::exp(-c * (x + w)) / (std::tgamma(a1) * std::tgamma(a2));
        CHECK(oracle::rel_err(mckay_pdf({x, x + w}, McKayRateParams(a1, c, a2)), want) < 1e-13);
      }
  }

  TEST_CASE("McKay normalizes over the wedge") {
    for (const auto& [a1, s, a2] : std::vector<std::tuple<double, double, double>>{
             {1, 1, 1}, {2, 1, 3}, {0.7, 0.5, 1.5}, {4, 2, 0.8}, {1.5, 3, 2.5}}) {
      const McKayParams p(a1, s, a2);
      CAPTURE(a1);
      const double total =
          wedge_integral([&](double x, double y) { return mckay_pdf({x, y}, p); });
      CHECK(std::abs(total - 1.0) < 1e-6);
    }
  }

  TEST_CASE("marginals") {
    const McKayParams p(2, 1, 3);
    const auto m = mckay_marginals(p);
    CHECK(std::abs(oracle::integrate_to_inf([&](double x) { return m.x.pdf(x); }, 0.0) - 1.0) <
          1e-8);
    const auto m1 = mckay_marginals(McKayParams(1, 1, 1));
    CHECK(m1.y.shape == 2.0);
    CHECK(m1.y.rate == 1.0);
    CHECK(m1.y.pdf(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    for (double x : {0.3, 0.8, 1.5, 2.5, 4.0}) {
      const double fx = oracle::integrate_to_inf([&](double y) { return mckay_pdf({x, y}, p); }, x);
      CHECK(std::abs(fx - m.x.pdf(x)) < 1e-6);
    }
    for (double y : {0.5, 1.5, 3.0, 6.0}) {
      const double fy = oracle::integrate([&](double x) { return mckay_pdf({x, y}, p); }, 0.0, y);
      CHECK(std::abs(fy - m.y.pdf(y)) < 1e-6);
    }
  }

  TEST_CASE("alpha1 = 1 makes the X marginal exponential; both exponential is infeasible") {
    for (double s : {0.5, 1.0, 3.0})
      for (double a2 : {0.5, 1.0, 4.0}) {
        const auto m = mckay_marginals(McKayParams(1.0, s, a2));
        const double c = 1.0 / std::sqrt(s);
        for (double x : {0.1, 1.0, 5.0}) {
          CHECK(oracle::rel_err(m.x.pdf(x), c * std::exp(-c * x)) < 1e-14);
        }
      }
    for (double a1 : {0.5, 1.0, 2.0})
      for (double a2 : {1e-9, 0.5, 1.0}) CHECK_FALSE(both_marginals_exponential_feasible(a1, a2));
  }

  TEST_CASE("correlation and covariance") {
    CHECK(mckay_correlation(McKayParams(1, 1, 3)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mckay_correlation(McKayParams(2.2, 0.4, 2.2)) ==
          doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(mckay_covariance(McKayRateParams(3, 2, 1)) == doctest::Approx(0.75).epsilon(1e-15));
    const McKayRateParams r(3.0, 2.0, 1.0);
    const McKayRateParams back = r.to_sigma().to_rate();
    CHECK(std::abs(back.alpha1() - 3.0) <= 1e-15);
    CHECK(std::abs(back.c() - 2.0) <= 2e-15 * 2.0);
    CHECK(std::abs(back.alpha2() - 1.0) <= 1e-15);
    CHECK(r.to_sigma().sigma12() == doctest::Approx(mckay_covariance(r)).epsilon(1e-15));
  }

  TEST_CASE("c from sigma") {
    CHECK(c_from_sigma(1, 1) == 1.0);
    CHECK(c_from_sigma(4, 1) == 2.0);
    for (double a1 : {0.3, 1.0, 7.0})
      for (double s : {0.2, 1.0, 9.0}) {
        CHECK(oracle::rel_err(sigma_from_c(a1, c_from_sigma(a1, s)), s) <= 2e-15);
      }
  }

  TEST_CASE("five-parameter density") {
    std::mt19937_64 eng(8);
    std::uniform_real_distribution<double> u(0.3, 4.0), ua(2.1, 6.0);
    for (int i = 0; i < 20; ++i) {
      const double a1 = ua(eng), s = u(eng), a2 = ua(eng);
      const double x = u(eng), y = x + u(eng);
      CHECK(oracle::rel_err(five_gamma_pdf({x, y}, FiveGammaParams(a1, a2, s, 0, 0)),
                            mckay_pdf({x, y}, McKayParams(a1, s, a2))) < 1e-14);
    }
    // X marginal is a three-parameter gamma with shape a1, rate c, shift g1.
    const FiveGammaParams p(3, 3, 1, 0.5, 1);
    const double c = p.rate();
    for (double x : {0.7, 1.0, 1.8, 3.0, 5.0}) {
      const double fx = oracle::integrate_to_inf(
          [&](double y) { return five_gamma_pdf({x, y}, p); }, x - 0.5 + 1.0);
      CHECK(std::abs(fx - three_gamma_pdf(x, ThreeGammaParams(3.0 / c, 3.0, 0.5))) < 1e-6);
    }
    const double total = wedge_integral(
        [&](double x, double y) { return five_gamma_pdf({x, y}, p); }, 0.5, 0.5);
    CHECK(std::abs(total - 1.0) < 1e-6);
  }

  TEST_CASE("the (y - x) reading of the shifted density is the normalized one") {
    // The competing transcription with (y - g2 + x - g1) in the second factor
    // does not integrate to one; the adopted form does.
    const double a1 = 3, a2 = 3, s = 1, g1 = 0.5, g2 = 1;
    const double c = std::sqrt(a1 / s);
    auto plus_variant = [&](double x, double y) {
      const double u = x - g1, v = y - g2;
      return std::exp((a1 + a2) * std::log(c) + (a1 - 1) * std::log(u) +
                      (a2 - 1) * std::log(v + u) - c * v - std::lgamma(a1) - std::lgamma(a2));
    };
    const double adopted = wedge_integral(
        [&](double x, double y) { return five_gamma_pdf({x, y}, FiveGammaParams(a1, a2, s, g1, g2)); },
        g1, g2 - g1);
    const double rival = wedge_integral(plus_variant, g1, g2 - g1);
    CHECK(std::abs(adopted - 1.0) < 1e-6);
    CHECK(std::abs(rival - 1.0) > 0.1);
  }

  TEST_CASE("normalization across parameter grids") {
    int k = 0;
    for (double a : {0.6, 1.0, 1.7, 3.7, 9.0})
      for (double b : {0.4, 1.9}) {
        ++k;
        CAPTURE(a);
        CAPTURE(b);
        const GammaParams gp(a, b);
        CHECK(std::abs(oracle::integrate_to_inf([&](double x) { return gamma_pdf(x, gp); }, 0.0) -
                       1.0) < 1e-8);
        const LogGammaParams lp(a, b);
        CHECK(std::abs(oracle::integrate([&](double n) { return loggamma_pdf(n, lp); }, 0.0, 1.0) -
                       1.0) < 1e-6);
        const ThreeGammaParams tp(b, a, 0.5 * k);
        CHECK(std::abs(oracle::integrate_to_inf([&](double x) { return three_gamma_pdf(x, tp); },
                                                0.5 * k) -
                       1.0) < 1e-8);
      }
    CHECK(k == 10);
    CHECK(std::abs(oracle::integrate([&](double n) { return loggamma_pdf(n, LogGammaParams(2.5, 0.8)); },
                                     0.0, 1.0) -
                   1.0) < 1e-8);
    for (double a1 : {2.5, 4.0})
      for (double a2 : {2.2, 3.5})
        for (double g : {0.0, 0.7}) {
          const FiveGammaParams p(a1, a2, 1.3, g, 2 * g);
          const double total = wedge_integral(
              [&](double x, double y) { return five_gamma_pdf({x, y}, p); }, g, g);
          CHECK(std::abs(total - 1.0) < 1e-6);
        }
    for (double a1 : {0.5, 1.0, 3.0})
      for (double a2 : {0.6, 2.0})
        for (double s : {0.5, 2.0}) {
          const McKayParams p(a1, s, a2);
          const double total =
              wedge_integral([&](double x, double y) { return mckay_pdf({x, y}, p); });
          CHECK(std::abs(total - 1.0) < 1e-6);
        }
  }

  TEST_CASE("support and boundary conventions") {
    CHECK_THROWS_AS(gamma_pdf(0.0, GammaParams(2, 1)), DomainError);
    CHECK_THROWS_AS(gamma_pdf(-1.0, GammaParams(2, 1)), DomainError);
    CHECK_THROWS_AS(loggamma_pdf(0.0, LogGammaParams(2, 1)), DomainError);
    CHECK_THROWS_AS(loggamma_pdf(1.0, LogGammaParams(2, 1)), DomainError);
    CHECK_THROWS_AS(mckay_pdf({2.0, 1.0}, McKayParams(2, 1, 2)), DomainError);
    CHECK_THROWS_AS(mckay_pdf({-1.0, 1.0}, McKayParams(2, 1, 2)), DomainError);
    // On the edge y == x: 0 for a2 > 1, the finite limit for a2 == 1,
    // DomainError for a2 < 1.
    CHECK(mckay_pdf({1.0, 1.0}, McKayParams(2, 1, 2)) == 0.0);
    CHECK(mckay_pdf({1.0, 1.0}, McKayParams(2, 1, 1)) ==
          doctest::Approx(mckay_pdf({1.0, 1.0 + 1e-12}, McKayParams(2, 1, 1))).epsilon(1e-10));
    CHECK_THROWS_AS(mckay_pdf({1.0, 1.0}, McKayParams(2, 1, 0.5)), DomainError);
    CHECK(mckay_pdf({0.0, 1.0}, McKayParams(2, 1, 2)) == 0.0);
    CHECK(mckay_pdf({0.0, 1.0}, McKayParams(1, 1, 2)) > 0.0);
    CHECK_THROWS_AS(mckay_pdf({0.0, 1.0}, McKayParams(0.5, 1, 2)), DomainError);
    CHECK(five_gamma_pdf({0.5, 2.0}, FiveGammaParams(3, 3, 1, 0.5, 1)) == 0.0);
    CHECK_THROWS_AS(five_gamma_pdf({0.4, 2.0}, FiveGammaParams(3, 3, 1, 0.5, 1)), DomainError);
    CHECK(std::isfinite(mckay_logpdf({3.0, 9.0}, McKayParams(300, 1, 200))));
  }

  TEST_CASE("parameter domains") {
    CHECK_THROWS_AS(GammaParams(0, 1), DomainError);
    CHECK_THROWS_AS(GammaParams(1, -1), DomainError);
    CHECK_THROWS_AS(LogGammaParams(1, 0), DomainError);
    CHECK_THROWS_AS(McKayParams(1, 0, 1), DomainError);
    CHECK_THROWS_AS(McKayParams(1, 1, std::nan("")), DomainError);
    CHECK_THROWS_AS(McKayRateParams(1, -2, 1), DomainError);
    CHECK_THROWS_AS(FiveGammaParams(2.0, 3, 1, 0, 0), DomainError);
    CHECK_THROWS_AS(FiveGammaParams(3, 3, 1, -0.1, 0), DomainError);
    CHECK_NOTHROW(FiveGammaParams::unchecked(0.5, 0.5, 1, 0, 0));
  }
}
