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

#include "gammageo/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gammageo/errors.hpp"
#include "gammageo/special_functions.hpp"

namespace gammageo {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

// (shape - 1) * log(t) on t >= 0 with the edge convention at t == 0.
double log_power_factor(double t, double shape, const char* where) {
  if (!(t >= 0.0)) throw DomainError(std::string(where) + ": point outside support");
  if (t > 0.0) return (shape - 1.0) * std::log(t);
  if (shape > 1.0) return -std::numeric_limits<double>::infinity();
  if (shape == 1.0) return 0.0;
  throw DomainError(std::string(where) + ": density diverges on the support boundary");
}

}  // namespace

GammaParams::GammaParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require(positive(alpha), "GammaParams: alpha must be > 0");
  require(positive(beta), "GammaParams: beta must be > 0");
}

LogGammaParams::LogGammaParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require(positive(alpha), "LogGammaParams: alpha must be > 0");
  require(positive(beta), "LogGammaParams: beta must be > 0");
}

ThreeGammaParams::ThreeGammaParams(double beta, double alpha, double gamma_loc)
    : beta_(beta), alpha_(alpha), gamma_loc_(gamma_loc) {
  require(positive(beta), "ThreeGammaParams: beta must be > 0");
  require(positive(alpha), "ThreeGammaParams: alpha must be > 0");
  require(std::isfinite(gamma_loc) && gamma_loc >= 0.0,
          "ThreeGammaParams: gamma must be >= 0");
}

McKayParams::McKayParams(double alpha1, double sigma12, double alpha2)
    : alpha1_(alpha1), sigma12_(sigma12), alpha2_(alpha2) {
  require(positive(alpha1), "McKayParams: alpha1 must be > 0");
  require(positive(sigma12), "McKayParams: sigma12 must be > 0");
  require(positive(alpha2), "McKayParams: alpha2 must be > 0");
}

double McKayParams::rate() const noexcept { return std::sqrt(alpha1_ / sigma12_); }

McKayRateParams McKayParams::to_rate() const { return {alpha1_, rate(), alpha2_}; }

McKayParams McKayParams::from_coords(const Eigen::VectorXd& p) {
  require(p.size() == 3, "McKayParams: expected 3 coordinates");
  return {p[0], p[1], p[2]};
}

McKayRateParams::McKayRateParams(double alpha1, double c, double alpha2)
    : alpha1_(alpha1), c_(c), alpha2_(alpha2) {
  require(positive(alpha1), "McKayRateParams: alpha1 must be > 0");
  require(positive(c), "McKayRateParams: c must be > 0");
  require(positive(alpha2), "McKayRateParams: alpha2 must be > 0");
}

McKayParams McKayRateParams::to_sigma() const {
  return {alpha1_, sigma_from_c(alpha1_, c_), alpha2_};
}

FiveGammaParams::FiveGammaParams(Unchecked, double alpha1, double alpha2,
                                 double sigma12, double gamma1, double gamma2)
    : alpha1_(alpha1), alpha2_(alpha2), sigma12_(sigma12), gamma1_(gamma1),
      gamma2_(gamma2) {
  require(positive(alpha1) && positive(alpha2),
          "FiveGammaParams: shapes must be > 0");
  require(positive(sigma12), "FiveGammaParams: sigma12 must be > 0");
  require(std::isfinite(gamma1) && gamma1 >= 0.0 && std::isfinite(gamma2) &&
              gamma2 >= 0.0,
          "FiveGammaParams: locations must be >= 0");
}

FiveGammaParams::FiveGammaParams(double alpha1, double alpha2, double sigma12,
                                 double gamma1, double gamma2)
    : FiveGammaParams(Unchecked{}, alpha1, alpha2, sigma12, gamma1, gamma2) {
  require(alpha1 > 2.0 && alpha2 > 2.0,
          "FiveGammaParams: alpha1 and alpha2 must be > 2");
}

FiveGammaParams FiveGammaParams::unchecked(double alpha1, double alpha2,
                                           double sigma12, double gamma1,
                                           double gamma2) {
  return {Unchecked{}, alpha1, alpha2, sigma12, gamma1, gamma2};
}

double FiveGammaParams::rate() const noexcept { return std::sqrt(alpha1_ / sigma12_); }

Eigen::Matrix<double, 5, 1> FiveGammaParams::coords() const {
  Eigen::Matrix<double, 5, 1> v;
  v << alpha1_, alpha2_, sigma12_, gamma1_, gamma2_;
  return v;
}

FiveGammaParams FiveGammaParams::from_coords(const Eigen::VectorXd& p) {
  require(p.size() == 5, "FiveGammaParams: expected 5 coordinates");
  return {p[0], p[1], p[2], p[3], p[4]};
}

double ShapeRate::logpdf(double x) const {
  if (!(x > 0.0)) throw DomainError("gamma marginal: x must be > 0");
  return shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x -
         log_gamma(shape);
}

double ShapeRate::pdf(double x) const { return std::exp(logpdf(x)); }

double gamma_logpdf(double x, const GammaParams& p) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_pdf: x must be > 0");
  const double rate = p.rate();
  return p.alpha() * std::log(rate) + (p.alpha() - 1.0) * std::log(x) - rate * x -
         log_gamma(p.alpha());
}

double gamma_pdf(double x, const GammaParams& p) { return std::exp(gamma_logpdf(x, p)); }

double loggamma_logpdf(double n, const LogGammaParams& p) {
  if (!(n > 0.0 && n < 1.0)) throw DomainError("loggamma_pdf: N must lie in (0, 1)");
  const double ratio = p.alpha() / p.beta();
  const double log_inv_n = -std::log(n);
  return (1.0 - ratio) * log_inv_n + p.alpha() * std::log(ratio) +
         (p.alpha() - 1.0) * std::log(log_inv_n) - log_gamma(p.alpha());
}

double loggamma_pdf(double n, const LogGammaParams& p) {
  return std::exp(loggamma_logpdf(n, p));
}

double three_gamma_logpdf(double x, const ThreeGammaParams& p) {
  const double shifted = x - p.gamma_loc();
  if (!(shifted > 0.0) || !std::isfinite(x)) {
    throw DomainError("three_gamma_pdf: x must exceed the location gamma");
  }
  const double rate = p.alpha() / p.beta();
  return p.alpha() * std::log(rate) + (p.alpha() - 1.0) * std::log(shifted) -
         rate * shifted - log_gamma(p.alpha());
}

double three_gamma_pdf(double x, const ThreeGammaParams& p) {
  return std::exp(three_gamma_logpdf(x, p));
}

ThreeGammaMoments three_gamma_moments(const ThreeGammaParams& p) {
  const double mean = p.beta() + p.gamma_loc();
  const double sd = p.beta() / std::sqrt(p.alpha());
  return {mean, sd, sd / mean};
}

double mckay_logpdf(const WedgePoint& pt, const McKayParams& p) {
  const double a1 = p.alpha1();
  const double a2 = p.alpha2();
  const double ratio = a1 / p.sigma12();
  return 0.5 * (a1 + a2) * std::log(ratio) + log_power_factor(pt.x, a1, "mckay_pdf") +
         log_power_factor(pt.y - pt.x, a2, "mckay_pdf") - std::sqrt(ratio) * pt.y -
         log_gamma(a1) - log_gamma(a2);
}

double mckay_pdf(const WedgePoint& pt, const McKayParams& p) {
  return std::exp(mckay_logpdf(pt, p));
}

double mckay_logpdf(const WedgePoint& pt, const McKayRateParams& p) {
  const double a1 = p.alpha1();
  const double a2 = p.alpha2();
  return (a1 + a2) * std::log(p.c()) + log_power_factor(pt.x, a1, "mckay_pdf") +
         log_power_factor(pt.y - pt.x, a2, "mckay_pdf") - p.c() * pt.y -
         log_gamma(a1) - log_gamma(a2);
}

double mckay_pdf(const WedgePoint& pt, const McKayRateParams& p) {
  return std::exp(mckay_logpdf(pt, p));
}

McKayMarginals mckay_marginals(const McKayParams& p) {
  const double c = p.rate();
  return {ShapeRate{p.alpha1(), c}, ShapeRate{p.alpha1() + p.alpha2(), c}};
}

double mckay_correlation(const McKayParams& p) {
  return std::sqrt(p.alpha1() / (p.alpha1() + p.alpha2()));
}

double mckay_correlation(const McKayRateParams& p) {
  return std::sqrt(p.alpha1() / (p.alpha1() + p.alpha2()));
}

double mckay_covariance(const McKayRateParams& p) {
  return p.alpha1() / (p.c() * p.c());
}

double five_gamma_logpdf(const WedgePoint& pt, const FiveGammaParams& p) {
  const double a1 = p.alpha1();
  const double a2 = p.alpha2();
  const double ratio = a1 / p.sigma12();
  const double u = pt.x - p.gamma1();
  const double v = pt.y - p.gamma2();
  return 0.5 * (a1 + a2) * std::log(ratio) + log_power_factor(u, a1, "five_gamma_pdf") +
         log_power_factor(v - u, a2, "five_gamma_pdf") - std::sqrt(ratio) * v -
         log_gamma(a1) - log_gamma(a2);
}

double five_gamma_pdf(const WedgePoint& pt, const FiveGammaParams& p) {
  return std::exp(five_gamma_logpdf(pt, p));
}

double c_from_sigma(double alpha1, double sigma12) {
  require(positive(alpha1) && positive(sigma12), "c_from_sigma: arguments must be > 0");
  return std::sqrt(alpha1 / sigma12);
}

double sigma_from_c(double alpha1, double c) {
  require(positive(alpha1) && positive(c), "sigma_from_c: arguments must be > 0");
  return alpha1 / (c * c);
}

bool both_marginals_exponential_feasible(double alpha1, double alpha2) {
  return alpha2 > 0.0 && alpha1 == 1.0 && alpha1 + alpha2 == 1.0;
}

}  // namespace gammageo
