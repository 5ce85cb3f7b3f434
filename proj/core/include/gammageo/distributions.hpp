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

#ifndef GAMMAGEO_DISTRIBUTIONS_HPP_
#define GAMMAGEO_DISTRIBUTIONS_HPP_

// Gamma-family densities: univariate gamma (mean parametrization), log-gamma
// on (0, 1), three-parameter (location-shifted) gamma, the McKay bivariate
// gamma on the wedge 0 < x < y, and its location-shifted five-parameter form.
//
// Densities are evaluated in log space; pdf = exp(logpdf). Arguments outside
// the support raise DomainError. On the edge of a bivariate support the
// vanishing factor t^(a-1) gives 0 for a > 1, 1 for a == 1, and DomainError
// for a < 1 (the density diverges there).

#include <Eigen/Core>

namespace gammageo {

// Rate alpha/beta, so beta is the mean.
class GammaParams {
 public:
  GammaParams(double alpha, double beta);
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double rate() const noexcept { return alpha_ / beta_; }

 private:
  double alpha_;
  double beta_;
};

class LogGammaParams {
 public:
  LogGammaParams(double alpha, double beta);
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
};

class ThreeGammaParams {
 public:
  ThreeGammaParams(double beta, double alpha, double gamma_loc);
  double beta() const noexcept { return beta_; }
  double alpha() const noexcept { return alpha_; }
  double gamma_loc() const noexcept { return gamma_loc_; }

 private:
  double beta_;
  double alpha_;
  double gamma_loc_;
};

class McKayRateParams;

// Coordinates (alpha1, sigma12, alpha2) on the McKay 3-manifold; sigma12 is
// the covariance of X and Y.
class McKayParams {
 public:
  McKayParams(double alpha1, double sigma12, double alpha2);
  double alpha1() const noexcept { return alpha1_; }
  double sigma12() const noexcept { return sigma12_; }
  double alpha2() const noexcept { return alpha2_; }
  // c = sqrt(alpha1 / sigma12).
  double rate() const noexcept;
  McKayRateParams to_rate() const;
  Eigen::Vector3d coords() const { return {alpha1_, sigma12_, alpha2_}; }
  static McKayParams from_coords(const Eigen::VectorXd& p);

 private:
  double alpha1_;
  double sigma12_;
  double alpha2_;
};

// Rate form (alpha1, c, alpha2).
class McKayRateParams {
 public:
  McKayRateParams(double alpha1, double c, double alpha2);
  double alpha1() const noexcept { return alpha1_; }
  double c() const noexcept { return c_; }
  double alpha2() const noexcept { return alpha2_; }
  McKayParams to_sigma() const;

 private:
  double alpha1_;
  double c_;
  double alpha2_;
};

// Coordinates (alpha1, alpha2, sigma12, gamma1, gamma2). The checked
// constructor enforces the manifold domain alpha1, alpha2 > 2; unchecked()
// only requires positive shapes, for density experiments.
class FiveGammaParams {
 public:
  FiveGammaParams(double alpha1, double alpha2, double sigma12, double gamma1,
                  double gamma2);
  static FiveGammaParams unchecked(double alpha1, double alpha2, double sigma12,
                                   double gamma1, double gamma2);

  double alpha1() const noexcept { return alpha1_; }
  double alpha2() const noexcept { return alpha2_; }
  double sigma12() const noexcept { return sigma12_; }
  double gamma1() const noexcept { return gamma1_; }
  double gamma2() const noexcept { return gamma2_; }
  double rate() const noexcept;
  Eigen::Matrix<double, 5, 1> coords() const;
  static FiveGammaParams from_coords(const Eigen::VectorXd& p);

 private:
  struct Unchecked {};
  FiveGammaParams(Unchecked, double alpha1, double alpha2, double sigma12,
                  double gamma1, double gamma2);

  double alpha1_;
  double alpha2_;
  double sigma12_;
  double gamma1_;
  double gamma2_;
};

struct WedgePoint {
  double x;
  double y;
};

// Univariate gamma with shape/rate, used for marginals.
struct ShapeRate {
  double shape;
  double rate;
  double logpdf(double x) const;
  double pdf(double x) const;
  double mean() const noexcept { return shape / rate; }
  double variance() const noexcept { return shape / (rate * rate); }
};

struct ThreeGammaMoments {
  double mean;
  double sd;
  double cv;
};

struct McKayMarginals {
  ShapeRate x;  // shape alpha1, rate c
  ShapeRate y;  // shape alpha1 + alpha2, rate c
};

double gamma_logpdf(double x, const GammaParams& p);
double gamma_pdf(double x, const GammaParams& p);

double loggamma_logpdf(double n, const LogGammaParams& p);
double loggamma_pdf(double n, const LogGammaParams& p);

double three_gamma_logpdf(double x, const ThreeGammaParams& p);
double three_gamma_pdf(double x, const ThreeGammaParams& p);
ThreeGammaMoments three_gamma_moments(const ThreeGammaParams& p);

double mckay_logpdf(const WedgePoint& pt, const McKayParams& p);
double mckay_pdf(const WedgePoint& pt, const McKayParams& p);
// Rate-parametrized form of the same density.
double mckay_logpdf(const WedgePoint& pt, const McKayRateParams& p);
double mckay_pdf(const WedgePoint& pt, const McKayRateParams& p);

McKayMarginals mckay_marginals(const McKayParams& p);
double mckay_correlation(const McKayParams& p);
double mckay_correlation(const McKayRateParams& p);
double mckay_covariance(const McKayRateParams& p);

// Support (y - gamma2) > (x - gamma1) > 0; factor (y - gamma2 - x + gamma1).
double five_gamma_logpdf(const WedgePoint& pt, const FiveGammaParams& p);
double five_gamma_pdf(const WedgePoint& pt, const FiveGammaParams& p);

double c_from_sigma(double alpha1, double sigma12);
double sigma_from_c(double alpha1, double c);

// True iff some admissible (alpha1, alpha2) makes both McKay marginals
// exponential, i.e. alpha1 == 1 and alpha1 + alpha2 == 1 with alpha2 > 0.
// Always false; kept as an executable statement of the constraint.
bool both_marginals_exponential_feasible(double alpha1, double alpha2);

}  // namespace gammageo

#endif  // GAMMAGEO_DISTRIBUTIONS_HPP_
