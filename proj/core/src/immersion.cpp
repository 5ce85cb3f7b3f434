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

#include "gammageo/immersion.hpp"

#include <cmath>

#include "gammageo/errors.hpp"
#include "gammageo/special_functions.hpp"

namespace gammageo {
namespace {

constexpr double kGolden = 0.6180339887498949;

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void TubeSpec::validate() const {
  if (!positive(radius)) throw DomainError("TubeSpec: radius must be > 0");
  if (!positive(mu_lo) || !(mu_hi > mu_lo) || !std::isfinite(mu_hi)) {
    throw DomainError("TubeSpec: need 0 < mu_lo < mu_hi");
  }
}

ImmersionPoint immerse_gamma(double mu, double alpha) {
  if (!positive(mu) || !positive(alpha)) {
    throw DomainError("immerse_gamma: mu and alpha must be > 0");
  }
  return {mu, alpha, log_gamma(alpha) - alpha * std::log(mu)};
}

ImmersionPoint exponential_curve(double mu) { return immerse_gamma(mu, 1.0); }

CurveDistance distance_to_exponential_curve(const Eigen::Vector3d& p, double mu_lo,
                                            double mu_hi) {
  if (!positive(mu_lo) || !(mu_hi > mu_lo) || !std::isfinite(mu_hi) || !p.allFinite()) {
    throw DomainError("distance_to_exponential_curve: need 0 < mu_lo < mu_hi, finite p");
  }
  auto d2 = [&](double mu) {
    const double a = mu - p[0], b = 1.0 - p[1], c = -std::log(mu) - p[2];
    return a * a + b * b + c * c;
  };
  // Half the derivative of d2, times mu.
  auto h = [&](double mu) { return mu * mu - p[0] * mu + std::log(mu) + p[2]; };
  const int n = 2048;
  const double step = std::log(mu_hi / mu_lo) / n;
  int best = 0;
  double best_val = d2(mu_lo);
  for (int i = 1; i <= n; ++i) {
    const double v = d2(mu_lo * std::exp(step * i));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = mu_lo * std::exp(step * std::max(best - 1, 0));
  double hi = mu_lo * std::exp(step * std::min(best + 1, n));
  if (best == n) hi = mu_hi;
  double mu_star;
  if (h(lo) < 0.0 && h(hi) > 0.0) {
    while (hi - lo > 1e-13 * hi) {
      const double mid = 0.5 * (lo + hi);
      const double hm = h(mid);
      if (hm == 0.0) {
        lo = hi = mid;
        break;
      }
      (hm < 0.0 ? lo : hi) = mid;
    }
    mu_star = 0.5 * (lo + hi);
  } else {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = d2(x1), f2 = d2(x2);
    while (b - a > 1e-12 * b) {
      if (f1 < f2) {
        b = x2; x2 = x1; f2 = f1;
        x1 = b - kGolden * (b - a); f1 = d2(x1);
      } else {
        a = x1; x1 = x2; f1 = f2;
        x2 = a + kGolden * (b - a); f2 = d2(x2);
      }
    }
    mu_star = 0.5 * (a + b);
    if (d2(mu_lo) <= d2(mu_star)) mu_star = mu_lo;
    if (d2(mu_hi) < d2(mu_star)) mu_star = mu_hi;
  }
  const bool at_edge = mu_star <= mu_lo * (1.0 + 1e-9) || mu_star >= mu_hi * (1.0 - 1e-9);
  return {std::sqrt(d2(mu_star)), mu_star, at_edge};
}

bool tube_contains(double mu, double alpha, const TubeSpec& tube) {
  tube.validate();
  const ImmersionPoint pt = immerse_gamma(mu, alpha);
  return distance_to_exponential_curve(pt.as_r3(), tube.mu_lo, tube.mu_hi).distance <
         tube.radius;
}

TubeInterval certify_tube_interval(const TubeSpec& tube, double mu_lo, double mu_hi,
                                   int mu_samples, int alpha_samples) {
  tube.validate();
  if (!positive(mu_lo) || mu_hi < mu_lo || mu_samples < 1 || alpha_samples < 2) {
    throw DomainError("certify_tube_interval: invalid window or sample counts");
  }
  auto inside = [&](double delta) {
    for (int i = 0; i < mu_samples; ++i) {
      const double mu =
          mu_samples == 1 ? mu_lo : mu_lo + (mu_hi - mu_lo) * i / (mu_samples - 1);
      for (int j = 0; j < alpha_samples; ++j) {
        const double alpha = 1.0 - delta + 2.0 * delta * j / (alpha_samples - 1);
        if (!tube_contains(mu, alpha, tube)) return false;
      }
    }
    return true;
  };
  if (!inside(0.0)) return {0.0, false};
  // alpha stays positive.
  double lo = 0.0, hi = 1.0 - 1e-9;
  if (inside(hi)) return {hi, true};
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return {lo, lo > 0.0};
}

std::vector<SurfaceRow> immersion_surface_grid(const std::vector<double>& mu_grid,
                                               const std::vector<double>& alpha_grid) {
  std::vector<SurfaceRow> rows;
  rows.reserve(mu_grid.size() * alpha_grid.size());
  for (double mu : mu_grid)
    for (double alpha : alpha_grid) {
      const ImmersionPoint pt = immerse_gamma(mu, alpha);
      rows.push_back({mu, alpha, alpha / mu, pt.z});
    }
  return rows;
}

LogGammaParams loggamma_isometry(const GammaParams& p) {
  return LogGammaParams(p.alpha(), p.beta());
}

Eigen::Matrix2d gamma_metric_2d(double mu, double alpha) {
  if (!positive(mu) || !positive(alpha)) {
    throw DomainError("gamma_metric_2d: mu and alpha must be > 0");
  }
  Eigen::Matrix2d g;
  g << alpha / (mu * mu), -1.0 / mu, -1.0 / mu, trigamma(alpha);
  return g;
}

}  // namespace gammageo
