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

#include "gammageo/sampling_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "gammageo/closed_forms.hpp"
#include "gammageo/errors.hpp"
#include "gammageo/parallel.hpp"
#include "gammageo/special_functions.hpp"

namespace gammageo {
namespace {

double sorted_mean(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

Eigen::Vector3d standard_errors(const McKayParams& p, std::size_t n) {
  const Eigen::Matrix3d cov = mckay_metric(p).inverse() / static_cast<double>(n);
  return cov.diagonal().cwiseMax(0.0).cwiseSqrt();
}

bool valid(double a1, double s, double a2) {
  return a1 > 0.0 && s > 0.0 && a2 > 0.0 && std::isfinite(a1) && std::isfinite(s) &&
         std::isfinite(a2);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform_open(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& eng) {
  // Marsaglia polar method; the second variate is discarded so draws stay
  // a pure function of the engine state.
  while (true) {
    const double u = 2.0 * uniform_open(eng) - 1.0;
    const double v = 2.0 * uniform_open(eng) - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double sample_gamma(double shape, double rate, std::mt19937_64& eng) {
  if (!(shape > 0.0) || !(rate > 0.0)) throw DomainError("sample_gamma: shape, rate > 0");
  if (shape < 1.0) {
    const double g = sample_gamma(shape + 1.0, 1.0, eng);
    return g * std::pow(uniform_open(eng), 1.0 / shape) / rate;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = standard_normal(eng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open(eng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

BivariateSample sample_mckay(const McKayRateParams& p, std::size_t n, std::uint64_t seed,
                             int workers) {
  if (n < 1) throw DomainError("sample_mckay: n must be >= 1");
  BivariateSample s;
  s.seed = seed;
  s.pairs.resize(n);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  parallel_for(
      chunks,
      [&](std::size_t k) {
        std::mt19937_64 eng(splitmix64(seed ^ splitmix64(k)));
        const std::size_t end = std::min(n, (k + 1) * kSampleChunk);
        for (std::size_t i = k * kSampleChunk; i < end; ++i) {
          double x, w;
          // Guard the wedge 0 < x < y against underflow for tiny shapes.
          do {
            x = sample_gamma(p.alpha1(), p.c(), eng);
            w = sample_gamma(p.alpha2(), p.c(), eng);
          } while (!(x > 0.0) || !(x + w > x));
          s.pairs[i] = {x, x + w};
        }
      },
      workers);
  return s;
}

const char* to_string(FitMethod m) { return m == FitMethod::kMoments ? "moments" : "mle"; }

McKayStats mckay_stats(const BivariateSample& s) {
  McKayStats st;
  st.n = s.n();
  if (st.n == 0) throw DomainError("mckay_stats: empty sample");
  std::vector<double> x(st.n), y(st.n), lx(st.n), lw(st.n);
  for (std::size_t i = 0; i < st.n; ++i) {
    const auto& pt = s.pairs[i];
    if (!(pt.x > 0.0) || !(pt.y > pt.x)) {
      throw DomainError("mckay_stats: pair outside the wedge 0 < x < y");
    }
    x[i] = pt.x;
    y[i] = pt.y;
    lx[i] = std::log(pt.x);
    lw[i] = std::log(pt.y - pt.x);
  }
  st.mean_x = sorted_mean(x);
  std::vector<double> dev(st.n);
  for (std::size_t i = 0; i < st.n; ++i) dev[i] = (x[i] - st.mean_x) * (x[i] - st.mean_x);
  st.var_x = sorted_mean(std::move(dev));
  st.mean_y = sorted_mean(std::move(y));
  st.mean_log_x = sorted_mean(std::move(lx));
  st.mean_log_w = sorted_mean(std::move(lw));
  return st;
}

double mckay_loglik(const McKayStats& st, const McKayParams& p) {
  const double a1 = p.alpha1(), s = p.sigma12(), a2 = p.alpha2(), c = p.rate();
  const double per = 0.5 * (a1 + a2) * (std::log(a1) - std::log(s)) +
                     (a1 - 1.0) * st.mean_log_x + (a2 - 1.0) * st.mean_log_w - c * st.mean_y -
                     log_gamma(a1) - log_gamma(a2);
  return per * static_cast<double>(st.n);
}

double mckay_loglik(const BivariateSample& s, const McKayParams& p) {
  return mckay_loglik(mckay_stats(s), p);
}

Eigen::Vector3d mckay_mean_score(const McKayStats& st, const McKayParams& p) {
  const double a1 = p.alpha1(), s = p.sigma12(), a2 = p.alpha2(), c = p.rate();
  const double half_log = 0.5 * (std::log(a1) - std::log(s));
  Eigen::Vector3d g;
  g[0] = half_log + (a1 + a2) / (2.0 * a1) + st.mean_log_x - st.mean_y * c / (2.0 * a1) -
         digamma(a1);
  g[1] = -(a1 + a2) / (2.0 * s) + st.mean_y * c / (2.0 * s);
  g[2] = half_log + st.mean_log_w - digamma(a2);
  return g;
}

FitResult fit_moments(const BivariateSample& s) {
  if (s.n() < 10) throw DomainError("fit_moments: need n >= 10");
  const McKayStats st = mckay_stats(s);
  if (!(st.var_x > 1e-300) || !std::isfinite(st.var_x)) {
    throw DomainError("fit_moments: degenerate sample, var_x is zero");
  }
  const double c = st.mean_x / st.var_x;
  const double a1 = st.mean_x * st.mean_x / st.var_x;
  double a2 = c * st.mean_y - a1;
  bool clamped = false;
  const double floor = 1e-8 * std::max(1.0, a1);
  if (!(a2 > floor)) {
    a2 = floor;
    clamped = true;
  }
  const McKayParams p(a1, a1 / (c * c), a2);
  FitResult r(p, FitMethod::kMoments);
  r.converged = true;
  r.degenerate = clamped;
  r.loglik = mckay_loglik(st, p);
  r.std_errors = standard_errors(p, st.n);
  return r;
}

FitResult fit_mle(const BivariateSample& s, const McKayParams& init, const MleConfig& cfg) {
  if (s.n() < 10) throw DomainError("fit_mle: need n >= 10");
  const McKayStats st = mckay_stats(s);
  const double n = static_cast<double>(st.n);
  McKayParams p = init;
  double ll = mckay_loglik(st, p) / n;
  Eigen::Vector3d score = mckay_mean_score(st, p);
  FitResult r(p, FitMethod::kMle);
  r.trace.push_back(ll);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (score.cwiseAbs().maxCoeff() < cfg.score_tol) {
      r.converged = true;
      break;
    }
    const Eigen::Vector3d step = mckay_metric(p).ldlt().solve(score);
    bool accepted = false;
    for (double lambda = 1.0; lambda > 1e-10; lambda *= 0.5) {
      const Eigen::Vector3d t = p.coords() + lambda * step;
      if (!valid(t[0], t[1], t[2])) continue;
      const McKayParams trial(t[0], t[1], t[2]);
      const double ll_t = mckay_loglik(st, trial) / n;
      const Eigen::Vector3d score_t = mckay_mean_score(st, trial);
      // Ties within rounding are accepted when they reduce the score.
      const bool up = ll_t > ll || (ll_t >= ll - 4.0 * eps * std::abs(ll) &&
                                    score_t.norm() < score.norm());
      if (up) {
        p = trial;
        ll = ll_t;
        score = score_t;
        accepted = true;
        break;
      }
    }
    r.iterations = it + 1;
    r.trace.push_back(ll);
    if (!accepted) break;
  }
  if (!r.converged) r.converged = score.cwiseAbs().maxCoeff() < cfg.score_tol;
  r.params = p;
  r.loglik = ll * n;
  r.std_errors = standard_errors(p, st.n);
  return r;
}

}  // namespace gammageo
