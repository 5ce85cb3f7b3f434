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

#ifndef GAMMAGEO_SAMPLING_ESTIMATION_HPP_
#define GAMMAGEO_SAMPLING_ESTIMATION_HPP_

// McKay sampling (X ~ gamma(a1, c), Y - X ~ gamma(a2, c) independent) and
// estimation by moments and by Fisher scoring.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gammageo/distributions.hpp"

namespace gammageo {

struct BivariateSample {
  std::vector<WedgePoint> pairs;
  std::uint64_t seed = 0;
  std::size_t n() const noexcept { return pairs.size(); }
};

// Pairs are generated in chunks of kSampleChunk; chunk k draws from an
// mt19937_64 seeded with splitmix64 of (seed, k), so the stream depends on
// the seed only, not on the worker count.
inline constexpr std::size_t kSampleChunk = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x);

// Uniform in (0, 1), never 0 or 1.
double uniform_open(std::mt19937_64& eng);
double standard_normal(std::mt19937_64& eng);
// Marsaglia-Tsang; shape < 1 via gamma(shape + 1) * U^(1/shape).
double sample_gamma(double shape, double rate, std::mt19937_64& eng);

BivariateSample sample_mckay(const McKayRateParams& p, std::size_t n, std::uint64_t seed,
                             int workers = 0);

enum class FitMethod { kMoments, kMle };
const char* to_string(FitMethod m);

struct FitResult {
  FitResult(const McKayParams& p, FitMethod m) : params(p), method(m) {}

  McKayParams params;
  FitMethod method;
  int iterations = 0;
  bool converged = false;
  double loglik = 0.0;
  // sqrt(diag(G^-1) / n) with G the McKay Fisher metric at params.
  Eigen::Vector3d std_errors = Eigen::Vector3d::Zero();
  // Moments: alpha2 estimate was clamped to stay positive.
  bool degenerate = false;
  // Scoring: per-iteration average log-likelihood.
  std::vector<double> trace;
};

// Sufficient statistics of a McKay sample.
struct McKayStats {
  std::size_t n = 0;
  double mean_x = 0.0;
  double var_x = 0.0;  // population variance
  double mean_y = 0.0;
  double mean_log_x = 0.0;
  double mean_log_w = 0.0;  // log(y - x)
};

// Permutation invariant: each statistic is summed over sorted values.
McKayStats mckay_stats(const BivariateSample& s);

double mckay_loglik(const BivariateSample& s, const McKayParams& p);
double mckay_loglik(const McKayStats& st, const McKayParams& p);
// Average score per observation in (alpha1, sigma12, alpha2).
Eigen::Vector3d mckay_mean_score(const McKayStats& st, const McKayParams& p);

// Requires n >= 10 and var_x > 0 (DomainError otherwise).
FitResult fit_moments(const BivariateSample& s);

struct MleConfig {
  double score_tol = 1e-8;  // on the average score, max-norm
  int max_iterations = 200;
};

FitResult fit_mle(const BivariateSample& s, const McKayParams& init, const MleConfig& cfg = {});

}  // namespace gammageo

#endif  // GAMMAGEO_SAMPLING_ESTIMATION_HPP_
