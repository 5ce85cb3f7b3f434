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

#include <benchmark/benchmark.h>

#include <Eigen/Core>

#include "gammageo/closed_forms.hpp"
#include "gammageo/fisher_oracle.hpp"
#include "gammageo/geodesy.hpp"
#include "gammageo/geometry_core.hpp"
#include "gammageo/metric_fields.hpp"
#include "gammageo/sampling_estimation.hpp"
#include "gammageo/special_functions.hpp"

namespace {

using namespace gammageo;

void BM_Trigamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trigamma(x));
    x = x < 50 ? x * 1.01 : 0.37;
  }
}
BENCHMARK(BM_Trigamma);

void BM_Tetragamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tetragamma(x));
    x = x < 50 ? x * 1.01 : 0.37;
  }
}
BENCHMARK(BM_Tetragamma);

void BM_McKayClosedFormReport(benchmark::State& state) {
  const McKayParams p(2, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mckay_report(p));
}
BENCHMARK(BM_McKayClosedFormReport);

void BM_McKayFullReport(benchmark::State& state) {
  const Eigen::VectorXd x = Eigen::Vector3d(2, 1, 3);
  const MetricField f = mckay_field();
  for (auto _ : state) benchmark::DoNotOptimize(full_report(f, x));
}
BENCHMARK(BM_McKayFullReport)->Unit(benchmark::kMicrosecond);

void BM_FiveManifoldFullReport(benchmark::State& state) {
  const Eigen::VectorXd x = FiveGammaParams(3, 3, 1, 0.5, 1).coords();
  const MetricField f = five_gamma_field();
  for (auto _ : state) benchmark::DoNotOptimize(full_report(f, x));
}
BENCHMARK(BM_FiveManifoldFullReport)->Unit(benchmark::kMicrosecond);

void BM_McKayFisherOracle(benchmark::State& state) {
  const Eigen::VectorXd x = Eigen::Vector3d(2, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(fisher_bivariate_wedge(mckay_family(), x));
}
BENCHMARK(BM_McKayFisherOracle)->Unit(benchmark::kMillisecond);

void BM_FiveGammaFisherOracle(benchmark::State& state) {
  const Eigen::VectorXd x = FiveGammaParams(3, 3, 1, 0.5, 1).coords();
  for (auto _ : state) benchmark::DoNotOptimize(fisher_bivariate_wedge(five_gamma_family(), x));
}
BENCHMARK(BM_FiveGammaFisherOracle)->Unit(benchmark::kMillisecond);

void BM_GeodesicDistance(benchmark::State& state) {
  const Eigen::VectorXd p = Eigen::Vector3d(1, 1, 1), q = Eigen::Vector3d(2, 1.5, 1.2);
  const MetricField f = mckay_field();
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_distance(f, p, q));
}
BENCHMARK(BM_GeodesicDistance)->Unit(benchmark::kMillisecond);

void BM_SampleMcKay(benchmark::State& state) {
  const McKayRateParams p(2, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_mckay(p, static_cast<std::size_t>(state.range(0)), 1, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleMcKay)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_FitMle(benchmark::State& state) {
  const BivariateSample s = sample_mckay(McKayRateParams(2, 1, 3), 100000, 5, 1);
  const McKayParams init = fit_moments(s).params;
  for (auto _ : state) benchmark::DoNotOptimize(fit_mle(s, init));
}
BENCHMARK(BM_FitMle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
