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

#include "options.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "gammageo/distributions.hpp"
#include "gammageo/errors.hpp"
#include "gammageo/metric_fields.hpp"

namespace gammageo::cli {
namespace {

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw UsageError("cannot parse " + what + " '" + text + "' as a number");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Model parse_model(const std::string& name) {
  static const std::map<std::string, Model> kModels = {
      {"gamma", Model::kGamma},   {"loggamma", Model::kLogGamma}, {"gamma3", Model::kGamma3},
      {"mckay", Model::kMcKay},   {"mckay5", Model::kMcKay5},     {"m1", Model::kM1},
      {"m2", Model::kM2},         {"m3", Model::kM3}};
  const auto it = kModels.find(name);
  if (it == kModels.end()) {
    throw UsageError("unknown model '" + name +
                     "' (expected gamma, loggamma, gamma3, mckay, mckay5, m1, m2, m3)");
  }
  return it->second;
}

std::string model_name(Model m) {
  switch (m) {
    case Model::kGamma: return "gamma";
    case Model::kLogGamma: return "loggamma";
    case Model::kGamma3: return "gamma3";
    case Model::kMcKay: return "mckay";
    case Model::kMcKay5: return "mckay5";
    case Model::kM1: return "m1";
    case Model::kM2: return "m2";
    case Model::kM3: return "m3";
  }
  return "?";
}

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  for (const std::string& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "' lacks '='");
    const std::string name = trim(item.substr(0, eq));
    if (name.empty()) throw UsageError("parameter '" + item + "' lacks a name");
    if (out.count(name)) throw UsageError("parameter '" + name + "' given twice");
    out[name] = parse_number(trim(item.substr(eq + 1)), "parameter " + name);
  }
  return out;
}

std::vector<std::string> chart_names(Model m, const ParamMap& params) {
  switch (m) {
    case Model::kGamma:
      if (params.count("mu")) return {"mu", "alpha"};
      return {"alpha", "beta"};
    case Model::kLogGamma: return {"alpha", "beta"};
    case Model::kGamma3: return {"beta", "alpha", "g1"};
    case Model::kMcKay: return {"a1", "s12", "a2"};
    case Model::kMcKay5: return {"a1", "a2", "s12", "g1", "g2"};
    case Model::kM1: return {"s12", "a2"};
    case Model::kM2: return {"a1", "s12"};
    case Model::kM3: return {"a1", "a2"};
  }
  return {};
}

Eigen::VectorXd chart_point(Model m, const ParamMap& params) {
  const std::vector<std::string> names = chart_names(m, params);
  const std::set<std::string> known(names.begin(), names.end());
  for (const auto& [name, value] : params) {
    if (!known.count(name)) {
      throw UsageError("parameter '" + name + "' is not a coordinate of model " + model_name(m));
    }
  }
  Eigen::VectorXd x(static_cast<int>(names.size()));
  for (size_t i = 0; i < names.size(); ++i) {
    const auto it = params.find(names[i]);
    if (it == params.end()) {
      throw UsageError("model " + model_name(m) + " needs parameter '" + names[i] + "'");
    }
    x[static_cast<int>(i)] = it->second;
  }
  // Domain checks through the validating parameter types.
  switch (m) {
    case Model::kGamma:
      if (names[0] == "mu") {
        if (!(x[0] > 0.0) || !std::isfinite(x[0])) throw DomainError("mu must be > 0");
        GammaParams(x[1], x[1] / x[0]);
      } else {
        GammaParams(x[0], x[1]);
      }
      break;
    case Model::kLogGamma: LogGammaParams(x[0], x[1]); break;
    case Model::kGamma3: ThreeGammaParams(x[0], x[1], x[2]); break;
    case Model::kMcKay: McKayParams(x[0], x[1], x[2]); break;
    case Model::kMcKay5: FiveGammaParams(x[0], x[1], x[2], x[3], x[4]); break;
    case Model::kM1: McKayParams(1.0, x[0], x[1]); break;
    case Model::kM2: McKayParams(x[0], x[1], 1.0); break;
    case Model::kM3: McKayParams(x[0], 1.0, x[1]); break;
  }
  return x;
}

MetricField model_field(Model m, const ParamMap& params) {
  switch (m) {
    case Model::kGamma:
      return params.count("mu") ? gamma_natural_field() : gamma_field();
    // Log-gamma in (alpha, beta) carries the gamma metric (isometry).
    case Model::kLogGamma: return gamma_field();
    case Model::kMcKay: return mckay_field();
    case Model::kMcKay5: return five_gamma_field();
    case Model::kM1: return submanifold_field(SubmanifoldId::kM1);
    case Model::kM2: return submanifold_field(SubmanifoldId::kM2);
    case Model::kM3: return submanifold_field(SubmanifoldId::kM3);
    case Model::kGamma3: break;
  }
  throw UsageError("model gamma3 has no Fisher metric here (its support depends on g1)");
}

std::vector<double> GridSpec::values() const {
  std::vector<double> v(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    v[static_cast<size_t>(i)] = i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1);
  }
  return v;
}

GridSpec parse_grid(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("grid '" + text + "' must look like name=lo:hi:count");
  GridSpec g;
  g.name = trim(text.substr(0, eq));
  const std::string spec = text.substr(eq + 1);
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
  if (g.name.empty() || c2 == std::string::npos) {
    throw UsageError("grid '" + text + "' must look like name=lo:hi:count");
  }
  g.lo = parse_number(trim(spec.substr(0, c1)), "grid lower bound");
  g.hi = parse_number(trim(spec.substr(c1 + 1, c2 - c1 - 1)), "grid upper bound");
  const double count = parse_number(trim(spec.substr(c2 + 1)), "grid count");
  if (count != std::floor(count) || count < 2 || count > 1e7) {
    throw UsageError("grid " + g.name + ": count must be an integer >= 2");
  }
  g.count = static_cast<int>(count);
  if (!(g.lo < g.hi)) throw UsageError("grid " + g.name + ": need lo < hi");
  return g;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace gammageo::cli
