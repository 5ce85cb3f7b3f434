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

#ifndef GAMMAGEO_CLI_OPTIONS_HPP_
#define GAMMAGEO_CLI_OPTIONS_HPP_

// Model names, parameter maps and grid specs shared by the subcommands.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gammageo/geometry_core.hpp"

namespace gammageo::cli {

// Malformed command line; maps to exit code 2 like a domain violation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Model { kGamma, kLogGamma, kGamma3, kMcKay, kMcKay5, kM1, kM2, kM3 };

Model parse_model(const std::string& name);
std::string model_name(Model m);

using ParamMap = std::map<std::string, double>;

// "a1=1,s12=2.5" -> {a1: 1, s12: 2.5}.
ParamMap parse_params(const std::string& text);

// Coordinate names of the model's chart, in order. The gamma model uses
// (mu, alpha) when mu is given and (alpha, beta) otherwise.
std::vector<std::string> chart_names(Model m, const ParamMap& params);

// Chart point from params. Throws UsageError for missing or unknown names
// and DomainError when the point is outside the model's domain.
Eigen::VectorXd chart_point(Model m, const ParamMap& params);

// Metric field of the model's chart; throws UsageError for gamma3.
MetricField model_field(Model m, const ParamMap& params);

struct GridSpec {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  std::vector<double> values() const;
};

// "a1=0.05:5:50"; requires count >= 2 and lo < hi.
GridSpec parse_grid(const std::string& text);

// Comma-separated list, empty items dropped.
std::vector<std::string> split_list(const std::string& text);

}  // namespace gammageo::cli

#endif  // GAMMAGEO_CLI_OPTIONS_HPP_
