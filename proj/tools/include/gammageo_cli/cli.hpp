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

#ifndef GAMMAGEO_CLI_CLI_HPP_
#define GAMMAGEO_CLI_CLI_HPP_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gammageo::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;     // bad arguments or parameters outside a domain
inline constexpr int kExitFlagged = 3;    // computed, but a check failed
inline constexpr int kExitNoConverge = 4;

struct Hooks {
  // Replaces the closed-form metric used by oracle-check; lets tests feed a
  // corrupted formula through the real command.
  std::function<Eigen::MatrixXd(const std::string& model, const Eigen::VectorXd& point)>
      closed_form_metric;
};

// Runs one command line (args excludes the program name). Results go to
// --out when given, else to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace gammageo::cli

#endif  // GAMMAGEO_CLI_CLI_HPP_
