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

#ifndef GAMMAGEO_CLI_OUTPUT_HPP_
#define GAMMAGEO_CLI_OUTPUT_HPP_

// CSV/JSON formatting and atomic file emission.

#include <string>
#include <vector>

#include <Eigen/Core>
#include "json.hpp"

namespace gammageo::cli {

inline constexpr int kSchemaVersion = 1;

// %.17g; round-trips every double. Non-finite values print as nan/inf/-inf.
std::string format_double(double v);

// RFC-4180 field quoting: fields with a comma, quote, CR or LF are quoted
// and inner quotes doubled.
std::string csv_field(const std::string& s);

// Accumulates a CSV document with LF line endings.
class CsvBuilder {
 public:
  void comment(const std::string& text);  // "# text"
  void header(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& fields);
  const std::string& str() const noexcept { return text_; }

 private:
  std::string text_;
  size_t columns_ = 0;
};

nlohmann::json matrix_json(const Eigen::MatrixXd& m);
nlohmann::json vector_json(const Eigen::VectorXd& v);
// Finite doubles pass through; non-finite become null.
nlohmann::json number_json(double v);

// Writes content to a sibling temp file and renames it over path, so a
// reader never sees a partial file. Throws std::runtime_error on I/O failure.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace gammageo::cli

#endif  // GAMMAGEO_CLI_OUTPUT_HPP_
