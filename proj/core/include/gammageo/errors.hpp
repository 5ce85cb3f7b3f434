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

#ifndef GAMMAGEO_ERRORS_HPP_
#define GAMMAGEO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gammageo {

// Argument outside a parameter domain or a density support.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A finite-difference stencil left the parameter domain.
class StepUnderflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Iterative method (quadrature, shooting, scoring) did not reach tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_error)
      : std::runtime_error(what), best_error_(best_error) {}
  double best_error() const noexcept { return best_error_; }

 private:
  double best_error_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double condition_number)
      : std::runtime_error(what), condition_number_(condition_number) {}
  double condition_number() const noexcept { return condition_number_; }

 private:
  double condition_number_;
};

}  // namespace gammageo

#endif  // GAMMAGEO_ERRORS_HPP_
