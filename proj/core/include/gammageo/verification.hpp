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

#ifndef GAMMAGEO_VERIFICATION_HPP_
#define GAMMAGEO_VERIFICATION_HPP_

// Entrywise comparison of closed forms against the curvature pipeline and
// the quadrature oracle. Disagreements are reported, never reconciled.

#include <string>
#include <vector>

#include <Eigen/Core>

#include "gammageo/closed_forms.hpp"
#include "gammageo/fisher_oracle.hpp"
#include "gammageo/geometry_core.hpp"

namespace gammageo {

struct Tolerance {
  double rel = 1e-7;
  double abs_floor = 1e-9;
  bool accepts(double a, double b) const;
};

struct Comparison {
  std::string object;
  std::vector<int> index;  // zero-based
  double closed_form = 0.0;
  double numeric = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  bool agree = false;
  // Disagrees, but closed_form == -numeric within tolerance.
  bool sign_only = false;
  std::string provenance;
};

struct Erratum {
  std::string provenance;
  std::vector<int> index;
  double printed = 0.0;
  double numeric = 0.0;
  std::string note;
};

struct VerificationReport {
  std::string model;
  Eigen::VectorXd point;
  std::vector<Comparison> rows;
  std::vector<Erratum> errata;
  bool all_agree() const { return errata.empty(); }
  double max_abs_dev() const;
};

// Every closed-form entry against the pipeline. Printed Riemann components
// are expanded by the tensor symmetries to all dim^4 index tuples, so the
// components that must vanish are checked as well.
VerificationReport verify_against_pipeline(const ClosedFormReport& closed,
                                           const GeometryReport& numeric,
                                           const Tolerance& tol = {});

// Closed-form metric against the quadrature oracle; tol.abs_floor is the
// absolute tolerance and tol.rel is ignored when zero.
VerificationReport verify_metric_against_oracle(const std::string& model,
                                                const Eigen::MatrixXd& closed,
                                                const FisherMatrix& oracle,
                                                const Tolerance& tol);

// Index tuple as printed, e.g. {0, 1, 0, 2} -> "1213".
std::string index_label(const std::vector<int>& index);

}  // namespace gammageo

#endif  // GAMMAGEO_VERIFICATION_HPP_
