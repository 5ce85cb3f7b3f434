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

#include "gammageo/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gammageo {
namespace {

Comparison compare(const std::string& object, const std::vector<int>& index, double closed,
                   double numeric, const std::string& provenance, const Tolerance& tol) {
  Comparison c;
  c.object = object;
  c.index = index;
  c.closed_form = closed;
  c.numeric = numeric;
  c.abs_dev = std::abs(closed - numeric);
  const double scale = std::max(std::abs(closed), std::abs(numeric));
  c.rel_dev = scale > 0.0 ? c.abs_dev / scale : 0.0;
  c.agree = tol.accepts(closed, numeric);
  c.sign_only = !c.agree && tol.accepts(closed, -numeric);
  c.provenance = provenance;
  return c;
}

void record(VerificationReport& rep, Comparison c, bool report_erratum = true) {
  if (!c.agree && report_erratum) {
    Erratum e{c.provenance, c.index, c.closed_form, c.numeric,
              c.sign_only ? "differs from the numeric value by sign only"
                          : "disagrees with the numeric value"};
    rep.errata.push_back(std::move(e));
  }
  rep.rows.push_back(std::move(c));
}

// Value of R_abcd implied by the listed components through
// R_abcd = -R_bacd = -R_abdc = R_cdab. Returns false if no listed component
// maps onto (a, b, c, d); such components must vanish.
bool implied_riemann(const ClosedFormReport& closed, int a, int b, int c, int d,
                     double* value, const ClosedFormEntry** source) {
  if (a == b || c == d) {
    *value = 0.0;
    *source = nullptr;
    return true;
  }
  double sign = 1.0;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (c > d) { std::swap(c, d); sign = -sign; }
  if (a > c || (a == c && b > d)) { std::swap(a, c); std::swap(b, d); }
  const ClosedFormEntry* e = closed.find("riemann", {a, b, c, d});
  *source = e;
  *value = e != nullptr ? sign * e->value : 0.0;
  return e != nullptr;
}

}  // namespace

bool Tolerance::accepts(double a, double b) const {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(abs_floor, rel * scale);
}

double VerificationReport::max_abs_dev() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.abs_dev);
  return m;
}

std::string index_label(const std::vector<int>& index) {
  std::string s;
  for (int i : index) s += std::to_string(i + 1);
  return s;
}

VerificationReport verify_against_pipeline(const ClosedFormReport& closed,
                                           const GeometryReport& numeric,
                                           const Tolerance& tol) {
  VerificationReport rep;
  rep.model = closed.model;
  rep.point = closed.point;
  for (const auto& e : closed.entries) {
    const auto& ix = e.index;
    double value = 0.0;
    if (e.object == "metric") {
      value = numeric.metric(ix[0], ix[1]);
    } else if (e.object == "inverse") {
      value = numeric.inverse(ix[0], ix[1]);
    } else if (e.object == "christoffel") {
      value = numeric.christoffel(ix[0], ix[1], ix[2]);
    } else if (e.object == "ricci") {
      value = numeric.ricci(ix[0], ix[1]);
    } else if (e.object == "scalar") {
      value = numeric.scalar;
    } else if (e.object == "sectional") {
      value = numeric.sectional(ix[0], ix[1]);
    } else if (e.object == "mean") {
      value = numeric.mean[ix[0]];
    } else {
      continue;  // riemann handled below
    }
    record(rep, compare(e.object, ix, e.value, value, e.provenance, tol));
  }
  const int n = numeric.riemann.dim();
  bool any_riemann = false;
  for (const auto& e : closed.entries) any_riemann = any_riemann || e.object == "riemann";
  if (!any_riemann) return rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double value = 0.0;
          const ClosedFormEntry* src = nullptr;
          implied_riemann(closed, a, b, c, d, &value, &src);
          const std::vector<int> ix{a, b, c, d};
          std::string prov =
              src != nullptr ? src->provenance + " (as R_" + index_label(ix) + ")"
                             : closed.model + " curvature R_" + index_label(ix) + " (zero)";
          // Symmetry images of a listed component repeat its erratum; report once.
          const bool canonical =
              src == nullptr || (a < b && c < d && (a < c || (a == c && b <= d)));
          record(rep, compare("riemann", ix, value, numeric.riemann(a, b, c, d), prov, tol),
                 canonical);
        }
  return rep;
}

VerificationReport verify_metric_against_oracle(const std::string& model,
                                                const Eigen::MatrixXd& closed,
                                                const FisherMatrix& oracle,
                                                const Tolerance& tol) {
  VerificationReport rep;
  rep.model = model;
  rep.point = oracle.params;
  for (int i = 0; i < closed.rows(); ++i)
    for (int j = i; j < closed.cols(); ++j) {
      record(rep, compare("metric", {i, j}, closed(i, j), oracle.entries(i, j),
                          model + " metric g_" + index_label({i, j}), tol));
    }
  return rep;
}

}  // namespace gammageo
