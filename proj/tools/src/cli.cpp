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

#include "gammageo_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gammageo/closed_forms.hpp"
#include "gammageo/errors.hpp"
#include "gammageo/fisher_oracle.hpp"
#include "gammageo/geodesy.hpp"
#include "gammageo/immersion.hpp"
#include "gammageo/metric_fields.hpp"
#include "gammageo/parallel.hpp"
#include "gammageo/sampling_estimation.hpp"
#include "gammageo/verification.hpp"
#include "options.hpp"
#include "output.hpp"

namespace gammageo::cli {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using nlohmann::json;

// A finished payload; code may still be nonzero (flagged or unconverged).
struct Emission {
  std::string content;
  int code = kExitOk;
};

struct CommonOptions {
  std::string model = "mckay";
  std::string params;
  std::string out;
  std::string format = "json";
  std::vector<std::string> grids;
  std::string objects;
};

constexpr const char* kParamHelp =
    "comma-separated name=value list; names: a1, a2, s12 (covariance), g1, g2 "
    "(locations), mu, alpha, beta";

bool is_submanifold(Model m) { return m == Model::kM1 || m == Model::kM2 || m == Model::kM3; }

SubmanifoldId submanifold_id(Model m) {
  switch (m) {
    case Model::kM1: return SubmanifoldId::kM1;
    case Model::kM2: return SubmanifoldId::kM2;
    default: return SubmanifoldId::kM3;
  }
}

// Full McKay coordinates of a point on a coordinate slice.
VectorXd embed_in_mckay(SubmanifoldId id, const VectorXd& x) {
  VectorXd full(3);
  const int fixed = fixed_coordinate(id);
  for (int i = 0, k = 0; i < 3; ++i) full[i] = i == fixed ? 1.0 : x[k++];
  return full;
}

json params_json(const std::vector<std::string>& names, const VectorXd& x) {
  json p = json::object();
  for (size_t i = 0; i < names.size(); ++i) p[names[i]] = x[static_cast<int>(i)];
  return p;
}

json header(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

void require_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw UsageError("format must be csv or json, got '" + format + "'");
  }
}

// Printed (closed-form) metric of each model.
MatrixXd closed_form_metric(Model m, const ParamMap& params, const VectorXd& x) {
  switch (m) {
    case Model::kMcKay: return mckay_metric(McKayParams::from_coords(x));
    case Model::kMcKay5: return five_manifold_metric(FiveGammaParams::from_coords(x));
    case Model::kM1:
    case Model::kM2:
    case Model::kM3: return submanifold_geometry(submanifold_id(m), x).metric;
    case Model::kGamma:
      if (params.count("mu")) return gamma_metric_2d(x[0], x[1]);
      return gamma_field().metric(x);
    case Model::kLogGamma: return gamma_field().metric(x);
    case Model::kGamma3: break;
  }
  throw UsageError("model gamma3 has no Fisher metric here (its support depends on g1)");
}

MatrixXd closed_form_inverse(Model m, const VectorXd& x, const MatrixXd& g) {
  if (m == Model::kMcKay) return mckay_metric_inverse(McKayParams::from_coords(x));
  if (is_submanifold(m)) return submanifold_geometry(submanifold_id(m), x).inverse;
  return invert_metric(g);
}

// ---------------------------------------------------------------- metric

Emission cmd_metric(const CommonOptions& o, bool inverse) {
  require_format(o.format);
  const Model m = parse_model(o.model);
  const ParamMap params = parse_params(o.params);
  const VectorXd x = chart_point(m, params);
  const std::vector<std::string> names = chart_names(m, params);
  const MatrixXd g = closed_form_metric(m, params, x);
  MatrixXd ginv;
  if (inverse) ginv = closed_form_inverse(m, x, g);

  if (o.format == "json") {
    json j = header("metric");
    j["model"] = model_name(m);
    j["coordinates"] = names;
    j["params"] = params_json(names, x);
    j["metric"] = matrix_json(g);
    if (inverse) j["inverse"] = matrix_json(ginv);
    return {j.dump(2) + "\n"};
  }
  CsvBuilder csv;
  std::vector<std::string> cols = names;
  std::vector<double> row(x.data(), x.data() + x.size());
  auto flatten = [&](const std::string& prefix, const MatrixXd& a) {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        cols.push_back(prefix + std::to_string(i + 1) + std::to_string(j + 1));
        row.push_back(a(i, j));
      }
  };
  flatten("g", g);
  if (inverse) flatten("ginv", ginv);
  csv.header(cols);
  csv.row(row);
  return {csv.str()};
}

// ------------------------------------------------------------- curvature

const std::set<std::string> kObjects = {"metric", "inverse", "christoffel", "riemann",
                                        "ricci",  "scalar",  "sectional",   "mean"};

std::set<std::string> parse_objects(const std::string& text, const std::set<std::string>& known) {
  std::set<std::string> out;
  for (const std::string& s : split_list(text)) {
    if (!known.count(s)) throw UsageError("unknown object '" + s + "'");
    out.insert(s);
  }
  return out;
}

// Pipeline-only rows for models without printed curvature.
std::vector<Comparison> pipeline_rows(const GeometryReport& r) {
  std::vector<Comparison> rows;
  const int n = static_cast<int>(r.point.size());
  auto add = [&](const char* object, std::vector<int> index, double value) {
    Comparison c;
    c.object = object;
    c.index = std::move(index);
    c.numeric = value;
    rows.push_back(std::move(c));
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add("metric", {i, j}, r.metric(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add("inverse", {i, j}, r.inverse(i, j));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) add("christoffel", {k, i, j}, r.christoffel(k, i, j));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = a; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (c == a && d < b) continue;
          add("riemann", {a, b, c, d}, r.riemann(a, b, c, d));
        }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add("ricci", {i, j}, r.ricci(i, j));
  add("scalar", {}, r.scalar);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add("sectional", {i, j}, r.sectional(i, j));
  for (int i = 0; i < n; ++i) add("mean", {i}, r.mean[i]);
  return rows;
}

Emission cmd_curvature(const CommonOptions& o, double rel_tol, double abs_tol) {
  require_format(o.format);
  const Model m = parse_model(o.model);
  const ParamMap params = parse_params(o.params);
  const VectorXd x = chart_point(m, params);
  const std::vector<std::string> names = chart_names(m, params);
  const std::set<std::string> wanted = parse_objects(o.objects, kObjects);
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw UsageError("tolerances must be > 0");

  const MetricField field = model_field(m, params);
  const GeometryReport numeric = full_report(field, x);
  const bool has_closed = m == Model::kMcKay || is_submanifold(m);
  VerificationReport rep;
  if (has_closed) {
    const ClosedFormReport closed = m == Model::kMcKay
                                        ? mckay_report(McKayParams::from_coords(x))
                                        : submanifold_geometry(submanifold_id(m), x);
    rep = verify_against_pipeline(closed, numeric, Tolerance{rel_tol, abs_tol});
  } else {
    rep.rows = pipeline_rows(numeric);
  }
  std::vector<const Comparison*> rows;
  for (const auto& r : rep.rows) {
    if (wanted.empty() || wanted.count(r.object)) rows.push_back(&r);
  }
  bool flagged = false;
  for (const auto* r : rows) flagged = flagged || (has_closed && !r->agree);

  Emission e;
  e.code = flagged ? kExitFlagged : kExitOk;
  if (o.format == "csv") {
    CsvBuilder csv;
    csv.header({"object", "index", "closed_form", "pipeline", "abs_dev", "rel_dev", "agree"});
    for (const auto* r : rows) {
      csv.row(std::vector<std::string>{
          r->object, index_label(r->index),
          has_closed ? format_double(r->closed_form) : "", format_double(r->numeric),
          has_closed ? format_double(r->abs_dev) : "", has_closed ? format_double(r->rel_dev) : "",
          has_closed ? (r->agree ? "true" : "false") : ""});
    }
    e.content = csv.str();
    return e;
  }
  json j = header("curvature");
  j["model"] = model_name(m);
  j["coordinates"] = names;
  j["params"] = params_json(names, x);
  j["tolerance"] = {{"rel", rel_tol}, {"abs_floor", abs_tol}};
  j["closed_form_available"] = has_closed;
  json entries = json::array();
  for (const auto* r : rows) {
    json row = {{"object", r->object}, {"index", index_label(r->index)},
                {"pipeline", number_json(r->numeric)}};
    if (has_closed) {
      row["closed_form"] = number_json(r->closed_form);
      row["abs_dev"] = number_json(r->abs_dev);
      row["rel_dev"] = number_json(r->rel_dev);
      row["agree"] = r->agree;
      row["sign_only"] = r->sign_only;
      row["source"] = r->provenance;
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  json errata = json::array();
  for (const auto& er : rep.errata) {
    if (!wanted.empty()) {
      const bool listed = std::any_of(rows.begin(), rows.end(), [&](const Comparison* r) {
        return r->provenance == er.provenance && r->index == er.index;
      });
      if (!listed) continue;
    }
    errata.push_back({{"source", er.provenance}, {"index", index_label(er.index)},
                      {"printed", number_json(er.printed)}, {"pipeline", number_json(er.numeric)},
                      {"note", er.note}});
  }
  j["errata"] = std::move(errata);
  j["all_agree"] = !flagged;
  e.content = j.dump(2) + "\n";
  return e;
}

// ----------------------------------------------------------------- sweep

const std::set<std::string> kSweepObjects = {"pipeline_scalar", "sectional12", "sectional13",
                                             "sectional23",     "mean1",       "mean2",
                                             "mean3",           "denominator"};

Emission cmd_sweep(const CommonOptions& o) {
  const Model m = parse_model(o.model);
  if (m != Model::kMcKay && !is_submanifold(m)) {
    throw UsageError("sweep needs a model with a printed scalar curvature (mckay, m1, m2, m3)");
  }
  if (o.grids.size() != 2) throw UsageError("sweep needs exactly two --grid options");
  const GridSpec g1 = parse_grid(o.grids[0]);
  const GridSpec g2 = parse_grid(o.grids[1]);
  if (g1.name == g2.name) throw UsageError("the two grids must name different parameters");
  ParamMap fixed = parse_params(o.params);
  const std::vector<std::string> extras = split_list(o.objects);
  for (const auto& s : extras) {
    if (!kSweepObjects.count(s)) throw UsageError("unknown sweep object '" + s + "'");
    if (m != Model::kMcKay && s != "pipeline_scalar") {
      throw UsageError("sweep object '" + s + "' exists only for model mckay");
    }
  }
  for (const GridSpec* g : {&g1, &g2}) {
    if (fixed.count(g->name)) throw UsageError("parameter '" + g->name + "' is both fixed and swept");
  }
  // Validate every corner up front so no computation starts on a bad grid.
  const std::vector<double> v1 = g1.values();
  const std::vector<double> v2 = g2.values();
  auto point_at = [&](double p1, double p2) {
    ParamMap p = fixed;
    p[g1.name] = p1;
    p[g2.name] = p2;
    return chart_point(m, p);
  };
  for (double a : {v1.front(), v1.back()})
    for (double b : {v2.front(), v2.back()}) point_at(a, b);

  const size_t cols = 3 + extras.size();
  std::vector<std::vector<double>> table(v1.size() * v2.size());
  const MetricField field = m == Model::kMcKay ? mckay_field() : model_field(m, fixed);
  parallel_for(table.size(), [&](size_t k) {
    const double p1 = v1[k / v2.size()];
    const double p2 = v2[k % v2.size()];
    const VectorXd x = point_at(p1, p2);
    std::vector<double> row = {p1, p2};
    row.reserve(cols);
    if (m == Model::kMcKay) {
      const McKayParams mp = McKayParams::from_coords(x);
      row.push_back(mckay_scalar(mp));
      for (const auto& s : extras) {
        if (s == "pipeline_scalar") {
          row.push_back(scalar_curvature(field, x));
        } else if (s.rfind("sectional", 0) == 0) {
          const McKaySectional sec = mckay_sectional(mp);
          row.push_back(s == "sectional12" ? sec.s12 : s == "sectional13" ? sec.s13 : sec.s23);
        } else if (s.rfind("mean", 0) == 0) {
          row.push_back(mckay_mean(mp)[s.back() - '1']);
        } else {
          row.push_back(mckay_denominator(mp));
        }
      }
    } else {
      const ClosedFormReport rep = submanifold_geometry(submanifold_id(m), x);
      row.push_back(rep.find("scalar", {})->value);
      for (size_t i = 0; i < extras.size(); ++i) row.push_back(scalar_curvature(field, x));
    }
    table[k] = std::move(row);
  });

  CsvBuilder csv;
  std::ostringstream fixed_desc;
  for (const auto& [name, value] : fixed) fixed_desc << ' ' << name << '=' << format_double(value);
  csv.comment("model=" + model_name(m) + " p1=" + g1.name + " p2=" + g2.name +
              (fixed.empty() ? "" : " fixed:" + fixed_desc.str()));
  std::vector<std::string> head = {"p1", "p2", "scalar"};
  head.insert(head.end(), extras.begin(), extras.end());
  csv.header(head);
  for (const auto& row : table) csv.row(row);
  return {csv.str()};
}

// ------------------------------------------------------------- rho-curve

Emission cmd_rho_curve(const CommonOptions& o) {
  const Model m = parse_model(o.model);
  if (m != Model::kM1 && m != Model::kM2) throw UsageError("rho-curve needs model m1 or m2");
  if (o.grids.size() != 1) throw UsageError("rho-curve needs one --grid rho=lo:hi:count");
  const GridSpec g = parse_grid(o.grids[0]);
  if (g.name != "rho") throw UsageError("rho-curve grid must be named rho");
  if (!(g.lo > 0.0) || !(g.hi < 1.0)) throw DomainError("rho grid must lie inside (0, 1)");
  const auto curve = scalar_vs_rho_curve(submanifold_id(m), g.values());
  CsvBuilder csv;
  csv.header({"rho", "R"});
  for (const auto& [rho, r] : curve) csv.row(std::vector<double>{rho, r});
  return {csv.str()};
}

// ------------------------------------------------------------- immersion

Emission cmd_immersion(const CommonOptions& o, double radius) {
  GridSpec mu_grid, alpha_grid;
  bool have_mu = false, have_alpha = false;
  for (const auto& text : o.grids) {
    GridSpec g = parse_grid(text);
    if (g.name == "mu") {
      mu_grid = g;
      have_mu = true;
    } else if (g.name == "alpha") {
      alpha_grid = g;
      have_alpha = true;
    } else {
      throw UsageError("immersion grids are named mu and alpha, got '" + g.name + "'");
    }
  }
  if (!have_mu || !have_alpha) throw UsageError("immersion needs --grid mu=... and --grid alpha=...");
  if (!(mu_grid.lo > 0.0) || !(alpha_grid.lo > 0.0)) {
    throw DomainError("immersion grids need mu > 0 and alpha > 0");
  }
  TubeSpec tube;
  tube.radius = radius;
  tube.validate();
  const std::vector<SurfaceRow> surface =
      immersion_surface_grid(mu_grid.values(), alpha_grid.values());
  std::vector<double> dist(surface.size());
  parallel_for(surface.size(), [&](size_t k) {
    const SurfaceRow& r = surface[k];
    dist[k] = distance_to_exponential_curve(Eigen::Vector3d(r.mu, r.alpha, r.z), tube.mu_lo,
                                            tube.mu_hi)
                  .distance;
  });
  CsvBuilder csv;
  csv.header({"mu", "alpha", "beta", "z", "dist_to_exp_curve", "in_tube"});
  for (size_t k = 0; k < surface.size(); ++k) {
    const SurfaceRow& r = surface[k];
    csv.row(std::vector<std::string>{format_double(r.mu), format_double(r.alpha),
                                     format_double(r.beta), format_double(r.z),
                                     format_double(dist[k]), dist[k] < tube.radius ? "1" : "0"});
  }
  return {csv.str()};
}

// ---------------------------------------------------------- oracle-check

double default_oracle_tol(Model m) { return m == Model::kMcKay5 ? 1e-4 : 1e-5; }

FisherMatrix oracle_metric(Model m, const ParamMap& params, const VectorXd& x) {
  switch (m) {
    case Model::kMcKay: return fisher_bivariate_wedge(mckay_family(), x);
    case Model::kMcKay5: return fisher_bivariate_wedge(five_gamma_family(), x);
    case Model::kM1:
    case Model::kM2:
    case Model::kM3: {
      const SubmanifoldId id = submanifold_id(m);
      FisherMatrix full = fisher_bivariate_wedge(mckay_family(), embed_in_mckay(id, x));
      const int fixed = fixed_coordinate(id);
      std::vector<int> keep;
      for (int i = 0; i < 3; ++i)
        if (i != fixed) keep.push_back(i);
      FisherMatrix sub;
      sub.entries = full.entries(keep, keep);
      sub.params = x;
      sub.estimated_error = full.estimated_error;
      return sub;
    }
    case Model::kGamma:
      return params.count("mu") ? fisher_univariate(gamma_natural_family(), x)
                                : fisher_univariate(gamma_family(), x);
    case Model::kLogGamma: return fisher_univariate(loggamma_family(), x);
    case Model::kGamma3: break;
  }
  throw UsageError("model gamma3 has no Fisher metric here (its support depends on g1)");
}

Emission cmd_oracle_check(const CommonOptions& o, double tol, const Hooks& hooks) {
  const Model m = parse_model(o.model);
  const ParamMap params = parse_params(o.params);
  const VectorXd x = chart_point(m, params);
  if (tol <= 0.0) tol = default_oracle_tol(m);
  const std::vector<std::string> names = chart_names(m, params);
  const MatrixXd closed = hooks.closed_form_metric ? hooks.closed_form_metric(model_name(m), x)
                                                   : closed_form_metric(m, params, x);
  const FisherMatrix oracle = oracle_metric(m, params, x);
  if (closed.rows() != oracle.entries.rows() || closed.cols() != oracle.entries.cols()) {
    throw std::logic_error("closed-form and oracle metrics differ in shape");
  }
  const MatrixXd diff = (closed - oracle.entries).cwiseAbs();
  const double max_abs = diff.maxCoeff();
  double max_rel = 0.0;
  for (int i = 0; i < diff.rows(); ++i)
    for (int j = 0; j < diff.cols(); ++j) {
      // Same 1e-9 floor as the curvature tolerance; structural zeros have no scale.
      max_rel = std::max(max_rel, diff(i, j) / std::max(std::abs(oracle.entries(i, j)), 1e-9));
    }
  const bool ok = max_abs <= tol;
  json j = header("oracle-check");
  j["model"] = model_name(m);
  j["coordinates"] = names;
  j["params"] = params_json(names, x);
  j["closed_form"] = matrix_json(closed);
  j["oracle"] = matrix_json(oracle.entries);
  j["oracle_error_estimate"] = oracle.estimated_error;
  j["max_abs_dev"] = max_abs;
  j["max_rel_dev"] = max_rel;
  j["tolerance"] = tol;
  j["within_tolerance"] = ok;
  return {j.dump(2) + "\n", ok ? kExitOk : kExitFlagged};
}

// -------------------------------------------------------------- geodesic

Emission cmd_geodesic(const CommonOptions& o, const std::string& from, const std::string& to,
                      bool polyline, int steps) {
  const Model m = parse_model(o.model);
  const ParamMap pf = parse_params(from);
  const ParamMap pt = parse_params(to);
  if (chart_names(m, pf) != chart_names(m, pt)) {
    throw UsageError("--from and --to must use the same chart");
  }
  const VectorXd p = chart_point(m, pf);
  const VectorXd q = chart_point(m, pt);
  const MetricField field = model_field(m, pf);
  if (steps < 16) throw UsageError("--steps must be >= 16");
  GeodesicConfig cfg;
  cfg.steps = steps;
  const ShootingResult r = geodesic_distance(field, p, q, cfg);
  const std::vector<std::string> names = chart_names(m, pf);
  json j = header("geodesic");
  j["model"] = model_name(m);
  j["coordinates"] = names;
  j["from"] = params_json(names, p);
  j["to"] = params_json(names, q);
  j["distance"] = number_json(r.distance);
  j["converged"] = r.converged;
  j["residual"] = number_json(r.residual);
  j["method"] = r.method;
  j["initial_velocity"] = vector_json(r.initial_velocity);
  if (polyline) {
    std::vector<VectorXd> pts = r.polyline;
    if (pts.empty()) {
      if (r.initial_velocity.norm() == 0.0) {
        pts = {p, q};
      } else {
        pts = integrate_geodesic(field, p, r.initial_velocity, 1.0, steps, cfg.derivatives).points;
      }
    }
    json poly = json::array();
    for (const auto& v : pts) poly.push_back(vector_json(v));
    j["polyline"] = std::move(poly);
  }
  return {j.dump(2) + "\n", r.converged ? kExitOk : kExitNoConverge};
}

// ---------------------------------------------------------------- sample

McKayRateParams sample_params(const ParamMap& p) {
  for (const auto& [name, v] : p) {
    if (name != "a1" && name != "a2" && name != "c" && name != "s12") {
      throw UsageError("sample takes a1, a2 and one of c, s12; got '" + name + "'");
    }
  }
  if (!p.count("a1") || !p.count("a2")) throw UsageError("sample needs a1 and a2");
  if (p.count("c") == p.count("s12")) throw UsageError("sample needs exactly one of c, s12");
  if (p.count("c")) return McKayRateParams(p.at("a1"), p.at("c"), p.at("a2"));
  return McKayParams(p.at("a1"), p.at("s12"), p.at("a2")).to_rate();
}

Emission cmd_sample(const std::string& spec, long long n, std::uint64_t seed) {
  if (n < 1) throw UsageError("-n must be >= 1");
  const McKayRateParams rp = sample_params(parse_params(spec));
  const BivariateSample s = sample_mckay(rp, static_cast<size_t>(n), seed);
  CsvBuilder csv;
  csv.comment("seed=" + std::to_string(seed) + " a1=" + format_double(rp.alpha1()) +
              " c=" + format_double(rp.c()) + " a2=" + format_double(rp.alpha2()));
  csv.header({"x", "y"});
  for (const auto& pt : s.pairs) csv.row(std::vector<double>{pt.x, pt.y});
  return {csv.str()};
}

// ------------------------------------------------------------------- fit

BivariateSample read_sample_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read input file '" + path + "'");
  BivariateSample s;
  std::string line;
  bool have_header = false;
  size_t line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      if (line != "x,y") throw UsageError(path + ": expected header 'x,y'");
      have_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected two fields");
    }
    try {
      size_t used_x = 0, used_y = 0;
      const std::string xs = line.substr(0, comma), ys = line.substr(comma + 1);
      const double x = std::stod(xs, &used_x);
      const double y = std::stod(ys, &used_y);
      if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing");
      s.pairs.push_back({x, y});
    } catch (const std::logic_error&) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": malformed number");
    }
  }
  if (!have_header) throw UsageError(path + ": no 'x,y' header");
  return s;
}

json fit_json(const FitResult& r) {
  const McKayParams& p = r.params;
  return {{"method", to_string(r.method)},
          {"params", {{"a1", p.alpha1()}, {"s12", p.sigma12()}, {"a2", p.alpha2()}}},
          {"c", p.rate()},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"loglik", number_json(r.loglik)},
          {"std_errors",
           {{"a1", number_json(r.std_errors[0])},
            {"s12", number_json(r.std_errors[1])},
            {"a2", number_json(r.std_errors[2])}}},
          {"degenerate", r.degenerate}};
}

Emission cmd_fit(const std::string& input, const std::string& method) {
  if (method != "moments" && method != "mle" && method != "both") {
    throw UsageError("--method must be moments, mle or both");
  }
  const BivariateSample s = read_sample_csv(input);
  const FitResult mom = fit_moments(s);
  json fits = json::array();
  int code = kExitOk;
  if (method != "mle") fits.push_back(fit_json(mom));
  if (method != "moments") {
    const FitResult mle = fit_mle(s, mom.params);
    fits.push_back(fit_json(mle));
    if (!mle.converged) code = kExitNoConverge;
  }
  json j = header("fit");
  j["n"] = s.n();
  j["fits"] = std::move(fits);
  return {j.dump(2) + "\n", code};
}

// ------------------------------------------------------------------ main

void add_out(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--out,-o", o.out, "output file (written atomically); stdout if omitted");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"gammageo: information geometry of gamma-family manifolds"};
  app.require_subcommand(1);
  app.footer(
      "Models: gamma (alpha,beta or mu,alpha), loggamma (alpha,beta), gamma3 (beta,alpha,g1),\n"
      "mckay (a1,s12,a2), mckay5 (a1,a2,s12,g1,g2), m1 (s12,a2), m2 (a1,s12), m3 (a1,a2).\n"
      "Grids: name=lo:hi:count with count >= 2. Threads: GAMMAGEO_THREADS.\n"
      "Exit codes: 0 ok, 2 bad arguments or domain, 3 computed but flagged, 4 no convergence.");

  CommonOptions o;
  bool inverse = false, polyline = false;
  double rel_tol = 1e-7, abs_tol = 1e-9, oracle_tol = 0.0, radius = 0.2;
  std::string from, to, input, method = "both";
  long long n = 1000;
  std::uint64_t seed = 42;
  int steps = 200;

  auto* metric = app.add_subcommand("metric", "closed-form Fisher metric at a point");
  metric->add_option("--model,-m", o.model, "model name")->required();
  metric->add_option("--params,-p", o.params, kParamHelp)->required();
  metric->add_flag("--inverse", inverse, "also emit the inverse metric");
  metric->add_option("--format,-f", o.format, "csv or json")->capture_default_str();
  add_out(metric, o);

  auto* curv = app.add_subcommand("curvature", "closed-form vs pipeline curvature report");
  curv->add_option("--model,-m", o.model, "model name")->required();
  curv->add_option("--params,-p", o.params, kParamHelp)->required();
  curv->add_option("--objects", o.objects,
                   "restrict to: metric,inverse,christoffel,riemann,ricci,scalar,sectional,mean");
  curv->add_option("--rel-tol", rel_tol, "relative agreement tolerance")->capture_default_str();
  curv->add_option("--abs-tol", abs_tol, "absolute agreement floor")->capture_default_str();
  curv->add_option("--format,-f", o.format, "csv or json")->capture_default_str();
  add_out(curv, o);

  auto* sweep = app.add_subcommand("sweep", "scalar curvature over a 2-D parameter grid (CSV)");
  sweep->add_option("--model,-m", o.model, "mckay, m1, m2 or m3")->capture_default_str();
  sweep->add_option("--grid,-g", o.grids, "two grids name=lo:hi:count")->required();
  sweep->add_option("--params,-p", o.params, "fixed parameters");
  sweep->add_option("--objects", o.objects,
                    "extra columns: pipeline_scalar, sectional12/13/23, mean1/2/3, denominator");
  add_out(sweep, o);

  auto* rho = app.add_subcommand("rho-curve", "scalar curvature against correlation (CSV)");
  rho->add_option("--model,-m", o.model, "m1 or m2")->required();
  rho->add_option("--grid,-g", o.grids, "rho=lo:hi:count inside (0, 1)")->required();
  add_out(rho, o);

  auto* imm = app.add_subcommand("immersion", "affine immersion surface and tube (CSV)");
  imm->add_option("--grid,-g", o.grids, "mu=lo:hi:count and alpha=lo:hi:count")->required();
  imm->add_option("--radius", radius, "tube radius")->capture_default_str();
  add_out(imm, o);

  auto* oracle = app.add_subcommand("oracle-check", "printed metric vs quadrature oracle (JSON)");
  oracle->add_option("--model,-m", o.model, "model name")->required();
  oracle->add_option("--params,-p", o.params, kParamHelp)->required();
  oracle->add_option("--tol", oracle_tol,
                     "max absolute deviation (default 1e-5; 1e-4 for mckay5)");
  add_out(oracle, o);

  auto* geo = app.add_subcommand("geodesic", "geodesic distance between two points (JSON)");
  geo->add_option("--model,-m", o.model, "model name")->capture_default_str();
  geo->add_option("--from", from, "start point, name=value list")->required();
  geo->add_option("--to", to, "end point, name=value list")->required();
  geo->add_option("--steps", steps, "RK4 steps per shot")->capture_default_str();
  geo->add_flag("--polyline", polyline, "include the path points");
  add_out(geo, o);

  auto* sample = app.add_subcommand("sample", "seeded McKay draws (CSV x,y)");
  std::string sample_spec = "a1=2,s12=1,a2=3";
  sample->add_option("--params,-p", sample_spec, "a1, a2 and one of c or s12")
      ->capture_default_str();
  sample->add_option("-n", n, "number of pairs")->capture_default_str();
  sample->add_option("--seed", seed, "RNG seed")->capture_default_str();
  add_out(sample, o);

  auto* fit = app.add_subcommand("fit", "moment and ML estimates from an x,y CSV (JSON)");
  fit->add_option("--input,-i", input, "CSV with header x,y")->required();
  fit->add_option("--method", method, "moments, mle or both")->capture_default_str();
  add_out(fit, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    Emission e;
    if (metric->parsed()) {
      e = cmd_metric(o, inverse);
    } else if (curv->parsed()) {
      e = cmd_curvature(o, rel_tol, abs_tol);
    } else if (sweep->parsed()) {
      e = cmd_sweep(o);
    } else if (rho->parsed()) {
      e = cmd_rho_curve(o);
    } else if (imm->parsed()) {
      e = cmd_immersion(o, radius);
    } else if (oracle->parsed()) {
      e = cmd_oracle_check(o, oracle_tol, hooks);
    } else if (geo->parsed()) {
      e = cmd_geodesic(o, from, to, polyline, steps);
    } else if (sample->parsed()) {
      e = cmd_sample(sample_spec, n, seed);
    } else {
      e = cmd_fit(input, method);
    }
    if (o.out.empty()) {
      out << e.content;
    } else {
      write_atomic(o.out, e.content);
    }
    if (e.code == kExitFlagged) err << "gammageo: check failed; see report\n";
    if (e.code == kExitNoConverge) err << "gammageo: did not converge; see report\n";
    return e.code;
  } catch (const UsageError& ex) {
    err << "gammageo: " << ex.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& ex) {
    err << "gammageo: no convergence: " << ex.what() << "\n";
    return kExitNoConverge;
  } catch (const DomainError& ex) {
    err << "gammageo: domain violation: " << ex.what() << "\n";
    return kExitDomain;
  } catch (const SingularMatrixError& ex) {
    err << "gammageo: domain violation: " << ex.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& ex) {
    err << "gammageo: internal error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace gammageo::cli
