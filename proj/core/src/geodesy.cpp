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

#include "gammageo/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace gammageo {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd acceleration(const MetricField& field, const VectorXd& x, const VectorXd& v,
                      const DerivativeConfig& cfg) {
  const Tensor3 g = christoffels(field, x, cfg);
  const int n = field.dim;
  VectorXd a = VectorXd::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[k] -= g(k, i, j) * v[i] * v[j];
  return a;
}

// Endpoint of the geodesic from p with velocity v at t = 1.
VectorXd endpoint(const MetricField& field, const VectorXd& p, const VectorXd& v, int steps,
                  const DerivativeConfig& cfg) {
  return integrate_geodesic(field, p, v, 1.0, steps, cfg).points.back();
}

struct NewtonOutcome {
  VectorXd v;
  double residual;
  bool converged;
};

NewtonOutcome newton_shoot(const MetricField& field, const VectorXd& p,
                           const VectorXd& target, VectorXd v, int steps,
                           const GeodesicConfig& cfg) {
  const int n = field.dim;
  auto residual_of = [&](const VectorXd& vel, VectorXd* miss) {
    try {
      *miss = endpoint(field, p, vel, steps, cfg.derivatives) - target;
      return miss->cwiseAbs().maxCoeff();
    } catch (const DomainError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  VectorXd F;
  double res = residual_of(v, &F);
  for (int it = 0; it < cfg.max_newton && std::isfinite(res); ++it) {
    if (res < cfg.residual_tol) return {v, res, true};
    MatrixXd J(n, n);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(v[j]));
      VectorXd vp = v, vm = v, Fp, Fm;
      vp[j] += h;
      vm[j] -= h;
      ok = std::isfinite(residual_of(vp, &Fp)) && std::isfinite(residual_of(vm, &Fm));
      if (ok) J.col(j) = (Fp - Fm) / (2.0 * h);
    }
    if (!ok) break;
    const VectorXd delta = J.colPivHouseholderQr().solve(-F);
    if (!delta.allFinite()) break;
    bool accepted = false;
    for (double lambda = 1.0; lambda >= 1.0 / 64.0; lambda *= 0.5) {
      VectorXd trial = v + lambda * delta, Ft;
      const double rt = residual_of(trial, &Ft);
      if (rt < res) {
        v = trial;
        F = Ft;
        res = rt;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return {v, res, res < cfg.residual_tol};
}

// Homotopy on the target p + s (q - p), s from 0 to 1.
NewtonOutcome shoot_with_continuation(const MetricField& field, const VectorXd& p,
                                      const VectorXd& q, int steps,
                                      const GeodesicConfig& cfg) {
  const VectorXd chord = q - p;
  NewtonOutcome direct = newton_shoot(field, p, q, chord, steps, cfg);
  if (direct.converged) return direct;
  double done = 0.0, ds = 0.5;
  VectorXd v = VectorXd::Zero(field.dim);
  NewtonOutcome best = direct;
  while (done < 1.0 && ds >= 1.0 / 256.0) {
    const double s = std::min(1.0, done + ds);
    const VectorXd guess = done > 0.0 ? VectorXd(v * (s / done)) : VectorXd(chord * s);
    NewtonOutcome o = newton_shoot(field, p, p + s * chord, guess, steps, cfg);
    if (o.converged) {
      done = s;
      v = o.v;
      best = o;
      ds = std::min(2.0 * ds, 1.0);
    } else {
      ds *= 0.5;
    }
  }
  if (done < 1.0) {
    best.converged = false;
    if (!std::isfinite(best.residual) || done > 0.0) best.residual = direct.residual;
  }
  return best;
}

double segment_energy(const MetricField& field, const VectorXd& a, const VectorXd& b) {
  const VectorXd mid = 0.5 * (a + b);
  if (!field.in_domain(mid)) return std::numeric_limits<double>::infinity();
  const VectorXd d = b - a;
  return d.dot(field.metric(mid) * d);
}

ShootingResult polyline_fallback(const MetricField& field, const VectorXd& p,
                                 const VectorXd& q, const GeodesicConfig& cfg) {
  const int segments = std::max(cfg.polyline_points, 2) + 1;
  std::vector<VectorXd> pts(segments + 1);
  for (int i = 0; i <= segments; ++i) pts[i] = p + (q - p) * (double(i) / segments);
  const double scale = std::max((q - p).cwiseAbs().maxCoeff(), 1e-12);
  double step = 0.1 * scale;
  int sweeps = 0;
  while (step > 1e-10 * scale && sweeps < cfg.max_sweeps) {
    ++sweeps;
    bool improved = false;
    for (int i = 1; i < segments; ++i)
      for (int k = 0; k < field.dim; ++k) {
        const double before =
            segment_energy(field, pts[i - 1], pts[i]) + segment_energy(field, pts[i], pts[i + 1]);
        for (double sgn : {1.0, -1.0}) {
          VectorXd trial = pts[i];
          trial[k] += sgn * step;
          if (!field.in_domain(trial)) continue;
          const double after = segment_energy(field, pts[i - 1], trial) +
                               segment_energy(field, trial, pts[i + 1]);
          if (after < before) {
            pts[i] = trial;
            improved = true;
            break;
          }
        }
      }
    if (!improved) step *= 0.5;
  }
  ShootingResult r;
  r.method = "polyline";
  r.converged = step <= 1e-10 * scale;
  r.residual = 0.0;
  for (int i = 0; i < segments; ++i) r.distance += std::sqrt(segment_energy(field, pts[i], pts[i + 1]));
  r.initial_velocity = (pts[1] - pts[0]) * segments;
  r.polyline = std::move(pts);
  return r;
}

}  // namespace

double speed_squared(const MetricField& field, const VectorXd& x, const VectorXd& v) {
  return v.dot(field.metric(x) * v);
}

GeodesicPath integrate_geodesic(const MetricField& field, const VectorXd& x0,
                                const VectorXd& v0, double t_end, int steps,
                                const DerivativeConfig& cfg) {
  if (steps < 16) throw DomainError("integrate_geodesic: steps must be >= 16");
  if (x0.size() != field.dim || v0.size() != field.dim || !field.in_domain(x0)) {
    throw DomainError("integrate_geodesic: start point outside the domain");
  }
  const double h = t_end / steps;
  GeodesicPath path;
  path.points.reserve(steps + 1);
  path.velocities.reserve(steps + 1);
  path.points.push_back(x0);
  path.velocities.push_back(v0);
  path.energy = speed_squared(field, x0, v0);
  VectorXd x = x0, v = v0;
  for (int s = 0; s < steps; ++s) {
    try {
      auto acc = [&](const VectorXd& y, const VectorXd& u) {
        if (!field.in_domain(y)) throw DomainError("stage outside the domain");
        return acceleration(field, y, u, cfg);
      };
      const VectorXd k1x = v, k1v = acc(x, v);
      const VectorXd k2x = v + 0.5 * h * k1v, k2v = acc(x + 0.5 * h * k1x, k2x);
      const VectorXd k3x = v + 0.5 * h * k2v, k3v = acc(x + 0.5 * h * k2x, k3x);
      const VectorXd k4x = v + h * k3v, k4v = acc(x + h * k3x, k4x);
      VectorXd xn = x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      VectorXd vn = v + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      if (!field.in_domain(xn)) throw DomainError("step outside the domain");
      x = std::move(xn);
      v = std::move(vn);
    } catch (const DomainError& e) {
      throw DomainExitError(std::string("integrate_geodesic: left the chart: ") + e.what(),
                            s * h, x, v);
    } catch (const SingularMatrixError& e) {
      // Inside the chart but past the conditioning limit; treated as an exit.
      throw DomainExitError(std::string("integrate_geodesic: left the usable chart: ") + e.what(),
                            s * h, x, v);
    }
    path.points.push_back(x);
    path.velocities.push_back(v);
  }
  path.step_count = steps;
  return path;
}

ShootingResult geodesic_distance(const MetricField& field, const VectorXd& p,
                                 const VectorXd& q, const GeodesicConfig& cfg) {
  if (p.size() != field.dim || q.size() != field.dim || !field.in_domain(p) ||
      !field.in_domain(q)) {
    throw DomainError("geodesic_distance: endpoints must lie in the domain");
  }
  ShootingResult r;
  r.method = "shooting";
  if (p == q) {
    r.initial_velocity = VectorXd::Zero(field.dim);
    r.converged = true;
    return r;
  }
  int steps = cfg.steps;
  NewtonOutcome o = shoot_with_continuation(field, p, q, steps, cfg);
  // Step doubling: accept once the endpoint is stable at twice the steps.
  for (int doubling = 0; o.converged && doubling < 3; ++doubling) {
    VectorXd end2;
    try {
      end2 = endpoint(field, p, o.v, 2 * steps, cfg.derivatives);
    } catch (const DomainError&) {
      break;
    }
    if ((end2 - q).cwiseAbs().maxCoeff() < 10.0 * cfg.residual_tol) break;
    steps *= 2;
    o = newton_shoot(field, p, q, o.v, steps, cfg);
  }
  if (o.converged) {
    r.initial_velocity = o.v;
    r.residual = o.residual;
    r.converged = true;
    r.distance = std::sqrt(std::max(0.0, speed_squared(field, p, o.v)));
    return r;
  }
  ShootingResult fb = polyline_fallback(field, p, q, cfg);
  if (!fb.converged) fb.residual = o.residual;
  return fb;
}

SliceDistance distance_to_submanifold(const MetricField& field, const VectorXd& p,
                                      int fixed_index, double fixed_value,
                                      const std::vector<std::pair<double, double>>& box,
                                      int grid_points, const GeodesicConfig& cfg) {
  const int m = field.dim - 1;
  if (fixed_index < 0 || fixed_index >= field.dim || static_cast<int>(box.size()) != m ||
      grid_points < 2) {
    throw DomainError("distance_to_submanifold: invalid slice or search box");
  }
  for (const auto& [lo, hi] : box) {
    if (!(hi > lo)) throw DomainError("distance_to_submanifold: empty search interval");
  }
  auto lift = [&](const VectorXd& y) {
    VectorXd x(field.dim);
    for (int i = 0, k = 0; i < field.dim; ++i) x[i] = i == fixed_index ? fixed_value : y[k++];
    return x;
  };
  VectorXd p_free(m);
  for (int i = 0, k = 0; i < field.dim; ++i)
    if (i != fixed_index) p_free[k++] = p[i];
  bool p_in_box = p[fixed_index] == fixed_value;
  for (int k = 0; k < m; ++k) p_in_box = p_in_box && p_free[k] >= box[k].first && p_free[k] <= box[k].second;
  if (p_in_box) return {0.0, p, false, true};

  auto dist = [&](const VectorXd& y) {
    const VectorXd x = lift(y);
    if (!field.in_domain(x)) return std::numeric_limits<double>::infinity();
    const ShootingResult r = geodesic_distance(field, p, x, cfg);
    return r.converged ? r.distance : std::numeric_limits<double>::infinity();
  };
  // Grid.
  VectorXd best(m);
  double best_d = std::numeric_limits<double>::infinity();
  std::vector<int> idx(m, 0);
  while (true) {
    VectorXd y(m);
    for (int k = 0; k < m; ++k) {
      y[k] = box[k].first + (box[k].second - box[k].first) * idx[k] / (grid_points - 1);
    }
    const double d = dist(y);
    if (d < best_d) {
      best_d = d;
      best = y;
    }
    int k = 0;
    while (k < m && ++idx[k] == grid_points) idx[k++] = 0;
    if (k == m) break;
  }
  if (!std::isfinite(best_d)) {
    throw ConvergenceError("distance_to_submanifold: no slice point reachable", best_d);
  }
  // Compass search, clipped to the box.
  VectorXd step(m);
  for (int k = 0; k < m; ++k) step[k] = (box[k].second - box[k].first) / (grid_points - 1);
  const VectorXd min_step = step * 1e-7;
  while ((step.array() > min_step.array()).any()) {
    bool improved = false;
    for (int k = 0; k < m && !improved; ++k)
      for (double sgn : {1.0, -1.0}) {
        VectorXd y = best;
        y[k] = std::clamp(y[k] + sgn * step[k], box[k].first, box[k].second);
        if (y[k] == best[k]) continue;
        const double d = dist(y);
        if (d < best_d) {
          best_d = d;
          best = y;
          improved = true;
          break;
        }
      }
    if (!improved) step *= 0.5;
  }
  bool edge = false;
  for (int k = 0; k < m; ++k) {
    const double tol = 1e-6 * (box[k].second - box[k].first);
    edge = edge || best[k] - box[k].first < tol || box[k].second - best[k] < tol;
  }
  return {best_d, lift(best), edge, true};
}

}  // namespace gammageo
