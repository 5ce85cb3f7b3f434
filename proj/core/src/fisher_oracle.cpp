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

#include "gammageo/fisher_oracle.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "gammageo/distributions.hpp"
#include "gammageo/errors.hpp"
#include "gammageo/special_functions.hpp"

namespace gammageo {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd flatten(const MatrixXd& m) {
  return Eigen::Map<const VectorXd>(m.data(), m.size());
}

MatrixXd unflatten(const VectorXd& v, int dim) {
  MatrixXd m = Eigen::Map<const MatrixXd>(v.data(), dim, dim);
  return 0.5 * (m + m.transpose());
}

void require_domain(bool ok, const std::string& name) {
  if (!ok) throw DomainError(name + ": parameters outside the manifold domain");
}

bool all_positive(const VectorXd& p, int n) {
  for (int i = 0; i < n; ++i) {
    if (!(p[i] > 0.0) || !std::isfinite(p[i])) return false;
  }
  return true;
}

// Integrand value is weight(x) * a(x) with weight a density; skip points where
// the density has underflowed so 0 * inf never appears.
template <typename F>
VectorXd weighted(double log_density, int n, F&& body) {
  const double w = std::exp(log_density);
  if (!(w > 0.0)) return VectorXd::Zero(n);
  return body() * w;
}

enum class Form { kHessian, kScore };

FisherMatrix univariate_impl(const UnivariateFamily& family, const VectorXd& params,
                             const QuadratureConfig& cfg, Form form) {
  cfg.validate();
  require_domain(family.in_domain(params), family.name);
  const int d = family.dim;
  const UnivariateKernel k = family.bind(params, cfg.tail_cutoff_mass);
  auto integrand = [&](double x) -> VectorXd {
    return weighted(k.log_density(x), d * d, [&]() -> VectorXd {
      if (form == Form::kHessian) return flatten(-k.param_hessian(x));
      const VectorXd s = k.score(x);
      return flatten(s * s.transpose());
    });
  };
  QuadratureResult r = integrate_endpoint_powers(integrand, d * d, k.support.lo,
                                                 k.support.hi, k.support.lo_power,
                                                 k.support.hi_power, cfg);
  return {unflatten(r.value, d), params, r.error};
}

FisherMatrix wedge_impl(const WedgeFamily& family, const VectorXd& params,
                        const QuadratureConfig& cfg, Form form) {
  cfg.validate();
  require_domain(family.in_domain(params), family.name);
  const int d = family.dim;
  const WedgeKernel k = family.bind(params, cfg.tail_cutoff_mass);
  // The last channel carries the inner quadrature error, so it is
  // integrated with the same outer weights as the values.
  auto outer = [&](double u) -> VectorXd {
    auto inner = [&](double w) -> VectorXd {
      return weighted(k.log_density(u, w), d * d, [&]() -> VectorXd {
        if (form == Form::kHessian) return flatten(-k.param_hessian(u, w));
        const VectorXd s = k.score(u, w);
        return flatten(s * s.transpose());
      });
    };
    QuadratureResult r = integrate_endpoint_powers(
        inner, d * d, 0.0, k.support.w_hi,
        k.support.w_power - k.support.derivative_shift, 1.0, cfg);
    VectorXd out(d * d + 1);
    out << r.value, r.error;
    return out;
  };
  QuadratureResult r = integrate_endpoint_powers(
      outer, d * d + 1, 0.0, k.support.u_hi,
      k.support.u_power - k.support.derivative_shift, 1.0, cfg);
  return {unflatten(r.value.head(d * d), d), params, r.error + std::abs(r.value[d * d])};
}

// McKay log density with (alpha1, sigma12, alpha2) bound, in rate form.
struct McKayConstants {
  double a1, s, a2, c, norm;
  explicit McKayConstants(const VectorXd& p)
      : a1(p[0]), s(p[1]), a2(p[2]), c(std::sqrt(p[0] / p[1])) {
    norm = 0.5 * (a1 + a2) * (std::log(a1) - std::log(s)) - log_gamma(a1) -
           log_gamma(a2);
  }
};

}  // namespace

UnivariateFamily gamma_family() {
  UnivariateFamily f;
  f.name = "gamma";
  f.dim = 2;
  f.in_domain = [](const VectorXd& p) { return p.size() == 2 && all_positive(p, 2); };
  f.log_density = [](double x, const VectorXd& p) {
    return gamma_logpdf(x, GammaParams(p[0], p[1]));
  };
  f.bind = [](const VectorXd& p, double tail_mass) {
    const double a = p[0], b = p[1];
    const double norm = a * std::log(a / b) - log_gamma(a);
    const double psi1 = trigamma(a);
    UnivariateKernel k;
    k.log_density = [=](double x) { return norm + (a - 1.0) * std::log(x) - a * x / b; };
    k.param_hessian = [=](double x) {
      MatrixXd h(2, 2);
      h(0, 0) = 1.0 / a - psi1;
      h(0, 1) = h(1, 0) = -1.0 / b + x / (b * b);
      h(1, 1) = a / (b * b) - 2.0 * a * x / (b * b * b);
      return h;
    };
    const double psi = digamma(a);
    k.score = [=](double x) {
      VectorXd s(2);
      s[0] = std::log(a / b) + 1.0 + std::log(x) - x / b - psi;
      s[1] = -a / b + a * x / (b * b);
      return s;
    };
    k.support = {0.0, gamma_upper_cutoff(a, a / b, tail_mass), a - 1.0, 1.0};
    return k;
  };
  return f;
}

UnivariateFamily gamma_natural_family() {
  UnivariateFamily f;
  f.name = "gamma-natural";
  f.dim = 2;
  f.in_domain = [](const VectorXd& p) { return p.size() == 2 && all_positive(p, 2); };
  f.log_density = [](double x, const VectorXd& p) {
    return ShapeRate{p[1], p[0]}.logpdf(x);
  };
  f.bind = [](const VectorXd& p, double tail_mass) {
    const double mu = p[0], a = p[1];
    const double norm = a * std::log(mu) - log_gamma(a);
    const double psi1 = trigamma(a);
    const double psi = digamma(a);
    UnivariateKernel k;
    k.log_density = [=](double x) { return norm + (a - 1.0) * std::log(x) - mu * x; };
    k.param_hessian = [=](double) {
      MatrixXd h(2, 2);
      h(0, 0) = -a / (mu * mu);
      h(0, 1) = h(1, 0) = 1.0 / mu;
      h(1, 1) = -psi1;
      return h;
    };
    k.score = [=](double x) {
      VectorXd s(2);
      s[0] = a / mu - x;
      s[1] = std::log(mu) + std::log(x) - psi;
      return s;
    };
    k.support = {0.0, gamma_upper_cutoff(a, mu, tail_mass), a - 1.0, 1.0};
    return k;
  };
  return f;
}

UnivariateFamily loggamma_family() {
  UnivariateFamily f;
  f.name = "loggamma";
  f.dim = 2;
  f.in_domain = [](const VectorXd& p) { return p.size() == 2 && all_positive(p, 2); };
  f.log_density = [](double n, const VectorXd& p) {
    return loggamma_logpdf(n, LogGammaParams(p[0], p[1]));
  };
  f.bind = [](const VectorXd& p, double tail_mass) {
    const double a = p[0], b = p[1];
    const double norm = a * std::log(a / b) - log_gamma(a);
    const double psi1 = trigamma(a);
    const double psi = digamma(a);
    // L = -log N is Gamma(a, a / b); N below exp(-cutoff) carries the tail.
    const double l_max = gamma_upper_cutoff(a, a / b, tail_mass);
    UnivariateKernel k;
    k.log_density = [=](double n) -> double {
      const double l = -std::log(n);
      if (!(l > 0.0) || l > l_max) return -std::numeric_limits<double>::infinity();
      return norm + (a / b - 1.0) * std::log(n) + (a - 1.0) * std::log(l);
    };
    k.param_hessian = [=](double n) {
      const double l = -std::log(n);
      MatrixXd h(2, 2);
      h(0, 0) = 1.0 / a - psi1;
      h(0, 1) = h(1, 0) = l / (b * b) - 1.0 / b;
      h(1, 1) = -2.0 * a * l / (b * b * b) + a / (b * b);
      return h;
    };
    k.score = [=](double n) {
      const double l = -std::log(n);
      VectorXd s(2);
      s[0] = -l / b + std::log(a / b) + 1.0 + std::log(l) - psi;
      s[1] = a * l / (b * b) - a / b;
      return s;
    };
    k.support = {0.0, 1.0, a / b - 1.0, a - 1.0};
    return k;
  };
  return f;
}

WedgeFamily mckay_family() {
  WedgeFamily f;
  f.name = "mckay";
  f.dim = 3;
  f.in_domain = [](const VectorXd& p) { return p.size() == 3 && all_positive(p, 3); };
  f.log_density = [](double x, double y, const VectorXd& p) {
    return mckay_logpdf({x, y}, McKayParams(p[0], p[1], p[2]));
  };
  f.bind = [](const VectorXd& p, double tail_mass) {
    const McKayConstants m(p);
    const double psi1a = trigamma(m.a1), psi1b = trigamma(m.a2);
    const double psia = digamma(m.a1), psib = digamma(m.a2);
    const double half_log = 0.5 * (std::log(m.a1) - std::log(m.s));
    WedgeKernel k;
    k.to_xy = [](double u, double w) { return Eigen::Vector2d(u, u + w); };
    k.log_density = [=](double u, double w) {
      return m.norm + (m.a1 - 1.0) * std::log(u) + (m.a2 - 1.0) * std::log(w) - m.c * (u + w);
    };
    k.param_hessian = [=](double u, double w) {
      const double a1 = m.a1, a2 = m.a2, s = m.s, c = m.c;
      const double y = u + w;
      MatrixXd h(3, 3);
      h(0, 0) = 1.0 / a1 - (a1 + a2) / (2.0 * a1 * a1) + y * c / (4.0 * a1 * a1) - psi1a;
      h(0, 1) = h(1, 0) = -1.0 / (2.0 * s) + y * c / (4.0 * a1 * s);
      h(0, 2) = h(2, 0) = 1.0 / (2.0 * a1);
      h(1, 1) = (a1 + a2) / (2.0 * s * s) - 3.0 * y * c / (4.0 * s * s);
      h(1, 2) = h(2, 1) = -1.0 / (2.0 * s);
      h(2, 2) = -psi1b;
      return h;
    };
    k.score = [=](double u, double w) {
      const double a1 = m.a1, a2 = m.a2, s = m.s, c = m.c;
      const double y = u + w;
      VectorXd g(3);
      g[0] = half_log + (a1 + a2) / (2.0 * a1) + std::log(u) - y * c / (2.0 * a1) - psia;
      g[1] = -(a1 + a2) / (2.0 * s) + y * c / (2.0 * s);
      g[2] = half_log + std::log(w) - psib;
      return g;
    };
    k.support = {gamma_upper_cutoff(m.a1, m.c, tail_mass),
                 gamma_upper_cutoff(m.a2, m.c, tail_mass), m.a1 - 1.0, m.a2 - 1.0};
    return k;
  };
  return f;
}

WedgeFamily five_gamma_family() {
  WedgeFamily f;
  f.name = "five-gamma";
  f.dim = 5;
  f.in_domain = [](const VectorXd& p) {
    return p.size() == 5 && all_positive(p, 3) && p[0] > 2.0 && p[1] > 2.0 &&
           std::isfinite(p[3]) && std::isfinite(p[4]);
  };
  f.log_density = [](double x, double y, const VectorXd& p) {
    return five_gamma_logpdf({x, y},
                             FiveGammaParams::unchecked(p[0], p[1], p[2], p[3], p[4]));
  };
  f.bind = [](const VectorXd& p, double tail_mass) {
    // McKayConstants expects (alpha1, sigma12, alpha2).
    const VectorXd mp = (VectorXd(3) << p[0], p[2], p[1]).finished();
    const McKayConstants m(mp);
    const double g1 = p[3], g2 = p[4];
    const double psi1a = trigamma(m.a1), psi1b = trigamma(m.a2);
    const double psia = digamma(m.a1), psib = digamma(m.a2);
    const double half_log = 0.5 * (std::log(m.a1) - std::log(m.s));
    WedgeKernel k;
    k.to_xy = [=](double u, double w) { return Eigen::Vector2d(u + g1, u + w + g2); };
    k.log_density = [=](double u, double w) {
      const double v = u + w;
      return m.norm + (m.a1 - 1.0) * std::log(u) + (m.a2 - 1.0) * std::log(w) - m.c * v;
    };
    k.param_hessian = [=](double u, double w) {
      const double a1 = m.a1, a2 = m.a2, s = m.s, c = m.c;
      const double v = u + w;
      MatrixXd h = MatrixXd::Zero(5, 5);
      h(0, 0) = 1.0 / a1 - (a1 + a2) / (2.0 * a1 * a1) + v * c / (4.0 * a1 * a1) - psi1a;
      h(0, 1) = 1.0 / (2.0 * a1);
      h(0, 2) = -1.0 / (2.0 * s) + v * c / (4.0 * a1 * s);
      h(0, 3) = -1.0 / u;
      h(0, 4) = c / (2.0 * a1);
      h(1, 1) = -psi1b;
      h(1, 2) = -1.0 / (2.0 * s);
      h(1, 3) = 1.0 / w;
      h(1, 4) = -1.0 / w;
      h(2, 2) = (a1 + a2) / (2.0 * s * s) - 3.0 * v * c / (4.0 * s * s);
      h(2, 4) = -c / (2.0 * s);
      h(3, 3) = -(a1 - 1.0) / (u * u) - (a2 - 1.0) / (w * w);
      h(3, 4) = (a2 - 1.0) / (w * w);
      h(4, 4) = -(a2 - 1.0) / (w * w);
      return MatrixXd(h.selfadjointView<Eigen::Upper>());
    };
    k.score = [=](double u, double w) {
      const double a1 = m.a1, a2 = m.a2, s = m.s, c = m.c;
      const double v = u + w;
      VectorXd g(5);
      g[0] = half_log + (a1 + a2) / (2.0 * a1) + std::log(u) - v * c / (2.0 * a1) - psia;
      g[1] = half_log + std::log(w) - psib;
      g[2] = -(a1 + a2) / (2.0 * s) + v * c / (2.0 * s);
      g[3] = -(a1 - 1.0) / u + (a2 - 1.0) / w;
      g[4] = -(a2 - 1.0) / w + c;
      return g;
    };
    k.support = {gamma_upper_cutoff(m.a1, m.c, tail_mass),
                 gamma_upper_cutoff(m.a2, m.c, tail_mass), m.a1 - 1.0, m.a2 - 1.0, 2.0};
    return k;
  };
  return f;
}

MatrixXd log_density_param_hessian(
    const std::function<double(const VectorXd&)>& log_density, const VectorXd& params,
    double step, const std::function<bool(const VectorXd&)>& in_domain) {
  if (!(step > 0.0)) throw DomainError("log_density_param_hessian: step must be > 0");
  const int d = static_cast<int>(params.size());
  VectorXd h(d);
  for (int i = 0; i < d; ++i) h[i] = step * std::max(1.0, std::abs(params[i]));
  auto eval = [&](const VectorXd& p) {
    if (!in_domain(p)) {
      throw StepUnderflowError("log_density_param_hessian: stencil leaves the domain");
    }
    return log_density(p);
  };
  const double f0 = eval(params);
  MatrixXd H(d, d);
  for (int i = 0; i < d; ++i) {
    VectorXd p = params, q = params;
    p[i] += h[i];
    q[i] -= h[i];
    H(i, i) = (eval(p) - 2.0 * f0 + eval(q)) / (h[i] * h[i]);
    for (int j = i + 1; j < d; ++j) {
      VectorXd pp = params, pm = params, mp = params, mm = params;
      pp[i] += h[i]; pp[j] += h[j];
      pm[i] += h[i]; pm[j] -= h[j];
      mp[i] -= h[i]; mp[j] += h[j];
      mm[i] -= h[i]; mm[j] -= h[j];
      H(i, j) = H(j, i) = (eval(pp) - eval(pm) - eval(mp) + eval(mm)) / (4.0 * h[i] * h[j]);
    }
  }
  return H;
}

FisherMatrix fisher_univariate(const UnivariateFamily& family, const VectorXd& params,
                               const QuadratureConfig& cfg) {
  return univariate_impl(family, params, cfg, Form::kHessian);
}

FisherMatrix fisher_univariate_score_form(const UnivariateFamily& family,
                                          const VectorXd& params,
                                          const QuadratureConfig& cfg) {
  return univariate_impl(family, params, cfg, Form::kScore);
}

FisherMatrix fisher_bivariate_wedge(const WedgeFamily& family, const VectorXd& params,
                                    const QuadratureConfig& cfg) {
  return wedge_impl(family, params, cfg, Form::kHessian);
}

FisherMatrix fisher_bivariate_wedge_score_form(const WedgeFamily& family,
                                               const VectorXd& params,
                                               const QuadratureConfig& cfg) {
  return wedge_impl(family, params, cfg, Form::kScore);
}

double wedge_expectation(const WedgeFamily& family, const VectorXd& params,
                         const std::function<double(double u, double w)>& g,
                         const QuadratureConfig& cfg) {
  cfg.validate();
  require_domain(family.in_domain(params), family.name);
  const WedgeKernel k = family.bind(params, cfg.tail_cutoff_mass);
  const double u_pow = k.support.u_power;
  const double w_pow = k.support.w_power;
  auto outer = [&](double u) -> VectorXd {
    auto inner = [&](double w) -> VectorXd {
      return weighted(k.log_density(u, w), 1,
                      [&] { return VectorXd::Constant(1, g(u, w)); });
    };
    return integrate_endpoint_powers(inner, 1, 0.0, k.support.w_hi, w_pow, 1.0, cfg).value;
  };
  return integrate_endpoint_powers(outer, 1, 0.0, k.support.u_hi, u_pow, 1.0, cfg).value[0];
}

}  // namespace gammageo
