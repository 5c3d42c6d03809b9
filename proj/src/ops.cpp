#include "qpdt/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "qpdt/errors.hpp"
#include "qpdt/parallel.hpp"

namespace qpdt {

namespace {

void require_above_critical(MultiplicityIndex mu) {
  if (!mu.above_critical()) {
    throw DomainError("translation and convolution require mu > -1/2");
  }
}

// Gamma(mu+1) / (sqrt(pi) Gamma(mu+1/2)): the mass constant after the
// k^2 -> t substitution.
double jacobi_constant(double mu) {
  return std::exp(std::lgamma(mu + 1.0) - 0.5 * std::log(std::numbers::pi) - std::lgamma(mu + 0.5));
}

// 1/2 (1 - s_{w,v,k} + s_{k,w,v} + s_{k,v,w}), signed arguments, all non-zero.
// (w, v) are put in a fixed order first so the result is exactly symmetric.
double sigma_factor(double w, double v, double k) {
  if (w > v) {
    std::swap(w, v);
  }
  return 0.5 * (1.0 - sigma(w, v, k) + sigma(k, w, v) + sigma(k, v, w));
}

double kappa_at(double w, double v, double t) {
  const double s = w * w + v * v + 2.0 * std::abs(w * v) * t;
  return std::sqrt(std::max(s, 0.0));
}

// Translation with a prebuilt Gauss-Jacobi rule for alpha = beta = mu - 1/2.
Complex translate_with(const QpdtParams& p, const ComplexFunction& f, double w, double v,
                       const QuadratureRule& jacobi) {
  if (std::abs(w) < kIdentityThreshold) {
    return f(v);
  }
  if (v == 0.0) {
    return f(w);
  }
  const double mu = p.mu.value();
  const double c = jacobi_constant(mu);
  const double outer = p.a * (w * w + v * v) + p.d * (w + v);
  NeumaierSum<Complex> sum;
  for (const double sign : {-1.0, 1.0}) {
    for (std::size_t j = 0; j < jacobi.size(); ++j) {
      const double k = sign * kappa_at(w, v, jacobi.nodes[j]);
      if (k == 0.0) {
        continue;
      }
      const Complex fk = f(k);
      if (!std::isfinite(fk.real()) || !std::isfinite(fk.imag())) {
        throw EvaluationError("translation integrand is not finite at kappa = " + std::to_string(k));
      }
      const double quad = p.a * k * k + p.d * k;
      const Complex phase = std::polar(1.0, -(outer + quad)) * std::polar(1.0, quad);
      sum.add(jacobi.weights[j] * c * sigma_factor(w, v, k) * fk * phase);
    }
  }
  return sum.value();
}

}  // namespace

double sigma(double w, double v, double kappa) {
  if (w == 0.0 || v == 0.0) {
    throw DomainError("sigma requires w != 0 and v != 0");
  }
  return (w * w + v * v - kappa * kappa) / (2.0 * w * v);
}

double triangle_kernel(MultiplicityIndex mu, double w, double v, double kappa) {
  require_above_critical(mu);
  if (!(w > 0.0) || !(v > 0.0) || !(kappa > 0.0)) {
    throw DomainError("triangle kernel requires positive arguments");
  }
  if (!(std::abs(w - v) < kappa && kappa < w + v)) {
    return 0.0;
  }
  const double m = mu.value();
  const double log_c = (1.0 - 2.0 * m) * std::numbers::ln2 + std::lgamma(m + 1.0) -
                       0.5 * std::log(std::numbers::pi) - std::lgamma(m + 0.5);
  const double spread = ((w + v) * (w + v) - kappa * kappa) * (kappa * kappa - (w - v) * (w - v));
  return std::exp(log_c) * std::pow(spread, m - 0.5) / std::pow(w * v * kappa, 2.0 * m);
}

double dunkl_translation_kernel(MultiplicityIndex mu, double w, double v, double kappa) {
  require_above_critical(mu);
  if (w == 0.0 || v == 0.0) {
    throw DomainError("translation kernel requires w != 0 and v != 0");
  }
  const double aw = std::abs(w);
  const double av = std::abs(v);
  const double ak = std::abs(kappa);
  if (!(std::abs(aw - av) < ak && ak < aw + av)) {
    return 0.0;
  }
  return sigma_factor(w, v, kappa) * triangle_kernel(mu, aw, av, ak);
}

double triangle_kernel_mass(MultiplicityIndex mu, double w, double v, int order) {
  require_above_critical(mu);
  const double m = mu.value();
  const QuadratureRule rule = gauss_jacobi(order, m - 0.5, m - 0.5);
  NeumaierSum<double> sum;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double t = rule.nodes[j];
    const double k = kappa_at(w, v, t);
    // dk = w v dt / k; divide out the Jacobi weight.
    const double jac = w * v / k / std::pow(1.0 - t * t, m - 0.5);
    sum.add(rule.weights[j] * triangle_kernel(mu, w, v, k) * std::pow(k, 2.0 * m + 1.0) * jac);
  }
  return sum.value();
}

double translation_kernel_variation(MultiplicityIndex mu, double w, double v, int order) {
  require_above_critical(mu);
  const double m = mu.value();
  const QuadratureRule rule = gauss_jacobi(order, m - 0.5, m - 0.5);
  const double c = jacobi_constant(m);
  NeumaierSum<double> sum;
  for (const double sign : {-1.0, 1.0}) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double k = sign * kappa_at(w, v, rule.nodes[j]);
      sum.add(rule.weights[j] * c * std::abs(sigma_factor(w, v, k)));
    }
  }
  return sum.value();
}

Complex translate_at(const QpdtParams& p, const ComplexFunction& f, double w, double v,
                     const IntegrationConfig& cfg) {
  p.validate();
  require_above_critical(p.mu);
  const double m = p.mu.value();
  return translate_with(p, f, w, v, gauss_jacobi(cfg.jacobi_order, m - 0.5, m - 0.5));
}

SampledSignal translate(const QpdtParams& p, const ComplexFunction& f, double w, std::span<const double> vgrid,
                        const IntegrationConfig& cfg) {
  p.validate();
  cfg.validate();
  require_above_critical(p.mu);
  if (!std::isfinite(w)) {
    throw DomainError("translation offset must be finite");
  }
  const double m = p.mu.value();
  const QuadratureRule jacobi = gauss_jacobi(cfg.jacobi_order, m - 0.5, m - 0.5);
  std::vector<Complex> out(vgrid.size());
  parallel_for(vgrid.size(), [&](std::size_t i) { out[i] = translate_with(p, f, w, vgrid[i], jacobi); });
  return {{vgrid.begin(), vgrid.end()}, std::move(out), p.mu};
}

SampledSignal convolve(const QpdtParams& p, const ComplexFunction& f, const ComplexFunction& g,
                       std::span<const double> wgrid, const IntegrationConfig& cfg) {
  p.validate();
  cfg.validate();
  require_above_critical(p.mu);
  const double m = p.mu.value();
  const QuadratureRule jacobi = gauss_jacobi(cfg.jacobi_order, m - 0.5, m - 0.5);
  const QuadratureRule rule = measure_rule(cfg, p.mu);
  std::vector<Complex> weighted(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double v = rule.nodes[k];
    const Complex gv = g(v);
    if (!std::isfinite(gv.real()) || !std::isfinite(gv.imag())) {
      throw EvaluationError("convolution integrand is not finite at v = " + std::to_string(v));
    }
    weighted[k] = rule.weights[k] * gv * std::polar(1.0, p.a * v * v + p.d * v);
  }
  std::vector<Complex> out(wgrid.size());
  parallel_for(wgrid.size(), [&](std::size_t i) {
    NeumaierSum<Complex> sum;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      if (weighted[k] != Complex{}) {
        sum.add(weighted[k] * translate_with(p, f, wgrid[i], -rule.nodes[k], jacobi));
      }
    }
    out[i] = sum.value();
  });
  return {{wgrid.begin(), wgrid.end()}, std::move(out), p.mu};
}

double lp_norm(const QuadratureRule& rule, std::span<const Complex> values, double p, MultiplicityIndex mu) {
  if (!(p >= 1.0)) {
    throw DomainError("L^p norm requires p >= 1");
  }
  if (values.size() != rule.size()) {
    throw DomainError("tabulated values do not match the rule's node count");
  }
  if (std::isinf(p)) {
    double best = 0.0;
    for (const Complex& z : values) {
      best = std::max(best, std::abs(z));
    }
    return best;
  }
  NeumaierSum<double> sum;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double m = std::abs(values[k]);
    if (!std::isfinite(m)) {
      throw EvaluationError("norm integrand is not finite at v = " + std::to_string(rule.nodes[k]));
    }
    sum.add(rule.weights[k] * density_factor(rule, k, mu) * std::pow(m, p));
  }
  return std::pow(std::max(sum.value(), 0.0), 1.0 / p);
}

double lp_norm(const ComplexFunction& f, double p, MultiplicityIndex mu, const IntegrationConfig& cfg) {
  cfg.validate();
  const QuadratureRule rule = measure_rule(cfg, mu);
  std::vector<Complex> values(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    values[k] = f(rule.nodes[k]);
  }
  return lp_norm(rule, values, p, mu);
}

double lp_norm(const SampledSignal& s, double p, const IntegrationConfig& cfg) {
  if (std::isinf(p) && p > 0.0) {
    double best = 0.0;
    for (const Complex& z : s.values()) {
      best = std::max(best, std::abs(z));
    }
    return best;
  }
  if (s.size() < 2) {
    throw DomainError("norm of a sampled signal needs at least two samples");
  }
  const CubicSpline spline(s, CubicSpline::OutOfRange::kZero);
  return lp_norm(ComplexFunction(spline), p, s.mu(), cfg);
}

}  // namespace qpdt
