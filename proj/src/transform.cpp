#include "qpdt/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "qpdt/errors.hpp"
#include "qpdt/parallel.hpp"

namespace qpdt {

namespace {

int panel_count(double frequency, double chirp, double linear, const IntegrationConfig& cfg) {
  const double need = std::ceil(cfg.L * (frequency + 2.0 * chirp * cfg.L + linear) / std::numbers::pi);
  if (!std::isfinite(need) || need * cfg.order > static_cast<double>(kMaxNodes)) {
    throw ResourceError("oscillation resolution needs more than " + std::to_string(kMaxNodes) + " nodes");
  }
  return std::max(cfg.panels, static_cast<int>(need));
}

void check_bessel_range(std::span<const double> grid, double inv_b, double L) {
  for (const double w : grid) {
    if (!std::isfinite(w)) {
      throw DomainError("output grid contains a non-finite point");
    }
    if (std::abs(w * inv_b) * L > kMaxBesselArgument) {
      throw DomainError("|w L / b| = " + std::to_string(std::abs(w * inv_b) * L) +
                        " exceeds the supported Bessel range");
    }
  }
}

// Integrand values f(v_k) w_k on one measure rule (density in w_k).
struct Prepared {
  QuadratureRule rule;
  std::vector<Complex> weighted;
};

Prepared prepare(int panels, const IntegrationConfig& cfg, double lo, double hi, const ComplexFunction& f,
                 MultiplicityIndex mu) {
  Prepared out{measure_rule(panels, cfg.order, lo, hi, mu), {}};
  out.weighted.resize(out.rule.size());
  for (std::size_t k = 0; k < out.rule.size(); ++k) {
    const double v = out.rule.nodes[k];
    const Complex fv = f(v);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
      throw EvaluationError("integrand is not finite at v = " + std::to_string(v));
    }
    out.weighted[k] = out.rule.weights[k] * fv;
  }
  return out;
}

using Kernel = std::function<Complex(double out, double v)>;

// sum_k weighted_k * kernel(x, v_k) for each x in grid, each x using the
// rule with panels[i] panels. Rules are built once per distinct count before
// the parallel sweep so the sweep itself shares read-only data.
std::vector<Complex> kernel_sums(std::span<const double> grid, const std::vector<int>& panels,
                                 const IntegrationConfig& cfg, double lo, double hi, const ComplexFunction& f,
                                 MultiplicityIndex mu, const Kernel& kernel) {
  std::map<int, Prepared> cache;
  for (const int p : panels) {
    if (!cache.contains(p)) {
      cache.emplace(p, prepare(p, cfg, lo, hi, f, mu));
    }
  }
  std::vector<Complex> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const Prepared& prep = cache.at(panels[i]);
    const double x = grid[i];
    NeumaierSum<Complex> sum;
    for (std::size_t k = 0; k < prep.rule.size(); ++k) {
      if (prep.weighted[k] != Complex{}) {
        sum.add(prep.weighted[k] * kernel(x, prep.rule.nodes[k]));
      }
    }
    out[i] = sum.value();
  });
  return out;
}

std::vector<Complex> forward_values(const QpdtParams& p, const ComplexFunction& f, std::span<const double> wgrid,
                                    const IntegrationConfig& cfg, double chirp) {
  p.validate();
  cfg.validate();
  check_bessel_range(wgrid, 1.0 / p.b, cfg.L);
  std::vector<int> panels(wgrid.size());
  for (std::size_t i = 0; i < wgrid.size(); ++i) {
    panels[i] = oscillation_panels(p, wgrid[i], chirp, cfg);
  }
  std::vector<Complex> out = kernel_sums(wgrid, panels, cfg, -cfg.L, cfg.L, f, p.mu,
                                         [&p](double w, double v) { return qpdt_kernel(p, w, v); });
  const Complex pref = c_mu(p.mu) / power_ib(p.b, p.mu);
  for (Complex& z : out) {
    z *= pref;
  }
  return out;
}

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

std::string normalize(std::string_view name) {
  std::string out(name);
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

void expect_args(std::string_view name, std::span<const double> args, std::size_t n) {
  if (args.size() != n) {
    throw DomainError("preset '" + std::string(name) + "' takes " + std::to_string(n) + " argument(s), got " +
                      std::to_string(args.size()));
  }
  for (const double x : args) {
    if (!std::isfinite(x)) {
      throw DomainError("preset arguments must be finite");
    }
  }
}

}  // namespace

int oscillation_panels(const QpdtParams& p, double w, double chirp, const IntegrationConfig& cfg) {
  return panel_count(std::abs(w / p.b), std::abs(p.a) + std::abs(chirp), std::abs(p.d), cfg);
}

SampledSignal forward(const QpdtParams& p, const ComplexFunction& f, std::span<const double> wgrid,
                      const IntegrationConfig& cfg, double chirp) {
  return {to_vector(wgrid), forward_values(p, f, wgrid, cfg, chirp), p.mu};
}

SampledSignal forward(const QpdtParams& p, const TestFunction& f, std::span<const double> wgrid,
                      const IntegrationConfig& cfg) {
  return forward(p, ComplexFunction(f), wgrid, cfg, f.chirp_rate());
}

SampledSignal dunkl_transform(MultiplicityIndex mu, const ComplexFunction& f, std::span<const double> wgrid,
                              const IntegrationConfig& cfg, double chirp) {
  cfg.validate();
  check_bessel_range(wgrid, 1.0, cfg.L);
  std::vector<int> panels(wgrid.size());
  for (std::size_t i = 0; i < wgrid.size(); ++i) {
    panels[i] = panel_count(std::abs(wgrid[i]), std::abs(chirp), 0.0, cfg);
  }
  std::vector<Complex> out = kernel_sums(wgrid, panels, cfg, -cfg.L, cfg.L, f, mu,
                                         [mu](double w, double v) { return dunkl_kernel(mu, -w, v); });
  const double cm = c_mu(mu);
  for (Complex& z : out) {
    z *= cm;
  }
  return {to_vector(wgrid), std::move(out), mu};
}

SampledSignal dunkl_transform(MultiplicityIndex mu, const TestFunction& f, std::span<const double> wgrid,
                              const IntegrationConfig& cfg) {
  return dunkl_transform(mu, ComplexFunction(f), wgrid, cfg, f.chirp_rate());
}

SampledSignal forward_via_dunkl(const QpdtParams& p, const ComplexFunction& f, std::span<const double> wgrid,
                                const IntegrationConfig& cfg, double chirp) {
  p.validate();
  cfg.validate();
  check_bessel_range(wgrid, 1.0 / p.b, cfg.L);
  const ComplexFunction h = [&p, &f](double v) { return std::polar(1.0, -(p.a * v * v + p.d * v)) * f(v); };
  std::vector<double> scaled(wgrid.size());
  std::vector<int> panels(wgrid.size());
  for (std::size_t i = 0; i < wgrid.size(); ++i) {
    scaled[i] = wgrid[i] / p.b;
    // Same resolution as forward: h carries the a, d phases itself.
    panels[i] = panel_count(std::abs(scaled[i]), std::abs(p.a) + std::abs(chirp), std::abs(p.d), cfg);
  }
  const MultiplicityIndex mu = p.mu;
  std::vector<Complex> dh = kernel_sums(scaled, panels, cfg, -cfg.L, cfg.L, h, mu,
                                        [mu](double x, double v) { return dunkl_kernel(mu, -x, v); });
  const Complex pref = c_mu(mu) / power_ib(p.b, mu);
  for (std::size_t i = 0; i < wgrid.size(); ++i) {
    const double w = wgrid[i];
    dh[i] = pref * std::polar(1.0, -(p.c * w * w + p.e * w)) * dh[i];
  }
  return {to_vector(wgrid), std::move(dh), mu};
}

SampledSignal forward_via_dunkl(const QpdtParams& p, const TestFunction& f, std::span<const double> wgrid,
                                const IntegrationConfig& cfg) {
  return forward_via_dunkl(p, ComplexFunction(f), wgrid, cfg, f.chirp_rate());
}

SampledSignal inverse(const QpdtParams& p, const SampledSignal& F, std::span<const double> vgrid,
                      const IntegrationConfig& cfg) {
  p.validate();
  cfg.validate();
  if (F.size() < 2 || F.grid().front() > -cfg.L || F.grid().back() < cfg.L) {
    throw InterpolationError("tabulated transform does not cover the integration domain [-L, L]");
  }
  const CubicSpline spline(F);
  return {to_vector(vgrid), forward_values(inverse_params(p), ComplexFunction(spline), vgrid, cfg, 0.0), p.mu};
}

SampledSignal inverse(const QpdtParams& p, const QuadratureRule& rule, std::span<const Complex> values,
                      std::span<const double> vgrid) {
  p.validate();
  if (values.size() != rule.size()) {
    throw DomainError("tabulated transform does not match the rule's node count");
  }
  const QpdtParams q = inverse_params(p);
  check_bessel_range(vgrid, 1.0 / q.b, std::max(std::abs(rule.lo), std::abs(rule.hi)));
  std::vector<Complex> weighted(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const Complex z = values[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw EvaluationError("tabulated transform is not finite at w = " + std::to_string(rule.nodes[k]));
    }
    weighted[k] = rule.weights[k] * density_factor(rule, k, p.mu) * z;
  }
  std::vector<Complex> out(vgrid.size());
  const Complex pref = c_mu(q.mu) / power_ib(q.b, q.mu);
  parallel_for(vgrid.size(), [&](std::size_t i) {
    NeumaierSum<Complex> sum;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      sum.add(weighted[k] * qpdt_kernel(q, vgrid[i], rule.nodes[k]));
    }
    out[i] = pref * sum.value();
  });
  return {to_vector(vgrid), std::move(out), p.mu};
}

std::vector<Complex> forward_on_rule(const QpdtParams& p, const ComplexFunction& f, const QuadratureRule& rule,
                                     const IntegrationConfig& cfg, double chirp) {
  return forward_values(p, f, rule.nodes, cfg, chirp);
}

Preset preset(std::string_view name, std::span<const double> args, MultiplicityIndex mu) {
  const std::string key = normalize(name);
  const MultiplicityIndex half{-0.5};
  if (key == "dunkl") {
    expect_args(name, args, 0);
    // forward carries 1/i^{mu+1} at b = 1; the Dunkl transform does not.
    return {QpdtParams{0.0, 1.0, 0.0, 0.0, 0.0, mu}, power_ib(1.0, mu)};
  }
  if (key == "fourier") {
    expect_args(name, args, 0);
    return {QpdtParams{0.0, 1.0, 0.0, 0.0, 0.0, half}, power_ib(1.0, half)};
  }
  if (key == "qpft") {
    expect_args(name, args, 5);
    if (args[1] == 0.0) {
      throw DomainError("qpft preset requires b != 0");
    }
    const double b = 1.0 / args[1];
    return {QpdtParams{args[0], b, args[2], args[3], args[4], half}, power_ib(b, half)};
  }
  if (key == "linear_canonical") {
    expect_args(name, args, 4);
    const double b = args[1];
    if (b == 0.0) {
      throw DomainError("linear canonical preset requires B != 0");
    }
    return {QpdtParams{-args[0] / (2.0 * b), b, -args[3] / (2.0 * b), 0.0, 0.0, mu}, {1.0, 0.0}};
  }
  if (key == "fractional_dunkl") {
    expect_args(name, args, 1);
    const double theta = args[0];
    const double turns = theta / std::numbers::pi;
    if (std::abs(turns - std::round(turns)) < 1e-12) {
      throw DomainError("fractional Dunkl preset excludes theta in pi Z");
    }
    const double s = std::sin(theta);
    const double a = -0.5 * std::cos(theta) / s;
    // Reduce theta to (-pi, pi] as theta - 2 n pi.
    const double reduced = theta - 2.0 * std::numbers::pi * std::round(theta / (2.0 * std::numbers::pi));
    const double sign = s > 0.0 ? 1.0 : -1.0;
    const double phase = (mu.value() + 1.0) * (sign * std::numbers::pi - reduced);
    return {QpdtParams{a, s, a, 0.0, 0.0, mu}, std::polar(1.0, phase)};
  }
  if (key == "fresnel") {
    expect_args(name, args, 1);
    const double tau = args[0];
    if (tau == 0.0) {
      throw DomainError("Fresnel preset requires tau != 0");
    }
    return {QpdtParams{-0.5 / tau, tau, -0.5 / tau, 0.0, 0.0, mu}, {1.0, 0.0}};
  }
  throw DomainError("unknown preset '" + std::string(name) + "'");
}

double scaling_check(const QpdtParams& p, double k, const ComplexFunction& f, std::span<const double> wgrid,
                     const IntegrationConfig& cfg, double chirp) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("scaling factor must be positive");
  }
  std::vector<double> kw(wgrid.size());
  std::transform(wgrid.begin(), wgrid.end(), kw.begin(), [k](double w) { return k * w; });
  const std::vector<Complex> lhs = forward_values(p, f, kw, cfg, chirp);

  const QpdtParams q{p.a / (k * k), p.b, p.c * k * k, p.d / k, p.e * k, p.mu};
  IntegrationConfig wide = cfg;
  wide.L = cfg.L * k;
  const ComplexFunction fk = [&f, k](double v) { return f(v / k); };
  const std::vector<Complex> rhs = forward_values(q, fk, wgrid, wide, chirp / (k * k));
  const double scale = std::pow(k, -(2.0 * p.mu.value() + 2.0));
  double worst = 0.0;
  for (std::size_t i = 0; i < wgrid.size(); ++i) {
    worst = std::max(worst, std::abs(lhs[i] - scale * rhs[i]));
  }
  return worst;
}

double scaling_check(const QpdtParams& p, double k, const TestFunction& f, std::span<const double> wgrid,
                     const IntegrationConfig& cfg) {
  return scaling_check(p, k, ComplexFunction(f), wgrid, cfg, f.chirp_rate());
}

SampledSignal forward(const Preset& preset, const ComplexFunction& f, std::span<const double> wgrid,
                      const IntegrationConfig& cfg, double chirp) {
  const SampledSignal F = forward(preset.params, f, wgrid, cfg, chirp);
  std::vector<Complex> values = F.values();
  for (Complex& z : values) {
    z *= preset.postfactor;
  }
  return {F.grid(), std::move(values), F.mu()};
}

SampledSignal inverse(const Preset& preset, const SampledSignal& G, std::span<const double> vgrid,
                      const IntegrationConfig& cfg) {
  std::vector<Complex> values = G.values();
  for (Complex& z : values) {
    z /= preset.postfactor;
  }
  return inverse(preset.params, SampledSignal(G.grid(), std::move(values), G.mu()), vgrid, cfg);
}

}  // namespace qpdt
