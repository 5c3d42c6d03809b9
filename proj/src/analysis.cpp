#include "qpdt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qpdt/errors.hpp"
#include "qpdt/ops.hpp"
#include "qpdt/transform.hpp"

namespace qpdt {

bool VerificationReport::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
}

namespace {

// JSON has no infinities; encode them as strings.
nlohmann::json number(double x) {
  if (std::isfinite(x)) {
    return x;
  }
  if (std::isnan(x)) {
    return "nan";
  }
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    out["cases"].push_back({{"name", c.name},
                            {"inputs", c.inputs},
                            {"measured", number(c.measured)},
                            {"bound", number(c.bound)},
                            {"tol", number(c.tol)},
                            {"pass", c.pass}});
  }
  out["aggregate"] = pass() ? "pass" : "fail";
  out["runtime_seconds"] = runtime_seconds;
  return out;
}

std::string report_schema_violation(const nlohmann::json& r) {
  if (!r.is_object()) {
    return "report is not an object";
  }
  const auto need = [&r](const char* key) { return r.contains(key); };
  for (const char* key : {"suite", "seed", "cases", "aggregate", "runtime_seconds"}) {
    if (!need(key)) {
      return std::string("missing key '") + key + "'";
    }
  }
  if (!r["suite"].is_string()) return "suite is not a string";
  if (!r["seed"].is_number_integer()) return "seed is not an integer";
  if (!r["runtime_seconds"].is_number() || r["runtime_seconds"].get<double>() < 0.0) {
    return "runtime_seconds is not a non-negative number";
  }
  if (!r["aggregate"].is_string() || (r["aggregate"] != "pass" && r["aggregate"] != "fail")) {
    return "aggregate is not \"pass\" or \"fail\"";
  }
  if (!r["cases"].is_array() || r["cases"].empty()) {
    return "cases is not a non-empty array";
  }
  bool all = true;
  for (std::size_t i = 0; i < r["cases"].size(); ++i) {
    const auto& c = r["cases"][i];
    const std::string where = "cases[" + std::to_string(i) + "]";
    if (!c.is_object()) return where + " is not an object";
    for (const char* key : {"name", "inputs", "measured", "bound", "tol", "pass"}) {
      if (!c.contains(key)) {
        return where + " missing key '" + key + "'";
      }
    }
    if (!c["name"].is_string()) return where + ".name is not a string";
    if (!c["inputs"].is_object()) return where + ".inputs is not an object";
    for (const char* key : {"measured", "bound", "tol"}) {
      if (!c[key].is_number() && !c[key].is_string()) {
        return where + "." + key + " is not numeric";
      }
    }
    if (!c["pass"].is_boolean()) return where + ".pass is not a boolean";
    all = all && c["pass"].get<bool>();
  }
  if ((r["aggregate"] == "pass") != all) {
    return "aggregate disagrees with the case flags";
  }
  return {};
}

SpectralSample spectral_sample(const QpdtParams& p, const ComplexFunction& f, const IntegrationConfig& cfg,
                               double chirp, int moment) {
  const double exponent = 2.0 * p.mu.value() + 1.0 + moment;
  for (double lw = 16.0; lw <= 64.0; lw *= 2.0) {
    SpectralSample s;
    s.L_w = lw;
    s.rule = measure_rule(static_cast<int>(std::ceil(2.0 * lw / kSpectralPanelWidth)), kSpectralOrder, -lw, lw,
                          p.mu);
    s.values = forward_on_rule(p, f, s.rule, cfg, chirp);
    NeumaierSum<double> mass;
    double tail = 0.0;
    for (std::size_t k = 0; k < s.rule.size(); ++k) {
      const double w = s.rule.nodes[k];
      const double integrand = std::norm(s.values[k]) * std::pow(std::abs(w), exponent);
      mass.add(s.rule.weights[k] * std::norm(s.values[k]) * std::pow(std::abs(w), moment));
      if (std::abs(w) >= 0.9 * lw) {
        tail = std::max(tail, integrand);
      }
    }
    if (tail <= 1e-2 * cfg.tol * mass.value()) {
      return s;
    }
  }
  throw TailBoundError("transform-side integrand has not decayed at |w| = 64");
}

namespace {

Complex inner(const QuadratureRule& rule, std::span<const Complex> f, std::span<const Complex> g,
              MultiplicityIndex mu) {
  std::vector<Complex> prod(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    prod[k] = f[k] * std::conj(g[k]);
  }
  return integrate_weighted(prod, mu, rule);
}

std::vector<Complex> tabulate(const ComplexFunction& f, const QuadratureRule& rule) {
  std::vector<Complex> out(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    out[k] = f(rule.nodes[k]);
  }
  return out;
}

bool is_zero(std::span<const Complex> values) {
  return std::all_of(values.begin(), values.end(), [](const Complex& z) { return z == Complex{}; });
}

}  // namespace

ParsevalResult parseval_residual(const QpdtParams& p, const TestFunction& f, const TestFunction& g,
                                 const IntegrationConfig& cfg) {
  p.validate();
  cfg.validate();
  const QuadratureRule rule = measure_rule(cfg, p.mu);
  const std::vector<Complex> fv = tabulate(f, rule);
  const std::vector<Complex> gv = tabulate(g, rule);
  ParsevalResult out;
  out.signal_side = inner(rule, fv, gv, p.mu);
  if (is_zero(fv) || is_zero(gv)) {
    out.transform_side = {};
    out.residual = std::abs(out.signal_side);
    return out;
  }
  // One w-rule for both transforms: the wider of the two tail-checked rules.
  const SpectralSample sf = spectral_sample(p, f, cfg, f.chirp_rate());
  const SpectralSample sg = spectral_sample(p, g, cfg, g.chirp_rate());
  if (sf.L_w == sg.L_w) {
    out.transform_side = inner(sf.rule, sf.values, sg.values, p.mu);
  } else if (sf.L_w > sg.L_w) {
    const std::vector<Complex> gw = forward_on_rule(p, g, sf.rule, cfg, g.chirp_rate());
    out.transform_side = inner(sf.rule, sf.values, gw, p.mu);
  } else {
    const std::vector<Complex> fw = forward_on_rule(p, f, sg.rule, cfg, f.chirp_rate());
    out.transform_side = inner(sg.rule, fw, sg.values, p.mu);
  }
  out.residual = std::abs(out.signal_side - out.transform_side);
  return out;
}

double plancherel_residual(const QpdtParams& p, const TestFunction& f, const IntegrationConfig& cfg) {
  p.validate();
  cfg.validate();
  const QuadratureRule rule = measure_rule(cfg, p.mu);
  const std::vector<Complex> fv = tabulate(f, rule);
  if (is_zero(fv)) {
    return 0.0;
  }
  const double signal = inner(rule, fv, fv, p.mu).real();
  const SpectralSample s = spectral_sample(p, f, cfg, f.chirp_rate());
  const double spectral = inner(s.rule, s.values, s.values, p.mu).real();
  return std::abs(spectral - signal) / signal;
}

HeisenbergResult heisenberg_ratio(const QpdtParams& p, const ComplexFunction& f, const IntegrationConfig& cfg,
                                  double chirp) {
  p.validate();
  cfg.validate();
  const QuadratureRule rule = measure_rule(cfg, p.mu);
  const std::vector<Complex> fv = tabulate(f, rule);
  NeumaierSum<double> mass;
  NeumaierSum<double> v_moment;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double v = rule.nodes[k];
    const double dm = rule.weights[k] * std::norm(fv[k]);
    mass.add(dm);
    v_moment.add(v * v * dm);
  }
  const SpectralSample s = spectral_sample(p, f, cfg, chirp, 2);
  NeumaierSum<double> w_moment;
  for (std::size_t k = 0; k < s.rule.size(); ++k) {
    const double w = s.rule.nodes[k];
    w_moment.add(s.rule.weights[k] * w * w * std::norm(s.values[k]));
  }
  HeisenbergResult out;
  out.lhs = v_moment.value() * w_moment.value();
  const double half = p.mu.value() + 0.5;
  out.bound = p.b * p.b * half * half * mass.value() * mass.value();
  out.ratio = out.bound > 0.0 ? out.lhs / out.bound : std::numeric_limits<double>::infinity();
  return out;
}

HeisenbergResult heisenberg_ratio(const QpdtParams& p, const TestFunction& f, const IntegrationConfig& cfg) {
  return heisenberg_ratio(p, ComplexFunction(f), cfg, f.chirp_rate());
}

Complex dunkl_operator_apply(MultiplicityIndex mu, const ComplexFunction& f, double v, double h) {
  if (v == 0.0 || !std::isfinite(v)) {
    throw DomainError("Dunkl operator needs a finite evaluation point v != 0");
  }
  if (!(h > 1e-6 && h < 1e-2)) {
    throw StepSizeError("finite-difference step must lie in (1e-6, 1e-2)");
  }
  const Complex derivative = (f(v + h) - f(v - h)) / (2.0 * h);
  return derivative + (2.0 * mu.value() + 1.0) / (2.0 * v) * (f(v) - f(-v));
}

VerificationCase young_check(const QpdtParams& params, const ComplexFunction& f, const ComplexFunction& g,
                             double p, double q, const IntegrationConfig& cfg) {
  if (!(p >= 1.0) || !(q >= 1.0)) {
    throw DomainError("Young's inequality needs p, q >= 1");
  }
  const double inv_r = 1.0 / p + 1.0 / q - 1.0;
  if (inv_r < -1e-15) {
    throw DomainError("Young's inequality needs 1/p + 1/q >= 1");
  }
  const double r = inv_r <= 1e-15 ? std::numeric_limits<double>::infinity() : 1.0 / inv_r;
  const QuadratureRule rule = measure_rule(cfg, params.mu);
  const SampledSignal conv = convolve(params, f, g, rule.nodes, cfg);
  VerificationCase out;
  out.name = "young";
  out.measured = lp_norm(rule, conv.values(), r, params.mu);
  out.bound = 4.0 * lp_norm(f, p, params.mu, cfg) * lp_norm(g, q, params.mu, cfg);
  out.tol = 1e-6;
  out.pass = out.measured <= out.bound + out.tol;
  out.inputs = {{"p", p}, {"q", q}, {"r", number(r)}};
  return out;
}

}  // namespace qpdt
