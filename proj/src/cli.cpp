#include "qpdt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpdt/errors.hpp"
#include "qpdt/ops.hpp"
#include "qpdt/signal_io.hpp"
#include "qpdt/suites.hpp"
#include "qpdt/transform.hpp"

namespace qpdt::cli {
namespace {

constexpr double kDefaultWmin = -8.0;
constexpr double kDefaultWmax = 8.0;
constexpr int kDefaultWpoints = 257;

/// Kernel parameters, either explicit or through a preset.
struct ParamFlags {
  std::optional<double> a, b, c, d, e;
  double mu = 0.0;
  std::string preset;
  std::optional<double> theta, tau;
  std::vector<double> args;

  void attach(CLI::App& app) {
    app.add_option("--a", a, "chirp coefficient of v^2");
    app.add_option("--b", b, "scale, nonzero");
    app.add_option("--c", c, "chirp coefficient of w^2");
    app.add_option("--d", d, "linear phase in v");
    app.add_option("--e", e, "linear phase in w");
    app.add_option("--mu", mu, "multiplicity index, >= -1/2")->capture_default_str();
    app.add_option("--preset", preset,
                   "dunkl | fourier | qpft | linear-canonical | fractional-dunkl | fresnel");
    app.add_option("--theta", theta, "fractional-dunkl angle");
    app.add_option("--tau", tau, "fresnel distance");
    app.add_option("--args", args, "comma-separated preset arguments (qpft: a,b,c,d,e; linear-canonical: A,B,C,D)")
        ->delimiter(',');
  }

  [[nodiscard]] bool explicit_coefficients() const { return a || b || c || d || e; }

  [[nodiscard]] Preset resolve() const {
    if (preset.empty()) {
      if (theta || tau || !args.empty()) {
        throw DomainError("--theta, --tau and --args need --preset");
      }
      return {QpdtParams::make(a.value_or(0.0), b.value_or(1.0), c.value_or(0.0), d.value_or(0.0), e.value_or(0.0),
                               mu),
              Complex{1.0, 0.0}};
    }
    std::string key = preset;
    std::replace(key.begin(), key.end(), '_', '-');
    std::vector<double> values = args;
    if (key == "fractional-dunkl") {
      if (!theta || !args.empty()) {
        throw DomainError("preset fractional-dunkl takes --theta");
      }
      values = {*theta};
    } else if (key == "fresnel") {
      if (!tau || !args.empty()) {
        throw DomainError("preset fresnel takes --tau");
      }
      values = {*tau};
    } else if (theta || tau) {
      throw DomainError("--theta/--tau do not apply to preset " + preset);
    }
    if (key == "qpft" && values.empty()) {
      values = {a.value_or(0.0), b.value_or(1.0), c.value_or(0.0), d.value_or(0.0), e.value_or(0.0)};
    } else if (explicit_coefficients()) {
      throw DomainError("--a..--e conflict with --preset " + preset);
    }
    return preset_lookup(values);
  }

 private:
  [[nodiscard]] Preset preset_lookup(const std::vector<double>& values) const {
    return qpdt::preset(preset, values, MultiplicityIndex{mu});
  }
};

/// Input signal, output grid, quadrature and output file.
struct SignalFlags {
  std::string input;
  std::string fn;
  std::optional<double> wmin, wmax, L;
  std::optional<int> wpoints, panels, order;
  std::string output;
  std::string format;

  void attach(CLI::App& app, const std::string& grid_name) {
    auto* in = app.add_option("--input", input, "signal file (csv or json)");
    auto* f = app.add_option("--fn", fn, "test function NAME[:p1,p2]");
    in->excludes(f);
    app.add_option("--wmin", wmin, "first " + grid_name + " of the output grid (default -8)");
    app.add_option("--wmax", wmax, "last " + grid_name + " of the output grid (default 8)");
    app.add_option("--wpoints", wpoints, "output grid size (default 257)");
    app.add_option("--panels", panels, "minimum quadrature panels");
    app.add_option("--order", order, "Gauss-Legendre points per panel");
    app.add_option("--L", L, "truncation half-width");
    app.add_option("--output", output, "output file (default standard output)");
    app.add_option("--format", format, "csv | json (default from the output extension)")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  [[nodiscard]] IntegrationConfig config() const {
    IntegrationConfig cfg;
    cfg.L = L.value_or(cfg.L);
    cfg.panels = panels.value_or(cfg.panels);
    cfg.order = order.value_or(cfg.order);
    cfg.validate();
    return cfg;
  }

  [[nodiscard]] bool has_grid_flags() const { return wmin || wmax || wpoints; }

  [[nodiscard]] std::vector<double> grid(const std::optional<SampledSignal>& sampled) const {
    if (sampled && !has_grid_flags()) {
      return sampled->grid();
    }
    const int n = wpoints.value_or(kDefaultWpoints);
    if (n < 1) {
      throw DomainError("--wpoints must be positive");
    }
    return uniform_grid(wmin.value_or(kDefaultWmin), wmax.value_or(kDefaultWmax), n);
  }

  void write(const SampledSignal& s, std::ostream& out) const {
    if (output.empty()) {
      const auto fmt = format.empty() ? SignalFormat::kCsv : parse_format(format);
      out << (fmt == SignalFormat::kJson ? to_json_text(s) : to_csv(s));
      return;
    }
    write_signal(output, s, format.empty() ? format_for(output) : parse_format(format));
  }
};

/// A signal given by file (spline, zero outside the grid) or by name.
struct Source {
  std::optional<SampledSignal> sampled;
  ComplexFunction f;
  double chirp = 0.0;
};

Source load(const std::string& file, const std::string& name, MultiplicityIndex mu, const char* what) {
  if (file.empty() == name.empty()) {
    throw DomainError(std::string("exactly one of ") + what + " is required");
  }
  Source src;
  if (!file.empty()) {
    src.sampled = read_signal(file, mu);
    src.f = CubicSpline(*src.sampled, CubicSpline::OutOfRange::kZero);
  } else {
    const TestFunction t = TestFunction::parse(name);
    src.f = t;
    src.chirp = t.chirp_rate();
  }
  return src;
}

MultiplicityIndex require_translatable(const Preset& pr) {
  if (!pr.params.mu.above_critical()) {
    throw DomainError("translation and convolution require mu > -1/2");
  }
  return pr.params.mu;
}

int cmd_transform(const ParamFlags& pf, const SignalFlags& sf, bool inverse_flag, std::ostream& out) {
  const Preset pr = pf.resolve();
  const IntegrationConfig cfg = sf.config();
  const Source src = load(sf.input, sf.fn, pr.params.mu, "--input/--fn");
  const std::vector<double> grid = sf.grid(src.sampled);
  if (!inverse_flag) {
    sf.write(forward(pr, src.f, grid, cfg, src.chirp), out);
  } else if (src.sampled) {
    sf.write(inverse(pr, *src.sampled, grid, cfg), out);
  } else {
    const Preset inv{inverse_params(pr.params), Complex{1.0, 0.0} / pr.postfactor};
    sf.write(forward(inv, src.f, grid, cfg, src.chirp), out);
  }
  return kExitOk;
}

int cmd_translate(const ParamFlags& pf, const SignalFlags& sf, double at, std::ostream& out) {
  const Preset pr = pf.resolve();
  require_translatable(pr);
  const IntegrationConfig cfg = sf.config();
  const Source src = load(sf.input, sf.fn, pr.params.mu, "--input/--fn");
  const std::vector<double> grid = sf.grid(src.sampled);
  sf.write(translate(pr.params, src.f, at, grid, cfg), out);
  return kExitOk;
}

int cmd_convolve(const ParamFlags& pf, const SignalFlags& sf, const std::string& gfile, const std::string& gname,
                 std::ostream& out) {
  const Preset pr = pf.resolve();
  require_translatable(pr);
  const IntegrationConfig cfg = sf.config();
  const Source f = load(sf.input, sf.fn, pr.params.mu, "--input/--fn");
  const Source g = load(gfile, gname, pr.params.mu, "--g/--gfn");
  const std::vector<double> grid = sf.grid(f.sampled);
  sf.write(convolve(pr.params, f.f, g.f, grid, cfg), out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& report_path, std::ostream& out,
               std::ostream& err) {
  const VerificationReport report = run_suite(suite, seed);
  const nlohmann::json doc = report.to_json();
  if (report_path.empty()) {
    out << doc.dump(1) << "\n";
  } else {
    std::ofstream file(report_path, std::ios::binary);
    if (!file || !(file << doc.dump(1) << "\n")) {
      throw IoError("cannot write report '" + report_path + "'");
    }
  }
  std::size_t passed = 0;
  for (const auto& c : report.cases) {
    if (c.pass) {
      ++passed;
    } else {
      err << "FAIL " << c.name << ": measured " << c.measured << ", bound " << c.bound << ", tol " << c.tol << "\n";
    }
  }
  err << "suite " << report.suite << ": " << passed << "/" << report.cases.size() << " cases pass in "
      << report.runtime_seconds << " s\n";
  return report.pass() ? kExitOk : kExitSuiteFailed;
}

int cmd_preset(const ParamFlags& pf, std::ostream& out) {
  if (pf.preset.empty()) {
    throw DomainError("--name is required");
  }
  const Preset pr = pf.resolve();
  const nlohmann::json doc = {
      {"a", pr.params.a},
      {"b", pr.params.b},
      {"c", pr.params.c},
      {"d", pr.params.d},
      {"e", pr.params.e},
      {"mu", pr.params.mu.value()},
      {"postfactor", {{"re", pr.postfactor.real()}, {"im", pr.postfactor.imag()}}},
  };
  out << doc.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic-phase Dunkl transform toolkit", "qpdt"};
  app.require_subcommand(1);

  ParamFlags tparams;
  SignalFlags tsignal;
  bool inverse_flag = false;
  auto* transform = app.add_subcommand("transform", "apply the transform (or its inverse) to a signal");
  tparams.attach(*transform);
  tsignal.attach(*transform, "w");
  transform->add_flag("--inverse", inverse_flag, "apply the inverse transform");

  ParamFlags xparams;
  SignalFlags xsignal;
  double at = 0.0;
  auto* translate_cmd = app.add_subcommand("translate", "apply the generalized translation tau_w");
  xparams.attach(*translate_cmd);
  xsignal.attach(*translate_cmd, "v");
  translate_cmd->add_option("--at", at, "translation point w")->required();

  ParamFlags cparams;
  SignalFlags csignal;
  std::string gfile;
  std::string gname;
  auto* convolve_cmd = app.add_subcommand("convolve", "convolve two signals");
  cparams.attach(*convolve_cmd);
  csignal.attach(*convolve_cmd, "w");
  auto* g_opt = convolve_cmd->add_option("--g", gfile, "second signal file");
  convolve_cmd->add_option("--gfn", gname, "second test function NAME[:p1,p2]")->excludes(g_opt);

  std::string suite = "all";
  std::uint64_t seed = 42;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name")->capture_default_str();
  verify->add_option("--seed", seed, "case generator seed")->capture_default_str();
  verify->add_option("--report", report_path, "JSON report file (default standard output)");

  ParamFlags pparams;
  auto* preset_cmd = app.add_subcommand("preset", "print the parameters of a named special case");
  preset_cmd->add_option("--name", pparams.preset, "preset name")->required();
  preset_cmd->add_option("--mu", pparams.mu, "multiplicity index")->capture_default_str();
  preset_cmd->add_option("--theta", pparams.theta, "fractional-dunkl angle");
  preset_cmd->add_option("--tau", pparams.tau, "fresnel distance");
  preset_cmd->add_option("--args", pparams.args, "comma-separated preset arguments")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*transform) {
      return cmd_transform(tparams, tsignal, inverse_flag, out);
    }
    if (*translate_cmd) {
      return cmd_translate(xparams, xsignal, at, out);
    }
    if (*convolve_cmd) {
      return cmd_convolve(cparams, csignal, gfile, gname, out);
    }
    if (*verify) {
      return cmd_verify(suite, seed, report_path, out, err);
    }
    return cmd_preset(pparams, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace qpdt::cli
