#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpdt/kernels.hpp"
#include "qpdt/quadrature.hpp"
#include "qpdt/signal.hpp"

namespace qpdt {

/// One checked claim: what was measured against which bound.
struct VerificationCase {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  double measured = 0.0;
  double bound = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerificationCase> cases;
  double runtime_seconds = 0.0;

  /// True iff every case passes (and there is at least one).
  [[nodiscard]] bool pass() const;

  /// {suite, seed, cases:[{name, inputs, measured, bound, tol, pass}],
  ///  aggregate: "pass"|"fail", runtime_seconds}
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Empty string if `report` has the documented shape, else a description of
/// the first violation.
std::string report_schema_violation(const nlohmann::json& report);

/// A transform tabulated on a w-side composite rule over [-L_w, L_w].
struct SpectralSample {
  QuadratureRule rule;
  std::vector<Complex> values;
  double L_w = 0.0;
};

/// Panel width and order of the w-side rules.
inline constexpr double kSpectralPanelWidth = 0.5;
inline constexpr int kSpectralOrder = 12;

/// Tabulates forward(f) on a w-side rule, starting at L_w = 16 and doubling
/// up to 64 until the integrand |F|^2 |w|^{2mu+1+moment} over the outer 10% of
/// the domain is at most 1e-2 * cfg.tol times its total mass.
/// Throws TailBoundError if L_w = 64 is not enough.
SpectralSample spectral_sample(const QpdtParams& p, const ComplexFunction& f, const IntegrationConfig& cfg,
                               double chirp = 0.0, int moment = 0);

struct ParsevalResult {
  Complex signal_side;     ///< <f, g>_mu
  Complex transform_side;  ///< <F f, F g>_mu
  double residual = 0.0;
};

/// |<f,g>_mu - <Ff,Fg>_mu|, inner products conjugate-linear in g.
ParsevalResult parseval_residual(const QpdtParams& p, const TestFunction& f, const TestFunction& g,
                                 const IntegrationConfig& cfg);

/// | ||Ff||^2 - ||f||^2 | / ||f||^2, defined as 0 for f = 0.
double plancherel_residual(const QpdtParams& p, const TestFunction& f, const IntegrationConfig& cfg);

struct HeisenbergResult {
  double lhs = 0.0;    ///< (int v^2 |f|^2 dm)(int w^2 |Ff|^2 dm)
  double bound = 0.0;  ///< |b|^2 (mu + 1/2)^2 ||f||_2^4
  double ratio = 0.0;  ///< lhs / bound
};

HeisenbergResult heisenberg_ratio(const QpdtParams& p, const ComplexFunction& f, const IntegrationConfig& cfg,
                                  double chirp = 0.0);
HeisenbergResult heisenberg_ratio(const QpdtParams& p, const TestFunction& f, const IntegrationConfig& cfg);

/// Dunkl operator by central difference:
///   (f(v+h) - f(v-h)) / 2h + (2mu+1)/(2v) (f(v) - f(-v)).
/// Throws DomainError for v == 0 and StepSizeError unless 1e-6 < h < 1e-2.
Complex dunkl_operator_apply(MultiplicityIndex mu, const ComplexFunction& f, double v, double h);

/// ||f * g||_{mu,r} <= 4 ||f||_{mu,p} ||g||_{mu,q}, 1/r = 1/p + 1/q - 1.
/// The convolution is tabulated on the nodes of measure_rule(cfg); r = inf
/// takes the max over those nodes. measured = LHS, bound = 4 * RHS.
VerificationCase young_check(const QpdtParams& params, const ComplexFunction& f, const ComplexFunction& g,
                             double p, double q, const IntegrationConfig& cfg);

}  // namespace qpdt
