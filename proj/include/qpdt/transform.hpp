#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qpdt/kernels.hpp"
#include "qpdt/quadrature.hpp"
#include "qpdt/signal.hpp"

namespace qpdt {

/// Panel count used for one output point w: the configured minimum, raised so
/// that each panel of [-L, L] spans at most one period of the fastest phase
/// ceil(L (|w/b| + 2 (|a| + chirp) L + |d|) / pi), where chirp is the
/// magnitude of the signal's own quadratic phase.
int oscillation_panels(const QpdtParams& p, double w, double chirp, const IntegrationConfig& cfg);

/// Forward QPDT
///   F(w) = c_mu / (i b)^{mu+1} int Psi(w, v) f(v) |v|^{2mu+1} dv
/// over [-L, L], one auto-raised composite rule per output point.
/// `chirp` is a hint for the quadratic phase carried by f itself.
SampledSignal forward(const QpdtParams& p, const ComplexFunction& f, std::span<const double> wgrid,
                      const IntegrationConfig& cfg, double chirp = 0.0);
SampledSignal forward(const QpdtParams& p, const TestFunction& f, std::span<const double> wgrid,
                      const IntegrationConfig& cfg);

/// Classical Dunkl transform c_mu int E_mu(-i w, v) f(v) |v|^{2mu+1} dv.
SampledSignal dunkl_transform(MultiplicityIndex mu, const ComplexFunction& f, std::span<const double> wgrid,
                              const IntegrationConfig& cfg, double chirp = 0.0);
SampledSignal dunkl_transform(MultiplicityIndex mu, const TestFunction& f, std::span<const double> wgrid,
                              const IntegrationConfig& cfg);

/// The same transform computed by pre-chirping h(v) = exp(-i(a v^2 + d v)) f(v),
/// taking the Dunkl transform of h at w/b and post-multiplying by
/// exp(-i(c w^2 + e w)) / (i b)^{mu+1}.
SampledSignal forward_via_dunkl(const QpdtParams& p, const ComplexFunction& f, std::span<const double> wgrid,
                                const IntegrationConfig& cfg, double chirp = 0.0);
SampledSignal forward_via_dunkl(const QpdtParams& p, const TestFunction& f, std::span<const double> wgrid,
                                const IntegrationConfig& cfg);

/// Inverse transform of tabulated data. F is interpolated by a natural cubic
/// spline and integrated over [-L, L] against Psi^{-c,-b,-a}_{-e,-d}(v, w);
/// throws InterpolationError unless F's grid covers [-L, L].
SampledSignal inverse(const QpdtParams& p, const SampledSignal& F, std::span<const double> vgrid,
                      const IntegrationConfig& cfg);

/// Inverse transform of values tabulated on the nodes of `rule` (no
/// interpolation; the rule is used as given).
SampledSignal inverse(const QpdtParams& p, const QuadratureRule& rule, std::span<const Complex> values,
                      std::span<const double> vgrid);

/// Forward transform tabulated on the nodes of `rule`; pairs with the
/// rule-based inverse.
std::vector<Complex> forward_on_rule(const QpdtParams& p, const ComplexFunction& f, const QuadratureRule& rule,
                                     const IntegrationConfig& cfg, double chirp = 0.0);

/// A named special case: forward(params) * postfactor is the classical
/// transform.
struct Preset {
  QpdtParams params;
  Complex postfactor{1.0, 0.0};
};

/// Names (hyphens and underscores interchangeable) and arguments:
///   dunkl                       -
///   fourier                     -            (mu forced to -1/2)
///   qpft                        a, b, c, d, e (mu forced to -1/2, b -> 1/b)
///   linear_canonical            A, B, C, D   (C does not enter the kernel)
///   fractional_dunkl            theta, theta not in pi Z
///   fresnel                     tau != 0
/// Throws DomainError for unknown names, wrong arity or excluded values.
Preset preset(std::string_view name, std::span<const double> args, MultiplicityIndex mu);

/// The classical transform: forward(preset.params, ...) times the postfactor.
SampledSignal forward(const Preset& preset, const ComplexFunction& f, std::span<const double> wgrid,
                      const IntegrationConfig& cfg, double chirp = 0.0);

/// Inverse of the classical transform: G / postfactor is inverted with
/// preset.params.
SampledSignal inverse(const Preset& preset, const SampledSignal& G, std::span<const double> vgrid,
                      const IntegrationConfig& cfg);

/// Max over wgrid of |F_p[f](k w) - k^{-(2mu+2)} F_{p'}[f_k](w)| with
/// p' = (a/k^2, b, c k^2, d/k, e k), f_k(v) = f(v/k). The right side is
/// integrated over [-kL, kL].
double scaling_check(const QpdtParams& p, double k, const ComplexFunction& f, std::span<const double> wgrid,
                     const IntegrationConfig& cfg, double chirp = 0.0);
double scaling_check(const QpdtParams& p, double k, const TestFunction& f, std::span<const double> wgrid,
                     const IntegrationConfig& cfg);

}  // namespace qpdt
