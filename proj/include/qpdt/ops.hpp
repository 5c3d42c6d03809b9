#pragma once

#include <span>
#include <vector>

#include "qpdt/kernels.hpp"
#include "qpdt/quadrature.hpp"
#include "qpdt/signal.hpp"

namespace qpdt {

/// Offsets with |w| below this are treated as w = 0 (identity translation).
inline constexpr double kIdentityThreshold = 1e-12;

/// sigma_{w,v,kappa} = (w^2 + v^2 - kappa^2) / (2 w v). Throws DomainError
/// for w == 0 or v == 0.
double sigma(double w, double v, double kappa);

/// Triangle kernel
///   K_mu(w,v,k) = C [((w+v)^2 - k^2)(k^2 - (w-v)^2)]^{mu-1/2} / (w v k)^{2mu}
/// for |w-v| < k < w+v and 0 elsewhere, with
/// C = 2^{1-2mu} Gamma(mu+1) / (sqrt(pi) Gamma(mu+1/2)).
/// Requires w, v, k > 0 and mu > -1/2 (DomainError otherwise).
double triangle_kernel(MultiplicityIndex mu, double w, double v, double kappa);

/// W_mu(w,v,k) = 1/2 (1 - s_{w,v,k} + s_{k,w,v} + s_{k,v,w}) K_mu(|w|,|v|,|k|).
/// Symmetric in (w, v). Non-negative when w, v, k > 0; it can be negative
/// for mixed signs, with int |W| |k|^{2mu+1} dk <= 4.
double dunkl_translation_kernel(MultiplicityIndex mu, double w, double v, double kappa);

/// int K_mu(w,v,k) k^{2mu+1} dk over the support, by Gauss-Jacobi in
/// k^2 = w^2 + v^2 + 2wv t with the endpoint factors absorbed into the weight
/// and K_mu evaluated pointwise at the nodes. Equals 1 analytically.
double triangle_kernel_mass(MultiplicityIndex mu, double w, double v, int order = 40);

/// int |W_mu(w,v,k)| |k|^{2mu+1} dk over both signed branches.
double translation_kernel_variation(MultiplicityIndex mu, double w, double v, int order = 40);

/// Quadratic-phase translation at one point:
///   int f(k) W_mu(w,v,k) exp(-i[a(w^2+v^2+k^2) + d(w+v+k)]) exp(i(a k^2 + d k)) |k|^{2mu+1} dk
/// over both branches of the support, Gauss-Jacobi with cfg.jacobi_order
/// points per branch. |w| < kIdentityThreshold returns f(v); v == 0 returns
/// f(w), the value forced by the symmetry in (w, v).
Complex translate_at(const QpdtParams& p, const ComplexFunction& f, double w, double v,
                     const IntegrationConfig& cfg);

/// translate_at over vgrid. Requires mu > -1/2.
SampledSignal translate(const QpdtParams& p, const ComplexFunction& f, double w, std::span<const double> vgrid,
                        const IntegrationConfig& cfg);

/// Quadratic-phase convolution
///   (f * g)(w) = int tau_w f(-v) g(v) exp(i(a v^2 + d v)) |v|^{2mu+1} dv
/// over [-L, L] with the split composite rule of cfg. Requires mu > -1/2.
SampledSignal convolve(const QpdtParams& p, const ComplexFunction& f, const ComplexFunction& g,
                       std::span<const double> wgrid, const IntegrationConfig& cfg);

/// Weighted L^p norm (int |f|^p |v|^{2mu+1} dv)^{1/p} over [-L, L] on the
/// split composite rule; p = infinity gives the max modulus at the nodes.
double lp_norm(const ComplexFunction& f, double p, MultiplicityIndex mu, const IntegrationConfig& cfg);

/// The same for values tabulated on a rule's nodes.
double lp_norm(const QuadratureRule& rule, std::span<const Complex> values, double p, MultiplicityIndex mu);

/// Norm of a sampled signal: spline (zero outside its grid) integrated over
/// [-L, L]; p = infinity is the max modulus over the samples.
double lp_norm(const SampledSignal& s, double p, const IntegrationConfig& cfg);

}  // namespace qpdt
