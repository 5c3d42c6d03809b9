#pragma once

namespace qpdt {

/// Multiplicity parameter mu of the weight |v|^{2mu+1}; always >= -1/2.
class MultiplicityIndex {
 public:
  /// Throws DomainError unless mu is finite and mu >= -1/2.
  explicit MultiplicityIndex(double mu);

  [[nodiscard]] double value() const noexcept { return mu_; }
  operator double() const noexcept { return mu_; }  // NOLINT(google-explicit-constructor)

  /// True when mu > -1/2, as required by translation and convolution.
  [[nodiscard]] bool above_critical() const noexcept { return mu_ > -0.5; }

  friend bool operator==(MultiplicityIndex, MultiplicityIndex) = default;

 private:
  double mu_;
};

/// Largest |argument| accepted by the normalized Bessel function.
inline constexpr double kMaxBesselArgument = 1.0e4;

/// Arguments up to this magnitude are summed from the power series; larger
/// ones go through the cylinder Bessel function J_mu.
inline constexpr double kSeriesCutoff = 6.0;

/// Gamma function for x > 0. Throws DomainError for x <= 0 or NaN.
double gamma_fn(double x);

/// Normalized spherical Bessel function
///   j_mu(w) = Gamma(mu+1) * sum_n (-1)^n (w/2)^{2n} / (n! Gamma(n+mu+1))
///           = 2^mu Gamma(mu+1) J_mu(w) / w^mu.
/// Even in w, j_mu(0) = 1. Throws DomainError if |w| > kMaxBesselArgument.
double normalized_bessel(MultiplicityIndex mu, double w);

/// The raw power series for j_mu, compensated summation, term recurrence,
/// stops at |term| <= 1e-17 |sum| or 250 terms. Cancellation limits it to
/// roughly |w| <= 10 in double precision.
double normalized_bessel_series(MultiplicityIndex mu, double w);

/// c_mu = 1 / (2^{mu+1} Gamma(mu+1)).
double c_mu(MultiplicityIndex mu);

}  // namespace qpdt
