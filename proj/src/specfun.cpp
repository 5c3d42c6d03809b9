#include "qpdt/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <string>

#include "qpdt/errors.hpp"
#include "qpdt/quadrature.hpp"

namespace qpdt {

MultiplicityIndex::MultiplicityIndex(double mu) : mu_(mu) {
  if (!std::isfinite(mu) || mu < -0.5) {
    throw DomainError("multiplicity index must satisfy mu >= -1/2, got " + std::to_string(mu));
  }
}

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma_fn requires x > 0");
  }
  return std::tgamma(x);
}

double normalized_bessel_series(MultiplicityIndex mu, double w) {
  const double q = -(w * w) / 4.0;
  NeumaierSum<double> sum;
  double term = 1.0;
  sum.add(term);
  for (int n = 1; n < 250; ++n) {
    term *= q / (static_cast<double>(n) * (static_cast<double>(n) + mu.value()));
    sum.add(term);
    if (std::abs(term) <= 1e-17 * std::abs(sum.value())) {
      break;
    }
  }
  return sum.value();
}

double normalized_bessel(MultiplicityIndex mu, double w) {
  if (!std::isfinite(w) || std::abs(w) > kMaxBesselArgument) {
    throw DomainError("normalized_bessel argument outside [-W_MAX, W_MAX]: " + std::to_string(w));
  }
  const double x = std::abs(w);
  if (x <= kSeriesCutoff) {
    return normalized_bessel_series(mu, x);
  }
  const double m = mu.value();
  if (m == -0.5) {
    return std::cos(x);
  }
  if (m == 0.5) {
    return std::sin(x) / x;
  }
  return std::tgamma(m + 1.0) * std::pow(2.0 / x, m) * boost::math::cyl_bessel_j(m, x);
}

double c_mu(MultiplicityIndex mu) {
  return 1.0 / (std::pow(2.0, mu.value() + 1.0) * std::tgamma(mu.value() + 1.0));
}

}  // namespace qpdt
