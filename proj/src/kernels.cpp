#include "qpdt/kernels.hpp"

#include <cmath>
#include <numbers>

#include "qpdt/errors.hpp"

namespace qpdt {

QpdtParams QpdtParams::make(double a, double b, double c, double d, double e, double mu) {
  QpdtParams p{a, b, c, d, e, MultiplicityIndex{mu}};
  p.validate();
  return p;
}

void QpdtParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d) || !std::isfinite(e)) {
    throw DomainError("transform parameters must be finite");
  }
  if (b == 0.0) {
    throw DomainError("transform parameter b must be non-zero");
  }
}

QpdtParams inverse_params(const QpdtParams& p) { return QpdtParams{-p.c, -p.b, -p.a, -p.e, -p.d, p.mu}; }

Complex dunkl_kernel(MultiplicityIndex mu, double lambda, double v) {
  const double x = lambda * v;
  if (mu.value() == -0.5) {
    if (!std::isfinite(x) || std::abs(x) > kMaxBesselArgument) {
      throw DomainError("Dunkl kernel argument outside the supported range");
    }
    return {std::cos(x), std::sin(x)};
  }
  const double jm = normalized_bessel(mu, x);
  const double jm1 = normalized_bessel(MultiplicityIndex{mu.value() + 1.0}, x);
  return {jm, x / (2.0 * (mu.value() + 1.0)) * jm1};
}

Complex power_ib(double b, MultiplicityIndex mu) {
  if (b == 0.0 || !std::isfinite(b)) {
    throw DomainError("power_ib requires finite b != 0");
  }
  const double s = mu.value() + 1.0;
  const double sign = b > 0.0 ? 1.0 : -1.0;
  return std::polar(std::pow(std::abs(b), s), sign * std::numbers::pi * s / 2.0);
}

Complex qpdt_kernel(const QpdtParams& p, double w, double v) {
  const double phase = -(p.a * v * v + p.c * w * w + p.d * v + p.e * w);
  return std::polar(1.0, phase) * dunkl_kernel(p.mu, -w / p.b, v);
}

}  // namespace qpdt
