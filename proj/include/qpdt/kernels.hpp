#pragma once

#include "qpdt/specfun.hpp"
#include "qpdt/types.hpp"

namespace qpdt {

/// The transform's identity: chirp coefficients (a, c), scale b != 0,
/// linear phase coefficients (d, e) and the multiplicity mu.
struct QpdtParams {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  MultiplicityIndex mu{0.0};

  /// Validated construction; throws DomainError for b == 0 or non-finite input.
  static QpdtParams make(double a, double b, double c, double d, double e, double mu);

  /// Throws DomainError if b == 0 or any coefficient is not finite.
  void validate() const;
};

/// Parameters (-c, -b, -a, -e, -d, mu) of the inverse transform.
QpdtParams inverse_params(const QpdtParams& p);

/// E_mu(i lambda, v) = j_mu(lambda v) + i lambda v / (2(mu+1)) j_{mu+1}(lambda v).
Complex dunkl_kernel(MultiplicityIndex mu, double lambda, double v);

/// (i b)^{mu+1} on the branch arg(i b) = sgn(b) pi/2, i.e.
/// |b|^{mu+1} exp(i sgn(b) pi (mu+1) / 2). Throws DomainError for b == 0.
Complex power_ib(double b, MultiplicityIndex mu);

/// Psi(w, v) = exp(-i(a v^2 + c w^2 + d v + e w)) E_mu(-i w / b, v).
Complex qpdt_kernel(const QpdtParams& p, double w, double v);

}  // namespace qpdt
