#pragma once

// Seeded case generators for property tests.

#include <cstdint>
#include <random>

#include "qpdt/kernels.hpp"

namespace qpdt::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  double sign() { return integer(0, 1) == 0 ? -1.0 : 1.0; }

  /// |a|, |c|, |d|, |e| <= bound, |b| in [0.5, 2], mu in [mu_lo, mu_hi].
  QpdtParams params(double bound = 1.0, double mu_lo = -0.5, double mu_hi = 3.0) {
    const double a = uniform(-bound, bound);
    const double b = sign() * uniform(0.5, 2.0);
    const double c = uniform(-bound, bound);
    const double d = uniform(-bound, bound);
    const double e = uniform(-bound, bound);
    return QpdtParams::make(a, b, c, d, e, uniform(mu_lo, mu_hi));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qpdt::testing
