#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "gen.hpp"
#include "qpdt/errors.hpp"
#include "qpdt/quadrature.hpp"
#include "qpdt/specfun.hpp"

namespace {

using qpdt::MultiplicityIndex;
using Big = boost::multiprecision::cpp_bin_float_100;

// j_mu by its power series in 100-digit arithmetic.
double series_oracle(double mu, double w) {
  const Big x = Big(w) / 2;
  const Big x2 = x * x;
  Big term = 1;
  Big sum = 1;
  for (int n = 1; n < 400; ++n) {
    term *= -x2 / (Big(n) * (Big(n) + Big(mu)));
    sum += term;
    if (abs(term) < Big("1e-60")) {
      break;
    }
  }
  return static_cast<double>(sum);
}

TEST(MultiplicityIndex, RejectsBelowCritical) {
  EXPECT_THROW(MultiplicityIndex{-0.6}, qpdt::DomainError);
  EXPECT_THROW(MultiplicityIndex{std::nan("")}, qpdt::DomainError);
  EXPECT_NO_THROW(MultiplicityIndex{-0.5});
  EXPECT_FALSE(MultiplicityIndex{-0.5}.above_critical());
  EXPECT_TRUE(MultiplicityIndex{-0.49}.above_critical());
}

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(qpdt::gamma_fn(1.7), 0.9086387328532904, 1e-15);
  EXPECT_NEAR(qpdt::gamma_fn(0.5), std::sqrt(M_PI), 1e-15);
  EXPECT_DOUBLE_EQ(qpdt::gamma_fn(5.0), 24.0);
  EXPECT_THROW(qpdt::gamma_fn(0.0), qpdt::DomainError);
  EXPECT_THROW(qpdt::gamma_fn(-1.5), qpdt::DomainError);
}

TEST(NormalizedBessel, ClosedFormsAtHalfIntegers) {
  for (double w : {0.1, 1.0, 3.7, 12.5, 80.0}) {
    EXPECT_NEAR(qpdt::normalized_bessel(MultiplicityIndex{-0.5}, w), std::cos(w), 1e-14);
    EXPECT_NEAR(qpdt::normalized_bessel(MultiplicityIndex{0.5}, w), std::sin(w) / w, 1e-14);
  }
  EXPECT_EQ(qpdt::normalized_bessel(MultiplicityIndex{2.0}, 0.0), 1.0);
}

TEST(NormalizedBessel, MatchesMultiprecisionSeries) {
  qpdt::testing::Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    const double mu = gen.uniform(-0.5, 4.0);
    const double w = gen.sign() * gen.uniform(0.0, 40.0);
    EXPECT_NEAR(qpdt::normalized_bessel(MultiplicityIndex{mu}, w), series_oracle(mu, w), 2e-14)
        << "mu=" << mu << " w=" << w;
  }
}

TEST(NormalizedBessel, SeriesAgreesInItsRange) {
  qpdt::testing::Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    const double mu = gen.uniform(-0.5, 3.0);
    const double w = gen.uniform(-6.0, 6.0);
    EXPECT_NEAR(qpdt::normalized_bessel_series(MultiplicityIndex{mu}, w), series_oracle(mu, w), 1e-14);
  }
}

TEST(NormalizedBessel, EvenAndBounded) {
  qpdt::testing::Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    const MultiplicityIndex mu{gen.uniform(-0.5, 5.0)};
    const double w = gen.uniform(0.0, 500.0);
    const double j = qpdt::normalized_bessel(mu, w);
    EXPECT_EQ(j, qpdt::normalized_bessel(mu, -w));
    EXPECT_LE(std::abs(j), 1.0 + 1e-12);
  }
}

TEST(NormalizedBessel, RangeLimit) {
  EXPECT_THROW(qpdt::normalized_bessel(MultiplicityIndex{0.0}, 2e4), qpdt::DomainError);
}

TEST(CMu, Definition) {
  EXPECT_NEAR(qpdt::c_mu(MultiplicityIndex{-0.5}), 1.0 / std::sqrt(2.0 * M_PI), 1e-16);
  EXPECT_NEAR(qpdt::c_mu(MultiplicityIndex{0.0}), 0.5, 1e-16);
  EXPECT_NEAR(qpdt::c_mu(MultiplicityIndex{1.0}), 0.25, 1e-16);
}

TEST(GaussJacobi, MatchesAdaptiveQuadrature) {
  const double alpha = 0.3;
  const double beta = 1.7;
  const auto rule = qpdt::gauss_jacobi(20, alpha, beta);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    sum += rule.weights[k] * std::cos(rule.nodes[k]);
  }
  boost::math::quadrature::tanh_sinh<double> ts;
  const double oracle =
      ts.integrate([&](double t) { return std::pow(1 - t, alpha) * std::pow(1 + t, beta) * std::cos(t); }, -1.0, 1.0);
  EXPECT_NEAR(sum, oracle, 1e-13);
}

TEST(GaussJacobi, ExactForPolynomials) {
  qpdt::testing::Gen gen(14);
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = gen.uniform(-0.9, 3.0);
    const double beta = gen.uniform(-0.9, 3.0);
    const int n = gen.integer(2, 30);
    const auto rule = qpdt::gauss_jacobi(n, alpha, beta);
    // Moments of (1+t)^k: 2^{alpha+beta+k+1} B(alpha+1, beta+k+1).
    for (int k = 0; k < 2 * n; k += 3) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        sum += rule.weights[i] * std::pow(1.0 + rule.nodes[i], k);
      }
      const double exact = std::exp((alpha + beta + k + 1) * std::log(2.0) + std::lgamma(alpha + 1) +
                                    std::lgamma(beta + k + 1) - std::lgamma(alpha + beta + k + 2));
      EXPECT_NEAR(sum / exact, 1.0, 1e-11) << "n=" << n << " k=" << k << " alpha=" << alpha << " beta=" << beta;
    }
  }
}

}  // namespace
