#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "gen.hpp"
#include "qpdt/errors.hpp"
#include "qpdt/ops.hpp"

namespace {

using qpdt::Complex;
using qpdt::IntegrationConfig;
using qpdt::MultiplicityIndex;
using qpdt::QpdtParams;
using qpdt::TestFunction;

// Dunkl translation of exp(-v^2/2) (a = d = 0):
//   exp(-(w^2+v^2)/2) E_mu(-wv), E_mu(x) = i_mu(x) + x/(2(mu+1)) i_{mu+1}(x),
// with i_nu(x) = Gamma(nu+1) (2/|x|)^nu I_nu(|x|) the modified normalized Bessel.
double gaussian_translate_oracle(double mu, double w, double v) {
  const double x = -w * v;
  auto inorm = [](double nu, double y) {
    y = std::abs(y);
    if (y == 0) {
      return 1.0;
    }
    return std::tgamma(nu + 1) * std::pow(2 / y, nu) * boost::math::cyl_bessel_i(nu, y);
  };
  return std::exp(-(w * w + v * v) / 2) * (inorm(mu, x) + x / (2 * (mu + 1)) * inorm(mu + 1, x));
}

TEST(Sigma, Values) {
  EXPECT_DOUBLE_EQ(qpdt::sigma(1, 1, 1), 0.5);
  EXPECT_DOUBLE_EQ(qpdt::sigma(2, 3, 1), 1.0);
  EXPECT_THROW(qpdt::sigma(0, 1, 1), qpdt::DomainError);
}

TEST(TriangleKernel, KnownValueAndSupport) {
  EXPECT_NEAR(qpdt::triangle_kernel(MultiplicityIndex{1.0}, 1, 1, 1), std::sqrt(3.0) / M_PI, 1e-15);
  EXPECT_EQ(qpdt::triangle_kernel(MultiplicityIndex{1.0}, 1, 1, 2.5), 0.0);
  EXPECT_EQ(qpdt::triangle_kernel(MultiplicityIndex{1.0}, 3, 1, 1.5), 0.0);
  EXPECT_THROW(qpdt::triangle_kernel(MultiplicityIndex{-0.5}, 1, 1, 1), qpdt::DomainError);
}

TEST(TriangleKernel, UnitMass) {
  qpdt::testing::Gen gen(71);
  for (int i = 0; i < 40; ++i) {
    const MultiplicityIndex mu{gen.uniform(-0.4, 3.0)};
    EXPECT_NEAR(qpdt::triangle_kernel_mass(mu, gen.uniform(0.1, 5), gen.uniform(0.1, 5)), 1.0, 1e-10);
  }
}

TEST(TranslationKernel, SymmetricAndBoundedVariation) {
  qpdt::testing::Gen gen(72);
  for (int i = 0; i < 200; ++i) {
    const MultiplicityIndex mu{gen.uniform(-0.4, 3.0)};
    const double w = gen.uniform(-4, 4);
    const double v = gen.uniform(-4, 4);
    const double k = gen.uniform(-6, 6);
    EXPECT_EQ(qpdt::dunkl_translation_kernel(mu, w, v, k), qpdt::dunkl_translation_kernel(mu, v, w, k));
    if (w > 0 && v > 0 && k > 0) {
      EXPECT_GE(qpdt::dunkl_translation_kernel(mu, w, v, k), 0.0);
    }
  }
  for (int i = 0; i < 20; ++i) {
    const MultiplicityIndex mu{gen.uniform(-0.4, 3.0)};
    EXPECT_LE(qpdt::translation_kernel_variation(mu, gen.uniform(-4, 4), gen.uniform(-4, 4)), 4.0);
  }
}

TEST(Translate, IdentityIsExact) {
  const auto f = TestFunction::hermite_gaussian(3);
  const QpdtParams p = QpdtParams::make(0.3, 1.2, -0.4, 0.8, 0.1, 0.7);
  const auto grid = qpdt::uniform_grid(-3, 3, 31);
  const auto s = qpdt::translate(p, f, 0.0, grid, IntegrationConfig{});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    EXPECT_EQ(s.values()[k], f(grid[k]));
  }
}

TEST(Translate, GaussianClosedForm) {
  IntegrationConfig cfg;
  cfg.jacobi_order = 60;
  qpdt::testing::Gen gen(73);
  for (int i = 0; i < 60; ++i) {
    const double mu = gen.uniform(-0.4, 2.5);
    const double w = gen.uniform(-3, 3);
    const double v = gen.uniform(-3, 3);
    const QpdtParams p = QpdtParams::make(0, 1, 0, 0, 0, mu);
    const Complex got = qpdt::translate_at(p, TestFunction::gaussian(), w, v, cfg);
    EXPECT_NEAR(got.real(), gaussian_translate_oracle(mu, w, v), 1e-8) << "mu=" << mu << " w=" << w << " v=" << v;
    EXPECT_NEAR(got.imag(), 0.0, 1e-12);
  }
}

TEST(Translate, ClassicalLimitShiftsTheSignal) {
  // At mu -> -1/2 the translation tends to f(v + w); the gap is O(mu + 1/2).
  const double mu = -0.5 + 1e-4;
  const QpdtParams p = QpdtParams::make(0, 1, 0, 0, 0, mu);
  IntegrationConfig cfg;
  cfg.jacobi_order = 60;
  const auto f = TestFunction::gaussian(1.0, 0.4);
  for (double w : {-1.0, 0.5, 2.0}) {
    for (double v : {-0.7, 0.3, 1.9}) {
      EXPECT_NEAR(std::abs(qpdt::translate_at(p, f, w, v, cfg) - f(v + w)), 0.0, 1e-3);
    }
  }
}

TEST(Translate, QuadraticPhaseFactorizes) {
  qpdt::testing::Gen gen(74);
  IntegrationConfig cfg;
  const auto f = TestFunction::hermite_gaussian(2);
  for (int i = 0; i < 30; ++i) {
    const QpdtParams p = gen.params(1.0, -0.3, 2.0);
    QpdtParams plain = p;
    plain.a = 0;
    plain.d = 0;
    const double w = gen.uniform(-3, 3);
    const double v = gen.uniform(-3, 3);
    const Complex phase = std::exp(Complex{0, -(p.a * (w * w + v * v) + p.d * (w + v))});
    const Complex expected = phase * qpdt::translate_at(plain, f, w, v, cfg);
    EXPECT_LT(std::abs(qpdt::translate_at(p, f, w, v, cfg) - expected), 1e-12);
  }
}

TEST(Translate, RequiresMuAboveCritical) {
  const QpdtParams p = QpdtParams::make(0, 1, 0, 0, 0, -0.5);
  const std::vector<double> grid{0.0};
  EXPECT_THROW(qpdt::translate(p, TestFunction::gaussian(), 1.0, grid, IntegrationConfig{}), qpdt::DomainError);
  EXPECT_THROW(qpdt::convolve(p, TestFunction::gaussian(), TestFunction::gaussian(), grid, IntegrationConfig{}),
               qpdt::DomainError);
}

TEST(Convolve, ZeroAndLinearity) {
  const QpdtParams p = QpdtParams::make(0.2, 1.0, 0.1, 0.0, 0.3, 0.5);
  const auto grid = qpdt::uniform_grid(-2, 2, 5);
  IntegrationConfig cfg;
  cfg.panels = 32;
  const auto zero = qpdt::convolve(p, TestFunction::gaussian(), TestFunction::zero(), grid, cfg);
  for (const Complex& z : zero.values()) {
    EXPECT_EQ(z, Complex{});
  }
  const auto f = TestFunction::gaussian();
  const qpdt::ComplexFunction twice = [&](double v) { return 2.0 * f(v); };
  const auto A = qpdt::convolve(p, f, f, grid, cfg);
  const auto B = qpdt::convolve(p, twice, f, grid, cfg);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    EXPECT_LT(std::abs(B.values()[k] - 2.0 * A.values()[k]), 1e-14);
  }
}

TEST(LpNorm, GaussianClosedForm) {
  // int exp(-p v^2 / 2) |v|^{2mu+1} dv = Gamma(mu+1) (2/p)^{mu+1}.
  for (double mu : {-0.5, 0.0, 1.3}) {
    for (double p : {1.0, 2.0, 3.5}) {
      const double exact = std::pow(std::tgamma(mu + 1) * std::pow(2 / p, mu + 1), 1 / p);
      EXPECT_NEAR(qpdt::lp_norm(TestFunction::gaussian(), p, MultiplicityIndex{mu}, IntegrationConfig{}), exact,
                  1e-13);
    }
  }
  EXPECT_NEAR(qpdt::lp_norm(TestFunction::gaussian(), INFINITY, MultiplicityIndex{0.0}, IntegrationConfig{}), 1.0,
              1e-3);
}

}  // namespace
