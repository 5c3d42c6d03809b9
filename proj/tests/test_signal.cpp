#include <cmath>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "qpdt/errors.hpp"
#include "qpdt/signal.hpp"

namespace {

using qpdt::Complex;
using qpdt::CubicSpline;
using qpdt::MultiplicityIndex;
using qpdt::SampledSignal;
using qpdt::TestFunction;

SampledSignal tabulate(double lo, double hi, int n, const std::function<Complex(double)>& f) {
  auto grid = qpdt::uniform_grid(lo, hi, n);
  std::vector<Complex> values;
  for (double v : grid) {
    values.push_back(f(v));
  }
  return {grid, values, MultiplicityIndex{0.0}};
}

TEST(SampledSignal, Validation) {
  const MultiplicityIndex mu{0.0};
  EXPECT_THROW(SampledSignal({0.0, 0.0}, {1.0, 1.0}, mu), qpdt::DomainError);
  EXPECT_THROW(SampledSignal({1.0, 0.0}, {1.0, 1.0}, mu), qpdt::DomainError);
  EXPECT_THROW(SampledSignal({0.0, 1.0}, {1.0}, mu), qpdt::DomainError);
  EXPECT_THROW(SampledSignal({0.0, 1.0}, {1.0, Complex{NAN, 0}}, mu), qpdt::DomainError);
  EXPECT_NO_THROW(SampledSignal({0.0, 1.0}, {1.0, 2.0}, mu));
}

TEST(UniformGrid, Endpoints) {
  const auto g = qpdt::uniform_grid(-4, 4, 129);
  EXPECT_EQ(g.size(), 129u);
  EXPECT_EQ(g.front(), -4.0);
  EXPECT_EQ(g.back(), 4.0);
  EXPECT_EQ(g[64], 0.0);
  EXPECT_EQ(qpdt::uniform_grid(2, 3, 1), std::vector<double>{2.0});
}

TEST(CubicSpline, ExactAtKnots) {
  qpdt::testing::Gen gen(41);
  std::vector<double> grid{0.0};
  std::vector<Complex> values{{gen.uniform(-1, 1), gen.uniform(-1, 1)}};
  for (int i = 0; i < 50; ++i) {
    grid.push_back(grid.back() + gen.uniform(0.01, 1.0));
    values.emplace_back(gen.uniform(-1, 1), gen.uniform(-1, 1));
  }
  const SampledSignal s(grid, values, MultiplicityIndex{0.0});
  const CubicSpline spline(s);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(spline(grid[i]), values[i]);
  }
}

TEST(CubicSpline, ReproducesLines) {
  const auto s = tabulate(-2, 3, 11, [](double v) { return Complex{2 * v - 1, -v}; });
  const CubicSpline spline(s);
  for (double x = -2; x <= 3; x += 0.037) {
    EXPECT_NEAR(std::abs(spline(x) - Complex{2 * x - 1, -x}), 0.0, 1e-14);
  }
}

TEST(CubicSpline, FourthOrderInterior) {
  // Away from the natural end conditions the error scales as h^4.
  auto err = [](int n) {
    const auto s = tabulate(-6, 6, n, [](double v) { return Complex{std::exp(-v * v / 2), 0}; });
    const CubicSpline spline(s);
    double e = 0;
    for (double x = -2; x <= 2; x += 0.0013) {
      e = std::max(e, std::abs(spline(x).real() - std::exp(-x * x / 2)));
    }
    return e;
  };
  const double ratio = err(101) / err(201);
  EXPECT_GT(ratio, 12.0);
  EXPECT_LT(ratio, 20.0);
}

TEST(CubicSpline, OutOfRangePolicies) {
  const auto s = tabulate(-1, 1, 5, [](double) { return Complex{1, 0}; });
  EXPECT_THROW(CubicSpline{s}(1.5), qpdt::InterpolationError);
  const CubicSpline zero(s, CubicSpline::OutOfRange::kZero);
  EXPECT_EQ(zero(1.5), Complex{});
  EXPECT_EQ(zero(-1.0), Complex(1, 0));
}

TEST(TestFunction, Values) {
  EXPECT_NEAR(TestFunction::gaussian(2.0, 1.0)(3.0).real(), std::exp(-0.5), 1e-16);
  EXPECT_NEAR(std::abs(TestFunction::chirped_gaussian(0.5)(2.0) - std::exp(Complex{-2.0, 2.0})), 0, 1e-15);
  EXPECT_NEAR(TestFunction::hermite_gaussian(2)(1.5).real(), (4 * 2.25 - 2) * std::exp(-1.125), 1e-14);
  EXPECT_NEAR(TestFunction::hermite_gaussian(3, 2.0)(1.0).real(), (8 * 0.125 - 12 * 0.5) * std::exp(-0.125), 1e-14);
  EXPECT_NEAR(TestFunction::bump(1.0)(0.0).real(), std::exp(-1.0), 1e-16);
  EXPECT_EQ(TestFunction::bump(1.0)(1.0), Complex{});
  EXPECT_EQ(TestFunction::zero()(0.3), Complex{});
  EXPECT_EQ(TestFunction::chirped_gaussian(0.25).chirp_rate(), 0.25);
}

TEST(TestFunction, Parse) {
  const auto g = TestFunction::parse("gaussian:1.0");
  EXPECT_EQ(g.family(), qpdt::TestFamily::kGaussian);
  EXPECT_EQ(g(1.0), TestFunction::gaussian(1.0)(1.0));
  EXPECT_EQ(TestFunction::parse("hermite-gaussian:2").family(), qpdt::TestFamily::kHermiteGaussian);
  EXPECT_EQ(TestFunction::parse("chirped_gaussian:0.5,2").describe(), "chirped_gaussian:0.5,2");
  EXPECT_EQ(TestFunction::parse("zero").family(), qpdt::TestFamily::kZero);
  EXPECT_THROW(TestFunction::parse("sinc"), qpdt::DomainError);
  EXPECT_THROW(TestFunction::parse("gaussian:x"), qpdt::DomainError);
  EXPECT_THROW(TestFunction::parse("gaussian:-1"), qpdt::DomainError);
  EXPECT_THROW(TestFunction::parse("gaussian:1,2,3"), qpdt::DomainError);
}

TEST(TestFunction, DescribeRoundTrips) {
  qpdt::testing::Gen gen(42);
  for (int i = 0; i < 50; ++i) {
    const auto f = TestFunction::gaussian(gen.uniform(0.2, 3), gen.uniform(-2, 2));
    const auto g = TestFunction::parse(f.describe());
    for (double v : {-1.0, 0.0, 0.7}) {
      EXPECT_EQ(f(v), g(v));
    }
  }
}

}  // namespace
