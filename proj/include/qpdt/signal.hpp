#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpdt/specfun.hpp"
#include "qpdt/types.hpp"

namespace qpdt {

/// A complex function tabulated on a strictly increasing real grid.
class SampledSignal {
 public:
  /// Throws DomainError unless the grid is strictly increasing, the lengths
  /// match and every sample is finite.
  SampledSignal(std::vector<double> grid, std::vector<Complex> values, MultiplicityIndex mu);

  [[nodiscard]] const std::vector<double>& grid() const noexcept { return grid_; }
  [[nodiscard]] const std::vector<Complex>& values() const noexcept { return values_; }
  [[nodiscard]] MultiplicityIndex mu() const noexcept { return mu_; }
  [[nodiscard]] std::size_t size() const noexcept { return grid_.size(); }

 private:
  std::vector<double> grid_;
  std::vector<Complex> values_;
  MultiplicityIndex mu_;
};

/// Natural cubic spline through the samples of a SampledSignal (real and
/// imaginary parts interpolated independently). Reproduces samples exactly
/// at the knots.
class CubicSpline {
 public:
  enum class OutOfRange { kThrow, kZero };

  explicit CubicSpline(const SampledSignal& s, OutOfRange policy = OutOfRange::kThrow);

  /// Throws InterpolationError outside the grid under OutOfRange::kThrow.
  Complex operator()(double x) const;

  [[nodiscard]] double lo() const noexcept { return x_.front(); }
  [[nodiscard]] double hi() const noexcept { return x_.back(); }

 private:
  std::vector<double> x_;
  std::vector<Complex> y_;
  std::vector<Complex> m_;  // second derivatives
  OutOfRange policy_;
};

enum class TestFamily { kGaussian, kChirpedGaussian, kHermiteGaussian, kBump, kZero };

/// Named analytic test signals. All decay super-polynomially, so they lie in
/// every weighted L^p space.
///   gaussian(width, center)        exp(-(v-center)^2 / (2 width^2))
///   chirped_gaussian(rate, width)  exp(-v^2 / (2 width^2) + i rate v^2)
///   hermite_gaussian(n, width)     H_n(v/width) exp(-v^2 / (2 width^2))
///   bump(radius, center)           exp(-1 / (1 - s^2)), s = (v-center)/radius, |s| < 1
///   zero                           0
class TestFunction {
 public:
  static TestFunction gaussian(double width = 1.0, double center = 0.0);
  static TestFunction chirped_gaussian(double rate, double width = 1.0);
  static TestFunction hermite_gaussian(int degree, double width = 1.0);
  static TestFunction bump(double radius = 1.0, double center = 0.0);
  static TestFunction zero();

  /// Parses "name[:p1,p2,...]", e.g. "gaussian:1.0", "hermite_gaussian:2".
  /// Hyphens and underscores are interchangeable. Throws DomainError.
  static TestFunction parse(std::string_view spec);

  Complex operator()(double v) const;

  [[nodiscard]] TestFamily family() const noexcept { return family_; }
  [[nodiscard]] std::span<const double> shape() const noexcept { return shape_; }
  [[nodiscard]] std::string describe() const;

  /// Coefficient of the quadratic phase carried by the signal itself; used to
  /// size oscillation-resolving rules.
  [[nodiscard]] double chirp_rate() const noexcept;

 private:
  TestFunction(TestFamily family, std::vector<double> shape);

  TestFamily family_;
  std::vector<double> shape_;
};

/// n equally spaced points from lo to hi inclusive (n >= 2), or {lo} for n == 1.
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace qpdt
