#include "qpdt/signal.hpp"

#include <array>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "qpdt/errors.hpp"

namespace qpdt {

SampledSignal::SampledSignal(std::vector<double> grid, std::vector<Complex> values, MultiplicityIndex mu)
    : grid_(std::move(grid)), values_(std::move(values)), mu_(mu) {
  if (grid_.size() != values_.size()) {
    throw DomainError("sampled signal: grid and value lengths differ");
  }
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(grid_[i]) || !std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw DomainError("sampled signal: non-finite entry at index " + std::to_string(i));
    }
    if (i > 0 && !(grid_[i] > grid_[i - 1])) {
      throw DomainError("sampled signal: grid must be strictly increasing");
    }
  }
}

CubicSpline::CubicSpline(const SampledSignal& s, OutOfRange policy)
    : x_(s.grid()), y_(s.values()), m_(s.size(), Complex{}), policy_(policy) {
  const std::size_t n = x_.size();
  if (n < 2) {
    throw DomainError("spline needs at least two samples");
  }
  if (n == 2) {
    return;
  }
  // Thomas algorithm on the interior equations, natural end conditions.
  const std::size_t k = n - 2;
  std::vector<double> diag(k);
  std::vector<double> upper(k);
  std::vector<Complex> rhs(k);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    diag[i - 1] = 2.0 * (h0 + h1);
    upper[i - 1] = h1;
    rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  for (std::size_t i = 1; i < k; ++i) {
    const double lower = x_[i + 1] - x_[i];  // h_{i} as sub-diagonal of row i
    const double factor = lower / diag[i - 1];
    diag[i] -= factor * upper[i - 1];
    rhs[i] -= factor * rhs[i - 1];
  }
  m_[k] = rhs[k - 1] / diag[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    m_[i + 1] = (rhs[i] - upper[i] * m_[i + 2]) / diag[i];
  }
}

Complex CubicSpline::operator()(double x) const {
  if (x < x_.front() || x > x_.back() || std::isnan(x)) {
    if (policy_ == OutOfRange::kZero) {
      return {};
    }
    throw InterpolationError("interpolation point " + std::to_string(x) + " outside tabulated domain [" +
                             std::to_string(x_.front()) + ", " + std::to_string(x_.back()) + "]");
  }
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  if (x_[i] == x) {
    return y_[i];
  }
  if (i + 1 >= x_.size()) {
    i = x_.size() - 2;
  }
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = 1.0 - a;
  return a * y_[i] + b * y_[i + 1] + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * (h * h / 6.0);
}

TestFunction::TestFunction(TestFamily family, std::vector<double> shape)
    : family_(family), shape_(std::move(shape)) {}

TestFunction TestFunction::gaussian(double width, double center) {
  if (!(width > 0.0) || !std::isfinite(center)) {
    throw DomainError("gaussian width must be positive");
  }
  return {TestFamily::kGaussian, {width, center}};
}

TestFunction TestFunction::chirped_gaussian(double rate, double width) {
  if (!(width > 0.0) || !std::isfinite(rate)) {
    throw DomainError("chirped gaussian needs finite rate and positive width");
  }
  return {TestFamily::kChirpedGaussian, {rate, width}};
}

TestFunction TestFunction::hermite_gaussian(int degree, double width) {
  if (degree < 0 || degree > 40 || !(width > 0.0)) {
    throw DomainError("hermite gaussian needs 0 <= degree <= 40 and positive width");
  }
  return {TestFamily::kHermiteGaussian, {static_cast<double>(degree), width}};
}

TestFunction TestFunction::bump(double radius, double center) {
  if (!(radius > 0.0) || !std::isfinite(center)) {
    throw DomainError("bump radius must be positive");
  }
  return {TestFamily::kBump, {radius, center}};
}

TestFunction TestFunction::zero() { return {TestFamily::kZero, {}}; }

namespace {

std::string normalize_name(std::string_view name) {
  std::string out(name);
  std::replace(out.begin(), out.end(), '-', '_');
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError("cannot parse test-function parameter '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

double arg_or(const std::vector<double>& args, std::size_t i, double fallback) {
  return i < args.size() ? args[i] : fallback;
}

}  // namespace

TestFunction TestFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string name = normalize_name(spec.substr(0, colon));
  const std::vector<double> args =
      colon == std::string_view::npos ? std::vector<double>{} : parse_numbers(spec.substr(colon + 1));
  if (args.size() > (name == "zero" ? 0u : 2u)) {
    throw DomainError("too many parameters in '" + std::string(spec) + "'");
  }
  if (name == "gaussian") {
    return gaussian(arg_or(args, 0, 1.0), arg_or(args, 1, 0.0));
  }
  if (name == "chirped_gaussian") {
    return chirped_gaussian(arg_or(args, 0, 0.5), arg_or(args, 1, 1.0));
  }
  if (name == "hermite_gaussian") {
    const double degree = arg_or(args, 0, 1.0);
    if (degree != std::floor(degree)) {
      throw DomainError("hermite degree must be an integer");
    }
    return hermite_gaussian(static_cast<int>(degree), arg_or(args, 1, 1.0));
  }
  if (name == "bump") {
    return bump(arg_or(args, 0, 1.0), arg_or(args, 1, 0.0));
  }
  if (name == "zero") {
    return zero();
  }
  throw DomainError("unknown test function '" + std::string(spec) + "'");
}

Complex TestFunction::operator()(double v) const {
  switch (family_) {
    case TestFamily::kGaussian: {
      const double s = (v - shape_[1]) / shape_[0];
      return {std::exp(-0.5 * s * s), 0.0};
    }
    case TestFamily::kChirpedGaussian: {
      const double s = v / shape_[1];
      return std::polar(std::exp(-0.5 * s * s), shape_[0] * v * v);
    }
    case TestFamily::kHermiteGaussian: {
      const int n = static_cast<int>(shape_[0]);
      const double s = v / shape_[1];
      double h0 = 1.0;
      double h1 = 2.0 * s;
      if (n == 0) {
        h1 = h0;
      }
      for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * s * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
      }
      return {h1 * std::exp(-0.5 * s * s), 0.0};
    }
    case TestFamily::kBump: {
      const double s = (v - shape_[1]) / shape_[0];
      if (std::abs(s) >= 1.0) {
        return {};
      }
      return {std::exp(-1.0 / (1.0 - s * s)), 0.0};
    }
    case TestFamily::kZero:
      return {};
  }
  return {};
}

std::string TestFunction::describe() const {
  std::ostringstream out;
  switch (family_) {
    case TestFamily::kGaussian:
      out << "gaussian";
      break;
    case TestFamily::kChirpedGaussian:
      out << "chirped_gaussian";
      break;
    case TestFamily::kHermiteGaussian:
      out << "hermite_gaussian";
      break;
    case TestFamily::kBump:
      out << "bump";
      break;
    case TestFamily::kZero:
      out << "zero";
      break;
  }
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    std::array<char, 32> buf{};
    const auto end = std::to_chars(buf.data(), buf.data() + buf.size(), shape_[i]).ptr;
    out << (i == 0 ? ':' : ',') << std::string_view(buf.data(), end);
  }
  return out.str();
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 1 || !std::isfinite(lo) || !std::isfinite(hi) || (n > 1 && !(lo < hi))) {
    throw DomainError("uniform grid needs n >= 1 and lo < hi");
  }
  if (n == 1) {
    return {lo};
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    out[i] = lo + step * i;
  }
  out.back() = hi;
  return out;
}

double TestFunction::chirp_rate() const noexcept {
  return family_ == TestFamily::kChirpedGaussian ? shape_[0] : 0.0;
}

}  // namespace qpdt
