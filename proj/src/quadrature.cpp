#include "qpdt/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qpdt/errors.hpp"

namespace qpdt {

void IntegrationConfig::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw DomainError("integration half-width L must be positive");
  }
  if (panels < 1 || order < 1 || jacobi_order < 1) {
    throw DomainError("panels, order and jacobi_order must be positive");
  }
  if (!(tol > 0.0)) {
    throw DomainError("tolerance must be positive");
  }
  if (static_cast<long>(panels) * order > kMaxNodes) {
    throw ResourceError("quadrature node budget exceeded: " + std::to_string(panels) + " panels x " +
                        std::to_string(order) + " points");
  }
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) {
    throw DomainError("Gauss-Legendre order must be positive");
  }
  const int n = order;
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // One more derivative evaluation at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

namespace {

void append_panels(QuadratureRule& out, const QuadratureRule& base, int panels, double lo, double hi) {
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + width * p;
    const double b = (p + 1 == panels) ? hi : lo + width * (p + 1);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < base.size(); ++k) {
      out.nodes.push_back(mid + half * base.nodes[k]);
      out.weights.push_back(half * base.weights[k]);
    }
  }
}

}  // namespace

QuadratureRule gauss_legendre_composite(const IntegrationConfig& cfg, double lo, double hi) {
  if (!(lo < hi)) {
    throw DomainError("composite rule requires lo < hi");
  }
  if (static_cast<long>(cfg.panels) * cfg.order > kMaxNodes) {
    throw ResourceError("quadrature node budget exceeded");
  }
  const QuadratureRule base = gauss_legendre(cfg.order);
  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.reserve(static_cast<std::size_t>(cfg.panels) * cfg.order);
  rule.weights.reserve(rule.nodes.capacity());
  append_panels(rule, base, cfg.panels, lo, hi);
  return rule;
}

QuadratureRule split_rule(int panels, int order, double lo, double hi) {
  if (!(lo < hi)) {
    throw DomainError("composite rule requires lo < hi");
  }
  if (panels < 1 || order < 1) {
    throw DomainError("panels and order must be positive");
  }
  if (static_cast<long>(panels) * order > kMaxNodes) {
    throw ResourceError("quadrature node budget exceeded: " + std::to_string(panels) + " panels x " +
                        std::to_string(order) + " points");
  }
  const QuadratureRule base = gauss_legendre(order);
  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.reserve(static_cast<std::size_t>(panels + 1) * order);
  rule.weights.reserve(rule.nodes.capacity());
  if (lo < 0.0 && hi > 0.0) {
    const double frac = -lo / (hi - lo);
    const int left = std::max(1, static_cast<int>(std::ceil(panels * frac)));
    const int right = std::max(1, static_cast<int>(std::ceil(panels * (1.0 - frac))));
    append_panels(rule, base, left, lo, 0.0);
    append_panels(rule, base, right, 0.0, hi);
  } else {
    append_panels(rule, base, panels, lo, hi);
  }
  return rule;
}

QuadratureRule symmetric_rule(const IntegrationConfig& cfg) {
  return split_rule(cfg.panels, cfg.order, -cfg.L, cfg.L);
}

QuadratureRule measure_rule(int panels, int order, double lo, double hi, MultiplicityIndex mu) {
  const double beta = 2.0 * mu.value() + 1.0;
  QuadratureRule rule = split_rule(panels, order, lo, hi);
  rule.density_mu = mu.value();
  for (std::size_t k = 0; k < rule.size(); ++k) {
    rule.weights[k] *= weight_density(rule.nodes[k], mu);
  }
  if (!(lo < 0.0 && hi > 0.0)) {
    return rule;
  }
  // Rebuild the two panels adjacent to 0: int_0^h g(v) v^beta dv with
  // v = h (1+t)/2 becomes (h/2)^{beta+1} int g (1+t)^beta dt.
  const QuadratureRule jacobi = gauss_jacobi(order, 0.0, beta);
  const auto n = static_cast<std::size_t>(order);
  const std::size_t first_right = [&] {
    std::size_t k = 0;
    while (k < rule.size() && rule.nodes[k] < 0.0) {
      ++k;
    }
    return k;
  }();
  const double frac = -lo / (hi - lo);
  const int left = std::max(1, static_cast<int>(std::ceil(panels * frac)));
  const int right = std::max(1, static_cast<int>(std::ceil(panels * (1.0 - frac))));
  const double hl = -lo / left;
  const double hr = hi / right;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = jacobi.nodes[j];
    const double wj = jacobi.weights[j];
    // Left panel [-hl, 0]: mirrored nodes, stored in ascending order.
    rule.nodes[first_right - 1 - j] = -0.5 * hl * (1.0 + t);
    rule.weights[first_right - 1 - j] = std::pow(0.5 * hl, beta + 1.0) * wj;
    rule.nodes[first_right + j] = 0.5 * hr * (1.0 + t);
    rule.weights[first_right + j] = std::pow(0.5 * hr, beta + 1.0) * wj;
  }
  return rule;
}

QuadratureRule measure_rule(const IntegrationConfig& cfg, MultiplicityIndex mu) {
  return measure_rule(cfg.panels, cfg.order, -cfg.L, cfg.L, mu);
}

double density_factor(const QuadratureRule& rule, std::size_t k, MultiplicityIndex mu) {
  if (rule.density_mu) {
    if (*rule.density_mu != mu.value()) {
      throw DomainError("rule carries the density for a different mu");
    }
    return 1.0;
  }
  return weight_density(rule.nodes[k], mu);
}

namespace {

struct JacobiValue {
  double p;       // P_n(x)
  double p_prev;  // P_{n-1}(x)
};

JacobiValue jacobi_eval(int n, double a, double b, double x) {
  double p0 = 1.0;
  if (n == 0) {
    return {p0, 0.0};
  }
  double p1 = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

double jacobi_derivative(int n, double a, double b, double x, const JacobiValue& v) {
  const double s = 2.0 * n + a + b;
  return (n * ((a - b) - s * x) * v.p + 2.0 * (n + a) * (n + b) * v.p_prev) / (s * (1.0 - x * x));
}

}  // namespace

QuadratureRule gauss_jacobi(int order, double alpha, double beta) {
  if (order < 1) {
    throw DomainError("Gauss-Jacobi order must be positive");
  }
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Gauss-Jacobi exponents must exceed -1");
  }
  const int n = order;
  const double ab = alpha + beta;

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double b2 = 0.0;
    if (k == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }

  // Zeroth moment int (1-t)^a (1+t)^b dt.
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));

  QuadratureRule rule;
  rule.lo = -1.0;
  rule.hi = 1.0;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Gauss-Jacobi eigen-solve failed");
  }

  // Golub-Welsch weights mu0 * v_0^2 sum to mu0 exactly and stay accurate
  // for nodes crowding an endpoint (exponents near -1), where the
  // Christoffel formula loses digits through 1 - x^2.
  for (int i = 0; i < n; ++i) {
    const double x0 = solver.eigenvalues()(i);
    double x = x0;
    double last = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 20; ++iter) {
      const JacobiValue v = jacobi_eval(n, alpha, beta, x);
      const double dx = v.p / jacobi_derivative(n, alpha, beta, x, v);
      if (!std::isfinite(dx) || std::abs(dx) >= last) {
        break;  // stagnated at rounding level
      }
      last = std::abs(dx);
      x -= dx;
      if (std::abs(dx) <= 4e-16 * std::max(1.0, std::abs(x))) {
        break;
      }
    }
    // Newton may wander off when the eigenvalue already sits at rounding
    // distance from an endpoint; keep the eigenvalue then.
    if (!(x > -1.0 && x < 1.0) || std::abs(x - x0) > 1e-8) {
      x = x0;
    }
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[i] = x;
    rule.weights[i] = mu0 * v0 * v0;
  }
  for (int i = 1; i < n; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw ConvergenceError("Gauss-Jacobi nodes not strictly increasing");
    }
  }
  return rule;
}

Complex integrate_weighted(const ComplexFunction& f, MultiplicityIndex mu, const QuadratureRule& rule) {
  NeumaierSum<Complex> sum;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double x = rule.nodes[k];
    const Complex fx = f(x);
    if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
      throw EvaluationError("integrand is not finite at v = " + std::to_string(x));
    }
    sum.add(rule.weights[k] * density_factor(rule, k, mu) * fx);
  }
  return sum.value();
}

Complex integrate_weighted(std::span<const Complex> values, MultiplicityIndex mu, const QuadratureRule& rule) {
  if (values.size() != rule.size()) {
    throw DomainError("tabulated values do not match the rule's node count");
  }
  NeumaierSum<Complex> sum;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const Complex fx = values[k];
    if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
      throw EvaluationError("tabulated integrand is not finite at v = " + std::to_string(rule.nodes[k]));
    }
    sum.add(rule.weights[k] * density_factor(rule, k, mu) * fx);
  }
  return sum.value();
}

}  // namespace qpdt
