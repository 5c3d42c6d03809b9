#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <optional>
#include <type_traits>
#include <vector>

#include "qpdt/specfun.hpp"
#include "qpdt/types.hpp"

namespace qpdt {

/// Neumaier (improved Kahan) summation. Works for double and Complex.
template <typename T>
class NeumaierSum {
 public:
  void add(T x) noexcept {
    if constexpr (std::is_same_v<T, Complex>) {
      re_.add(x.real());
      im_.add(x.imag());
    } else {
      const T t = sum_ + x;
      if (std::abs(sum_) >= std::abs(x)) {
        comp_ += (sum_ - t) + x;
      } else {
        comp_ += (x - t) + sum_;
      }
      sum_ = t;
    }
  }

  [[nodiscard]] T value() const noexcept {
    if constexpr (std::is_same_v<T, Complex>) {
      return {re_.value(), im_.value()};
    } else {
      return sum_ + comp_;
    }
  }

 private:
  struct Empty {};
  using Part = std::conditional_t<std::is_same_v<T, Complex>, NeumaierSum<double>, Empty>;
  T sum_{};
  T comp_{};
  [[no_unique_address]] Part re_{};
  [[no_unique_address]] Part im_{};
};

/// Nodes and positive weights on [lo, hi], nodes strictly increasing.
/// When density_mu is set the weights already contain |v|^{2 mu + 1} for that
/// mu, and integrate_weighted does not apply the density again.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = -1.0;
  double hi = 1.0;
  std::optional<double> density_mu;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// Truncation and resolution settings shared by every integral over R.
struct IntegrationConfig {
  double L = 12.0;         ///< integrals over R are truncated to [-L, L]
  int panels = 64;         ///< composite Gauss-Legendre panels (minimum)
  int order = 10;          ///< Gauss-Legendre points per panel
  double tol = 1e-8;       ///< target accuracy for tail checks
  int jacobi_order = 40;   ///< Gauss-Jacobi points for translation integrals

  /// Throws DomainError on non-positive fields, ResourceError if the node
  /// budget panels*order exceeds kMaxNodes.
  void validate() const;
};

inline constexpr long kMaxNodes = 1'000'000;

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int order);

/// `panels` equal subintervals of [lo, hi] with an `order`-point
/// Gauss-Legendre rule on each.
QuadratureRule gauss_legendre_composite(const IntegrationConfig& cfg, double lo, double hi);

/// Composite rule on [lo, hi] that always has a panel boundary at 0 when
/// lo < 0 < hi; panels are split between the halves in proportion to length.
/// Keeps the |v|^{2mu+1} kink at the origin off the interior of a panel.
QuadratureRule split_rule(int panels, int order, double lo, double hi);

/// split_rule over [-L, L] with cfg.panels and cfg.order.
QuadratureRule symmetric_rule(const IntegrationConfig& cfg);

/// Rule for int g(v) |v|^{2mu+1} dv on [lo, hi] with the density in the
/// weights. Same panels as split_rule, except that the panels touching the
/// origin use Gauss-Jacobi with the density as weight function, so the
/// non-smooth |v|^{2mu+1} costs no accuracy.
QuadratureRule measure_rule(int panels, int order, double lo, double hi, MultiplicityIndex mu);

/// measure_rule over [-L, L] with cfg.panels and cfg.order.
QuadratureRule measure_rule(const IntegrationConfig& cfg, MultiplicityIndex mu);

/// Gauss-Jacobi rule on (-1, 1) for the weight (1-t)^alpha (1+t)^beta.
/// Golub-Welsch eigen-solve for the initial nodes, then Newton polishing on
/// P_n^{(alpha,beta)} and the closed-form Christoffel weights.
QuadratureRule gauss_jacobi(int order, double alpha, double beta);

/// sum_k w_k f(x_k) |x_k|^{2mu+1}, fixed ascending node order, compensated.
/// For a rule from measure_rule the density is already in w_k (and mu must
/// match). Throws EvaluationError if f is non-finite at a node.
Complex integrate_weighted(const ComplexFunction& f, MultiplicityIndex mu, const QuadratureRule& rule);

/// Same sum for values already tabulated on the rule's nodes.
Complex integrate_weighted(std::span<const Complex> values, MultiplicityIndex mu,
                           const QuadratureRule& rule);

/// Density factor rule.weights[k] must be multiplied by: |x_k|^{2mu+1}, or 1
/// when the rule carries the density itself.
double density_factor(const QuadratureRule& rule, std::size_t k, MultiplicityIndex mu);

/// The measure density |v|^{2mu+1}.
inline double weight_density(double v, double mu) { return std::pow(std::abs(v), 2.0 * mu + 1.0); }

}  // namespace qpdt
