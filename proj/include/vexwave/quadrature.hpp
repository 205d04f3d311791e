#pragma once

#include <vector>

namespace vexwave {

/// Gaussian quadrature rule on its canonical interval:
/// legendre on (-1,1); jacobi(a,b) on (0,1) with weight (1-z)^a z^b absorbed.
struct QuadratureRule {
  enum class Kind { legendre, jacobi };
  Kind kind = Kind::legendre;
  double a = 0.0;
  double b = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }

  /// Integrate f over the canonical interval against the rule's weight.
  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (int i = 0; i < size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }

  /// Integrate f over (lo,hi); legendre rules only.
  template <class F>
  double integrate_mapped(double lo, double hi, F&& f) const {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < size(); ++i) s += weights[i] * f(mid + half * nodes[i]);
    return half * s;
  }
};

/// Gauss-Jacobi rule on (0,1) for weight (1-z)^a z^b, a,b > -1.
/// Golub-Welsch on the symmetric Jacobi matrix, nodes polished by Newton.
QuadratureRule gauss_jacobi(int n, double a, double b);

/// Gauss-Legendre rule on (-1,1).
QuadratureRule gauss_legendre(int n);

}  // namespace vexwave
