#include "vexwave/exponent.hpp"

#include <cmath>
#include <stdexcept>

namespace vexwave {

void validate_profile(const ExponentProfile& p, double t_max) {
  if (!(p.alpha0 > 1.0 && p.alpha0 < 2.0))
    throw std::invalid_argument("profile '" + p.label + "': alpha0 must lie in (1,2)");
  if (std::abs(p.alpha(0.0) - p.alpha0) > 1e-14)
    throw std::invalid_argument("profile '" + p.label + "': alpha(0) != alpha0");
  if (std::abs(p.abar - (p.alpha0 - 1.0)) > 0.0)
    throw std::invalid_argument("profile '" + p.label + "': abar != alpha0 - 1");

  // range check on a sample of [0, t_max]
  for (int k = 0; k <= 256; ++k) {
    const double t = t_max * k / 256.0;
    const double a = p.alpha(t);
    if (!(a > 1.0 && a < 2.0))
      throw std::invalid_argument("profile '" + p.label + "': alpha(t) left (1,2)");
  }

  // alpha'(0) = 0, checked by one-sided differences at eps = 1e-3, 1e-4:
  // the ratio |alpha(eps)-alpha0|/eps must drop ~linearly with eps, and the
  // curvature proxy |alpha(eps)-alpha0|/eps^2 stays desk-scale bounded.
  const double e1 = 1e-3, e2 = 1e-4;
  const double d1 = std::abs(p.alpha(e1) - p.alpha0);
  const double d2 = std::abs(p.alpha(e2) - p.alpha0);
  const double r1 = d1 / e1, r2 = d2 / e2;
  if (d1 / (e1 * e1) > 100.0 || r2 > 0.3 * r1 + 1e-12)
    throw std::invalid_argument("profile '" + p.label + "': alpha'(0)=0 check failed");
}

ExponentProfile make_profile(const std::string& label, double alpha0) {
  ExponentProfile p;
  p.label = label;
  p.alpha0 = alpha0;
  p.abar = alpha0 - 1.0;
  if (label == "example1") {
    p.alpha = [alpha0](double t) { return alpha0 + t * t / 11.0; };
  } else if (label == "example2") {
    p.alpha = [alpha0](double t) { return alpha0 + t * t / (3.0 + std::exp(2.0 * t)); };
  } else if (label == "constant") {
    p.alpha = [alpha0](double) { return alpha0; };
  } else {
    throw std::invalid_argument("unknown exponent profile '" + label + "'");
  }
  validate_profile(p);
  return p;
}

}  // namespace vexwave
