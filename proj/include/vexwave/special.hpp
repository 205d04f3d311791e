#pragma once

namespace vexwave {

/// Gamma function for positive real arguments (Lanczos, g=7, 9 terms).
/// Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// Euler beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta_fn(double a, double b);

}  // namespace vexwave
