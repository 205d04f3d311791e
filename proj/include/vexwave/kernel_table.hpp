#pragma once

#include <vector>

#include "vexwave/exponent.hpp"
#include "vexwave/quadrature.hpp"

namespace vexwave {

/// Tables derived from the generalized identity function g on a uniform mesh:
/// point values, per-step integrals, increments w_k = g(t_{k+1}) - g(t_k),
/// averaged increments w~ and the constant c0 = 1 + w_0/2.
struct IdentityKernelTable {
  std::vector<double> times;             // t_0..t_N
  std::vector<double> g_vals;            // g(t_n)
  std::vector<double> g_step_integrals;  // [n] = int_{t_{n-1}}^{t_n} g, n>=1 ([0] unused = 0)
  std::vector<double> w;                 // w_k, k = 0..N-1
  std::vector<double> wtilde;            // w~_0 = w_0/2, w~_k = (w_k + w_{k-1})/2
  double c0 = 1.0;
};

/// g(t) by Gauss-Jacobi quadrature absorbing the (1-z)^{a0-2} z^{1-a0} weight;
/// rule must be jacobi(alpha0-2, 1-alpha0). Throws std::domain_error for t < 0
/// or mismatched rule parameters.
double eval_g(const ExponentProfile& profile, double t, const QuadratureRule& rule);

/// Build the table on t_n = n T/N. The jacobi node count is accepted only if
/// doubling it moves no g value by 1e-10 or more; otherwise construction fails.
IdentityKernelTable build_kernel_table(const ExponentProfile& profile, int N, double T,
                                       int jacobi_nodes = 64, int avg_nodes = 4);

}  // namespace vexwave
