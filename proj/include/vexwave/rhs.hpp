#pragma once

#include "vexwave/kernel_table.hpp"
#include "vexwave/problem.hpp"

namespace vexwave {

/// Right-hand-side assembly for the transformed models:
///   F(t)    = (beta_abar * (lap u0 + f))(t) + g(t) u0bar      (pointwise)
///   Fbar^n  = (1/tau) int_{t_{n-1}}^{t_n} [ (beta_abar * f)(t) + g(t) u0bar ] dt
/// With f == 0 the convolution of the constant-in-time lap u0 is exact:
/// beta_abar * lap_u0 = lap_u0 t^abar / Gamma(abar+1).
class RhsEvaluator {
 public:
  RhsEvaluator(const ProblemSpec& spec, const IdentityKernelTable& kernel,
               int conv_nodes = 32, int avg_nodes = 4);

  Field2D eval_F(double t) const;

  /// F evaluated at mesh time t_n using the tabulated g (bit-identical
  /// dynamics, no re-quadrature of g).
  Field2D eval_F_level(int n) const;

  Field2D eval_Fbar(int n) const;

 private:
  Field2D conv_lap_f(double t) const;  // beta_abar * (lap u0 + f) at time t
  Field2D conv_f(double t) const;      // beta_abar * f at time t

  const ProblemSpec& spec_;
  const IdentityKernelTable& kernel_;
  double tau_;
  Field2D lap0_, ubar_;
  QuadratureRule conv_rule_;  // jacobi(abar-1, 0) on (0,1)
  QuadratureRule avg_rule_;   // legendre, per-step time average
  QuadratureRule g_rule_;     // jacobi rule for off-mesh g evaluations
};

}  // namespace vexwave
