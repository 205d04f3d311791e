#include "vexwave/rhs.hpp"

#include <cmath>
#include <stdexcept>

#include "vexwave/special.hpp"

namespace vexwave {

RhsEvaluator::RhsEvaluator(const ProblemSpec& spec, const IdentityKernelTable& kernel,
                           int conv_nodes, int avg_nodes)
    : spec_(spec),
      kernel_(kernel),
      tau_(kernel.times.size() > 1 ? kernel.times[1] - kernel.times[0] : spec.T),
      lap0_(spec.sample(spec.lap_u0)),
      ubar_(spec.sample(spec.u0bar)),
      conv_rule_(gauss_jacobi(conv_nodes, spec.profile.abar - 1.0, 0.0)),
      avg_rule_(gauss_legendre(avg_nodes)),
      g_rule_(gauss_jacobi(64, spec.profile.alpha0 - 2.0, 1.0 - spec.profile.alpha0)) {}

// Source fields are sampled on the full node set: A_h reads them next to the
// boundary, and they need not vanish there.

Field2D RhsEvaluator::conv_lap_f(double t) const {
  const double abar = spec_.profile.abar;
  if (spec_.f_is_zero) {
    Field2D r = lap0_;
    scale(r, std::pow(t, abar) / gamma_fn(abar + 1.0));
    return r;
  }
  // (t^abar/Gamma(abar)) int_0^1 (1-s)^{abar-1} (lap u0 + f)(t s) ds
  Field2D r(spec_.grid);
  const double pre = std::pow(t, abar) / gamma_fn(abar);
  for (int q = 0; q < conv_rule_.size(); ++q) {
    const double s = conv_rule_.nodes[q], wq = conv_rule_.weights[q];
    for (int i = 0; i <= spec_.grid.m1; ++i)
      for (int j = 0; j <= spec_.grid.m2; ++j)
        r.at(i, j) += wq * (lap0_.at(i, j) +
                            spec_.f(spec_.grid.x(i), spec_.grid.y(j), t * s));
  }
  scale(r, pre);
  return r;
}

Field2D RhsEvaluator::conv_f(double t) const {
  Field2D r(spec_.grid);
  if (spec_.f_is_zero || t <= 0.0) return r;
  const double abar = spec_.profile.abar;
  const double pre = std::pow(t, abar) / gamma_fn(abar);
  for (int q = 0; q < conv_rule_.size(); ++q) {
    const double s = conv_rule_.nodes[q], wq = conv_rule_.weights[q];
    for (int i = 0; i <= spec_.grid.m1; ++i)
      for (int j = 0; j <= spec_.grid.m2; ++j)
        r.at(i, j) += wq * spec_.f(spec_.grid.x(i), spec_.grid.y(j), t * s);
  }
  scale(r, pre);
  return r;
}

Field2D RhsEvaluator::eval_F(double t) const {
  if (t < 0.0 || t > spec_.T + 1e-12)
    throw std::domain_error("eval_F: t outside [0,T]");
  Field2D r = (t > 0.0) ? conv_lap_f(t) : Field2D(spec_.grid);
  axpy(r, eval_g(spec_.profile, t, g_rule_), ubar_);
  return r;
}

Field2D RhsEvaluator::eval_F_level(int n) const {
  Field2D r = (n > 0) ? conv_lap_f(kernel_.times[n]) : Field2D(spec_.grid);
  axpy(r, kernel_.g_vals[n], ubar_);
  return r;
}

Field2D RhsEvaluator::eval_Fbar(int n) const {
  if (n < 1 || n >= static_cast<int>(kernel_.times.size()))
    throw std::invalid_argument("eval_Fbar: level out of range");
  Field2D r(spec_.grid);
  axpy(r, kernel_.g_step_integrals[n] / tau_, ubar_);
  if (!spec_.f_is_zero) {
    // (1/tau) int of the f-convolution over the step, by Gauss-Legendre
    const double lo = kernel_.times[n - 1], hi = kernel_.times[n];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int q = 0; q < avg_rule_.size(); ++q) {
      const Field2D c = conv_f(mid + half * avg_rule_.nodes[q]);
      axpy(r, half * avg_rule_.weights[q] / tau_, c);
    }
  }
  return r;
}

}  // namespace vexwave
