#include "vexwave/kernel_table.hpp"

#include <cmath>
#include <stdexcept>

#include "vexwave/special.hpp"

namespace vexwave {

double eval_g(const ExponentProfile& profile, double t, const QuadratureRule& rule) {
  if (t < 0.0) throw std::domain_error("eval_g: t must be nonnegative");
  if (rule.kind != QuadratureRule::Kind::jacobi ||
      std::abs(rule.a - (profile.alpha0 - 2.0)) > 1e-12 ||
      std::abs(rule.b - (1.0 - profile.alpha0)) > 1e-12)
    throw std::domain_error("eval_g: rule does not match the profile's jacobi weight");

  const double a0 = profile.alpha0;
  const double g1 = gamma_fn(a0 - 1.0);
  double s = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    const double z = rule.nodes[q];
    const double tz = t * z;
    const double av = profile.alpha(tz);
    // (tz)^{a0 - alpha(tz)} -> 1 as tz -> 0 since alpha'(0)=0
    const double pw = (tz > 0.0) ? std::exp((a0 - av) * std::log(tz)) : 1.0;
    s += rule.weights[q] * pw / (g1 * gamma_fn(2.0 - av));
  }
  return s;
}

IdentityKernelTable build_kernel_table(const ExponentProfile& profile, int N, double T,
                                       int jacobi_nodes, int avg_nodes) {
  if (N < 1) throw std::invalid_argument("build_kernel_table: N must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("build_kernel_table: T must be positive");
  validate_profile(profile, T);

  const QuadratureRule rule = gauss_jacobi(jacobi_nodes, profile.alpha0 - 2.0, 1.0 - profile.alpha0);
  const QuadratureRule rule2 = gauss_jacobi(2 * jacobi_nodes, profile.alpha0 - 2.0, 1.0 - profile.alpha0);
  const QuadratureRule leg = gauss_legendre(avg_nodes);

  IdentityKernelTable tab;
  const double tau = T / N;
  tab.times.resize(N + 1);
  tab.g_vals.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    tab.times[n] = n * tau;
    tab.g_vals[n] = eval_g(profile, tab.times[n], rule);
    const double g2 = eval_g(profile, tab.times[n], rule2);
    if (std::abs(tab.g_vals[n] - g2) >= 1e-10)
      throw std::runtime_error("build_kernel_table: g quadrature not converged at the "
                               "requested node count (doubling gate)");
  }

  tab.g_step_integrals.assign(N + 1, 0.0);
  for (int n = 1; n <= N; ++n)
    tab.g_step_integrals[n] = leg.integrate_mapped(
        tab.times[n - 1], tab.times[n], [&](double t) { return eval_g(profile, t, rule); });

  tab.w.resize(N);
  for (int k = 0; k < N; ++k) tab.w[k] = tab.g_vals[k + 1] - tab.g_vals[k];
  tab.wtilde.resize(N);
  tab.wtilde[0] = 0.5 * tab.w[0];
  for (int k = 1; k < N; ++k) tab.wtilde[k] = 0.5 * (tab.w[k] + tab.w[k - 1]);
  tab.c0 = 1.0 + 0.5 * tab.w[0];
  return tab;
}

}  // namespace vexwave
