#include "vexwave/cq_weights.hpp"

#include <cmath>
#include <stdexcept>

#include "vexwave/special.hpp"

namespace vexwave {

CQWeightTable build_cq_table(double abar, int N) {
  if (!(abar > 0.0 && abar < 1.0))
    throw std::domain_error("build_cq_table: abar must lie in (0,1)");
  if (N < 1) throw std::invalid_argument("build_cq_table: N must be >= 1");

  CQWeightTable t;
  t.abar = abar;

  // sigma_s: coefficients of (1-z)^{-abar}; varrho_s: coefficients of (1+z)^{abar}.
  // Recurrences avoid gamma at nonpositive arguments.
  std::vector<double> sigma(N + 1), varrho(N + 1);
  sigma[0] = varrho[0] = 1.0;
  for (int s = 1; s <= N; ++s) {
    sigma[s] = sigma[s - 1] * (abar + s - 1) / s;
    varrho[s] = varrho[s - 1] * (abar - s + 1) / s;
  }

  const double scale = std::pow(2.0, -abar);
  t.chi.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    double acc = 0.0;
    for (int s = 0; s <= n; ++s) acc += sigma[s] * varrho[n - s];
    t.chi[n] = scale * acc;
  }

  t.rho.resize(N + 1);
  const double ginv = 1.0 / gamma_fn(abar + 1.0);
  double cum = 0.0;
  for (int n = 0; n <= N; ++n) {
    cum += t.chi[n];
    t.rho[n] = std::pow(static_cast<double>(n), abar) * ginv - cum;
  }

  t.chi_hat.assign(N + 1, 0.0);
  t.rho_hat.assign(N + 1, 0.0);
  for (int p = 1; p <= N; ++p) {
    t.chi_hat[p] = 0.5 * (t.chi[p] + t.chi[p - 1]);
    t.rho_hat[p] = 0.5 * (t.rho[p] + t.rho[p - 1]);
  }
  return t;
}

double apply_cq(const CQWeightTable& table, std::span<const double> history, double tau) {
  const int n = static_cast<int>(history.size()) - 1;
  if (n < 0 || n >= static_cast<int>(table.chi.size()))
    throw std::invalid_argument("apply_cq: history length incompatible with table");
  double acc = 0.0;
  for (int p = 0; p <= n; ++p) acc += table.chi[p] * history[n - p];
  acc += table.rho[n] * history[0];
  return std::pow(tau, table.abar) * acc;
}

}  // namespace vexwave
