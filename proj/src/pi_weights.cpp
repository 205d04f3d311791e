#include "vexwave/pi_weights.hpp"

#include <cmath>
#include <stdexcept>

#include "vexwave/special.hpp"

namespace vexwave {

PIWeightTable build_pi_table(double abar, int N, double tau) {
  if (!(abar > 0.0 && abar < 1.0))
    throw std::domain_error("build_pi_table: abar must lie in (0,1)");
  if (N < 1) throw std::invalid_argument("build_pi_table: N must be >= 1");
  if (!(tau > 0.0)) throw std::invalid_argument("build_pi_table: tau must be positive");

  PIWeightTable t;
  t.abar = abar;
  t.tau = tau;
  t.N = N;
  t.lambda_flat.resize(static_cast<std::size_t>(N) * (N + 1) / 2);

  const double diag = std::pow(tau, abar) / gamma_fn(abar + 2.0);
  // off-diagonal closed form in long double: the four-power difference cancels
  // badly in double for j << n
  const long double ab1 = static_cast<long double>(abar) + 1.0L;
  const long double denom = static_cast<long double>(tau) * gamma_fn(abar + 2.0);
  std::size_t k = 0;
  for (int n = 1; n <= N; ++n) {
    for (int j = 1; j < n; ++j) {
      const long double a = static_cast<long double>(n - j + 1) * tau;  // t_n - t_{j-1}
      const long double b = static_cast<long double>(n - j) * tau;      // t_{n-1}-t_{j-1} = t_n - t_j
      const long double c = static_cast<long double>(n - j - 1) * tau;  // t_{n-1} - t_j
      const long double v = (powl(a, ab1) - 2.0L * powl(b, ab1) + powl(c, ab1)) / denom;
      t.lambda_flat[k++] = static_cast<double>(v);
    }
    t.lambda_flat[k++] = diag;
  }
  return t;
}

double apply_pi(const PIWeightTable& table, double history_full,
                std::span<const double> history_mid) {
  const int n = static_cast<int>(history_mid.size()) + 1;
  if (n > table.N) throw std::invalid_argument("apply_pi: history longer than table");
  auto row = table.row(n);
  double acc = row[0] * history_full;
  for (int j = 2; j <= n; ++j) acc += row[j - 1] * history_mid[j - 2];
  return acc;
}

}  // namespace vexwave
