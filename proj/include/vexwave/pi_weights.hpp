#pragma once

#include <span>
#include <vector>

namespace vexwave {

/// Averaged product-integration weights lambda_{n,j} > 0, 1 <= j <= n <= N,
/// for the step-averaged fractional integral of order abar in (0,1).
/// Stored as a flat lower triangle, row n at offset n(n-1)/2.
struct PIWeightTable {
  double abar = 0.0;
  double tau = 0.0;
  int N = 0;
  std::vector<double> lambda_flat;

  double lambda(int n, int j) const { return lambda_flat[idx(n, j)]; }
  std::span<const double> row(int n) const {
    return std::span<const double>(lambda_flat).subspan(idx(n, 1), n);
  }

 private:
  static std::size_t idx(int n, int j) {
    return static_cast<std::size_t>(n - 1) * n / 2 + (j - 1);
  }
};

PIWeightTable build_pi_table(double abar, int N, double tau);

/// P^{n-1/2} phi = lambda_{n,1} phi^1 + sum_{j=2}^n lambda_{n,j} phi^{j-1/2};
/// history_mid holds phi^{3/2}..phi^{n-1/2} (empty at n = 1).
double apply_pi(const PIWeightTable& table, double history_full,
                std::span<const double> history_mid);

}  // namespace vexwave
