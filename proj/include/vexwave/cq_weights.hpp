#pragma once

#include <span>
#include <vector>

namespace vexwave {

/// Trapezoidal convolution-quadrature weights for the fractional integral of
/// order abar in (0,1): chi from the generating function (2(1-z)/(1+z))^{-abar},
/// starting corrections rho making constants exact, and their level averages.
struct CQWeightTable {
  double abar = 0.0;
  std::vector<double> chi;      // chi_p, p = 0..N
  std::vector<double> rho;      // rho_n, n = 0..N
  std::vector<double> chi_hat;  // [p] = (chi_p + chi_{p-1})/2, p = 1..N ([0] unused)
  std::vector<double> rho_hat;  // [n] = (rho_n + rho_{n-1})/2, n = 1..N ([0] unused)
};

CQWeightTable build_cq_table(double abar, int N);

/// Q_n phi = tau^abar ( sum_p chi_p phi^{n-p} + rho_n phi^0 ), history = phi^0..phi^n.
double apply_cq(const CQWeightTable& table, std::span<const double> history, double tau);

}  // namespace vexwave
