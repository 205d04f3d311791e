#include "vexwave/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace vexwave {

bool Tridiagonal::strictly_diagonally_dominant() const {
  const int m = size();
  for (int i = 0; i < m; ++i) {
    const double lo = (i > 0) ? std::abs(lower[i - 1]) : 0.0;
    const double up = (i < m - 1) ? std::abs(upper[i]) : 0.0;
    if (!(std::abs(diag[i]) > lo + up)) return false;
  }
  return true;
}

std::vector<double> thomas_solve(const Tridiagonal& sys, std::span<const double> rhs) {
  const int m = sys.size();
  if (static_cast<int>(rhs.size()) != m)
    throw std::invalid_argument("thomas_solve: rhs length mismatch");
  std::vector<double> c(m > 1 ? m - 1 : 0), x(m);
  double piv = sys.diag[0];
  if (piv == 0.0) throw std::runtime_error("thomas_solve: zero pivot");
  x[0] = rhs[0] / piv;
  for (int i = 1; i < m; ++i) {
    c[i - 1] = sys.upper[i - 1] / piv;
    piv = sys.diag[i] - sys.lower[i - 1] * c[i - 1];
    if (piv == 0.0) throw std::runtime_error("thomas_solve: zero pivot");
    x[i] = (rhs[i] - sys.lower[i - 1] * x[i - 1]) / piv;
  }
  for (int i = m - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
  return x;
}

ConstTridiagFactor::ConstTridiagFactor(int m, double off, double diag) : off_(off) {
  cprime_.resize(m > 1 ? m - 1 : 0);
  inv_piv_.resize(m);
  double piv = diag;
  if (piv == 0.0) throw std::runtime_error("tridiag factor: zero pivot");
  inv_piv_[0] = 1.0 / piv;
  for (int i = 1; i < m; ++i) {
    cprime_[i - 1] = off * inv_piv_[i - 1];
    piv = diag - off * cprime_[i - 1];
    if (piv == 0.0) throw std::runtime_error("tridiag factor: zero pivot");
    inv_piv_[i] = 1.0 / piv;
  }
}

void ConstTridiagFactor::solve(std::span<double> x) const {
  const int m = size();
  x[0] *= inv_piv_[0];
  for (int i = 1; i < m; ++i) x[i] = (x[i] - off_ * x[i - 1]) * inv_piv_[i];
  for (int i = m - 2; i >= 0; --i) x[i] -= cprime_[i] * x[i + 1];
}

}  // namespace vexwave
