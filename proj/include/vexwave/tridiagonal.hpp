#pragma once

#include <span>
#include <vector>

namespace vexwave {

/// Tridiagonal system: lower/upper have length m-1, diag length m.
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  int size() const { return static_cast<int>(diag.size()); }
  bool strictly_diagonally_dominant() const;
};

/// Thomas elimination. Throws std::runtime_error on a zero pivot.
std::vector<double> thomas_solve(const Tridiagonal& sys, std::span<const double> rhs);

/// Factored constant-coefficient tridiagonal (a,b,a): same system solved for
/// many right-hand sides, as in the ADI line sweeps.
class ConstTridiagFactor {
 public:
  ConstTridiagFactor() = default;
  ConstTridiagFactor(int m, double off, double diag);

  int size() const { return static_cast<int>(inv_piv_.size()); }
  /// Solve in place; x has length size().
  void solve(std::span<double> x) const;

 private:
  double off_ = 0.0;
  std::vector<double> cprime_;
  std::vector<double> inv_piv_;
};

}  // namespace vexwave
