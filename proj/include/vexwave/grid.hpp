#pragma once

#include <stdexcept>
#include <vector>

namespace vexwave {

/// Tensor mesh on (l1,r1) x (l2,r2) with m1 x m2 cells.
struct GridSpec2D {
  double l1 = 0.0, r1 = 1.0, l2 = 0.0, r2 = 1.0;
  int m1 = 2, m2 = 2;

  double h1() const { return (r1 - l1) / m1; }
  double h2() const { return (r2 - l2) / m2; }
  double x(int i) const { return l1 + i * h1(); }
  double y(int j) const { return l2 + j * h2(); }
  int points() const { return (m1 + 1) * (m2 + 1); }

  bool operator==(const GridSpec2D&) const = default;
};

inline GridSpec2D make_grid(double l1, double r1, double l2, double r2, int m1, int m2) {
  GridSpec2D g{l1, r1, l2, r2, m1, m2};
  if (m1 < 2 || m2 < 2) throw std::invalid_argument("grid: m1, m2 must be >= 2");
  if (!(g.h1() > 0.0 && g.h2() > 0.0)) throw std::invalid_argument("grid: degenerate bounds");
  const double ratio = g.h2() / g.h1();
  if (ratio < 0.25 || ratio > 4.0)
    throw std::invalid_argument("grid: quasi-uniformity ratio h2/h1 outside [1/4, 4]");
  return g;
}

/// Grid function on the full (m1+1) x (m2+1) node set, row-major by x-index.
/// Fields in the homogeneous-Dirichlet space keep exact zeros on the boundary.
struct Field2D {
  GridSpec2D grid;
  std::vector<double> v;

  Field2D() = default;
  explicit Field2D(const GridSpec2D& g) : grid(g), v(g.points(), 0.0) {}

  double& at(int i, int j) { return v[static_cast<std::size_t>(i) * (grid.m2 + 1) + j]; }
  double at(int i, int j) const { return v[static_cast<std::size_t>(i) * (grid.m2 + 1) + j]; }

  void zero_boundary() {
    for (int i = 0; i <= grid.m1; ++i) at(i, 0) = at(i, grid.m2) = 0.0;
    for (int j = 0; j <= grid.m2; ++j) at(0, j) = at(grid.m1, j) = 0.0;
  }

  bool boundary_is_zero() const {
    for (int i = 0; i <= grid.m1; ++i)
      if (at(i, 0) != 0.0 || at(i, grid.m2) != 0.0) return false;
    for (int j = 0; j <= grid.m2; ++j)
      if (at(0, j) != 0.0 || at(grid.m1, j) != 0.0) return false;
    return true;
  }
};

/// y += a * x  (whole node set; boundary zeros stay zero when both operands do)
inline void axpy(Field2D& y, double a, const Field2D& x) {
  for (std::size_t k = 0; k < y.v.size(); ++k) y.v[k] += a * x.v[k];
}

inline void scale(Field2D& y, double a) {
  for (auto& t : y.v) t *= a;
}

}  // namespace vexwave
