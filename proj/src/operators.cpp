#include "vexwave/operators.hpp"

#include <cmath>

namespace vexwave {

Field2D apply_a1(const Field2D& u) {
  Field2D r(u.grid);
  const int m1 = u.grid.m1, m2 = u.grid.m2;
  for (int j = 0; j <= m2; ++j) {
    r.at(0, j) = u.at(0, j);
    r.at(m1, j) = u.at(m1, j);
  }
  for (int i = 1; i < m1; ++i)
    for (int j = 0; j <= m2; ++j)
      r.at(i, j) = (u.at(i - 1, j) + 10.0 * u.at(i, j) + u.at(i + 1, j)) / 12.0;
  return r;
}

Field2D apply_a2(const Field2D& u) {
  Field2D r(u.grid);
  const int m1 = u.grid.m1, m2 = u.grid.m2;
  for (int i = 0; i <= m1; ++i) {
    r.at(i, 0) = u.at(i, 0);
    r.at(i, m2) = u.at(i, m2);
  }
  for (int i = 0; i <= m1; ++i)
    for (int j = 1; j < m2; ++j)
      r.at(i, j) = (u.at(i, j - 1) + 10.0 * u.at(i, j) + u.at(i, j + 1)) / 12.0;
  return r;
}

Field2D apply_dx2(const Field2D& u) {
  Field2D r(u.grid);
  const int m1 = u.grid.m1, m2 = u.grid.m2;
  const double ih2 = 1.0 / (u.grid.h1() * u.grid.h1());
  for (int i = 1; i < m1; ++i)
    for (int j = 0; j <= m2; ++j)
      r.at(i, j) = (u.at(i + 1, j) - 2.0 * u.at(i, j) + u.at(i - 1, j)) * ih2;
  return r;
}

Field2D apply_dy2(const Field2D& u) {
  Field2D r(u.grid);
  const int m1 = u.grid.m1, m2 = u.grid.m2;
  const double ih2 = 1.0 / (u.grid.h2() * u.grid.h2());
  for (int i = 0; i <= m1; ++i)
    for (int j = 1; j < m2; ++j)
      r.at(i, j) = (u.at(i, j + 1) - 2.0 * u.at(i, j) + u.at(i, j - 1)) * ih2;
  return r;
}

Field2D apply_dx2dy2(const Field2D& u) { return apply_dx2(apply_dy2(u)); }

Field2D apply_lambda_h(const Field2D& u) {
  Field2D r = apply_a2(apply_dx2(u));
  const Field2D t = apply_a1(apply_dy2(u));
  axpy(r, 1.0, t);
  return r;
}

Field2D apply_ah(const Field2D& u) { return apply_a1(apply_a2(u)); }

double inner(const Field2D& u, const Field2D& w) {
  const int m1 = u.grid.m1, m2 = u.grid.m2;
  double s = 0.0;
  for (int i = 1; i < m1; ++i)
    for (int j = 1; j < m2; ++j) s += u.at(i, j) * w.at(i, j);
  return u.grid.h1() * u.grid.h2() * s;
}

double norm_l2(const Field2D& u) { return std::sqrt(inner(u, u)); }

double norm_ah(const Field2D& u) { return std::sqrt(inner(u, apply_ah(u))); }

double norm_inf(const Field2D& u) {
  double m = 0.0;
  for (double t : u.v) m = std::max(m, std::abs(t));
  return m;
}

}  // namespace vexwave
