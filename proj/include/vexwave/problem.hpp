#pragma once

#include <functional>
#include <string>

#include "vexwave/exponent.hpp"
#include "vexwave/grid.hpp"

namespace vexwave {

/// Continuous problem data on the rectangle: initial value, initial velocity,
/// analytic Laplacian of the initial value, and the source term.
struct ProblemSpec {
  GridSpec2D grid;
  double T = 1.0;
  ExponentProfile profile;
  std::function<double(double, double)> u0;
  std::function<double(double, double)> u0bar;
  std::function<double(double, double)> lap_u0;
  std::function<double(double, double, double)> f;  // (x,y,t)
  bool f_is_zero = true;

  Field2D sample(const std::function<double(double, double)>& fn) const {
    Field2D r(grid);
    for (int i = 0; i <= grid.m1; ++i)
      for (int j = 0; j <= grid.m2; ++j) r.at(i, j) = fn(grid.x(i), grid.y(j));
    return r;
  }
};

/// Registry problems on the unit square with T = 1 and f = 0:
///   example1: u0 = sin(pi x) sin(pi y), u0bar = sin(2 pi x) sin(2 pi y)
///   example2: u0 = sin(pi x) sin(pi y), u0bar = 0
/// The profile label matches the example label.
ProblemSpec make_example_problem(const std::string& example, double alpha0, int M,
                                 double T = 1.0);

}  // namespace vexwave
