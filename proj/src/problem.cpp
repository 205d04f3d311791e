#include "vexwave/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace vexwave {

ProblemSpec make_example_problem(const std::string& example, double alpha0, int M, double T) {
  if (example != "example1" && example != "example2")
    throw std::invalid_argument("unknown example problem '" + example + "'");
  ProblemSpec p;
  p.grid = make_grid(0.0, 1.0, 0.0, 1.0, M, M);
  p.T = T;
  p.profile = make_profile(example, alpha0);
  p.u0 = [](double x, double y) { return std::sin(M_PI * x) * std::sin(M_PI * y); };
  p.lap_u0 = [](double x, double y) {
    return -2.0 * M_PI * M_PI * std::sin(M_PI * x) * std::sin(M_PI * y);
  };
  if (example == "example1") {
    p.u0bar = [](double x, double y) {
      return std::sin(2.0 * M_PI * x) * std::sin(2.0 * M_PI * y);
    };
  } else {
    p.u0bar = [](double, double) { return 0.0; };
  }
  p.f = [](double, double, double) { return 0.0; };
  p.f_is_zero = true;
  return p;
}

}  // namespace vexwave
