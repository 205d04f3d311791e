#include "vexwave/adi.hpp"

#include <stdexcept>

#include "vexwave/threading.hpp"
#include "vexwave/tridiagonal.hpp"

namespace vexwave {

void adi_sweep(const Field2D& rhs, double eta, double c0, Field2D& out, AdiWorkspace& ws,
               int threads) {
  if (eta < 0.0) throw std::invalid_argument("adi_sweep: eta must be >= 0");
  if (!(c0 > 0.0)) throw std::invalid_argument("adi_sweep: c0 must be positive");
  const GridSpec2D& g = rhs.grid;
  const int m1 = g.m1, m2 = g.m2;
  const double h1 = g.h1(), h2 = g.h2();

  if (ws.estar.grid.points() != g.points() || !(ws.estar.grid == g)) ws.estar = Field2D(g);
  if (!(out.grid == g)) out = Field2D(g);

  // Step 1: x-direction lines, one per interior j.
  const ConstTridiagFactor fx(m1 - 1, c0 * (1.0 / 12.0 - eta / (h1 * h1)),
                              c0 * (10.0 / 12.0 + 2.0 * eta / (h1 * h1)));
  Field2D& estar = ws.estar;
  estar.zero_boundary();
  parallel_for(1, m2, threads, [&](int j) {
    thread_local std::vector<double> line;
    line.resize(m1 - 1);
    for (int i = 1; i < m1; ++i) line[i - 1] = rhs.at(i, j);
    fx.solve(line);
    for (int i = 1; i < m1; ++i) estar.at(i, j) = line[i - 1];
  });

  // Step 2: y-direction lines, one per interior i.
  const ConstTridiagFactor fy(m2 - 1, 1.0 / 12.0 - eta / (h2 * h2),
                              10.0 / 12.0 + 2.0 * eta / (h2 * h2));
  out.zero_boundary();
  parallel_for(1, m1, threads, [&](int i) {
    thread_local std::vector<double> line;
    line.resize(m2 - 1);
    for (int j = 1; j < m2; ++j) line[j - 1] = estar.at(i, j);
    fy.solve(line);
    for (int j = 1; j < m2; ++j) out.at(i, j) = line[j - 1];
  });
}

Field2D adi_sweep(const Field2D& rhs, double eta, double c0) {
  Field2D out(rhs.grid);
  AdiWorkspace ws;
  adi_sweep(rhs, eta, c0, out, ws, 0);
  return out;
}

}  // namespace vexwave
