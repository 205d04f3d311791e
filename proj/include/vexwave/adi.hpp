#pragma once

#include "vexwave/grid.hpp"

namespace vexwave {

/// Scratch reused across time steps (the intermediate field of Step 1).
struct AdiWorkspace {
  Field2D estar;
};

/// Solve c0 (A1 - eta dx2)(A2 - eta dy2) E = rhs on the interior with zero
/// Dirichlet boundary, by an x-line sweep followed by a y-line sweep.
/// Requires eta >= 0 (line systems strictly diagonally dominant).
void adi_sweep(const Field2D& rhs, double eta, double c0, Field2D& out, AdiWorkspace& ws,
               int threads = 0);

Field2D adi_sweep(const Field2D& rhs, double eta, double c0);

}  // namespace vexwave
