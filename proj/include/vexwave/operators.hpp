#pragma once

#include "vexwave/grid.hpp"

namespace vexwave {

// Compact 1-10-1 averages; identity on the respective boundary rows.
Field2D apply_a1(const Field2D& u);
Field2D apply_a2(const Field2D& u);

// Second differences; zero on the respective boundary rows.
Field2D apply_dx2(const Field2D& u);
Field2D apply_dy2(const Field2D& u);
Field2D apply_dx2dy2(const Field2D& u);

/// Lambda_h = A2 dx2 + A1 dy2 (compact Laplacian).
Field2D apply_lambda_h(const Field2D& u);
/// A_h = A1 A2.
Field2D apply_ah(const Field2D& u);

/// Discrete L2 inner product over interior nodes.
double inner(const Field2D& u, const Field2D& w);
double norm_l2(const Field2D& u);
/// ||u||_{A_h} = sqrt((u, A_h u)).
double norm_ah(const Field2D& u);
double norm_inf(const Field2D& u);

}  // namespace vexwave
