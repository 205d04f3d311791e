#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vexwave/adi.hpp"
#include "vexwave/cq_weights.hpp"
#include "vexwave/kernel_table.hpp"
#include "vexwave/pi_weights.hpp"
#include "vexwave/problem.hpp"
#include "vexwave/rhs.hpp"

namespace vexwave {

enum class SchemeTag { f2oacd, a2oacd, f2oscd, a2oscd };

std::string to_string(SchemeTag tag);
std::optional<SchemeTag> scheme_from_string(const std::string& s);
bool scheme_is_adi(SchemeTag tag);
bool scheme_is_averaged(SchemeTag tag);  // a2o* family (PI rule)

/// Weight tables a stepper needs. cq is populated for the f2o* family,
/// pi for the a2o* family.
struct Tables {
  IdentityKernelTable kernel;
  CQWeightTable cq;
  PIWeightTable pi;
};

/// Time-stepping state. For the f2o* schemes `u` holds the transformed
/// variable (u-tilde, zero at level 0) and the physical solution is
/// u + u0; for the a2o* schemes `u` holds the physical solution directly.
/// Histories are retained in full: both schemes are nonlocal in time.
struct SchemeState {
  int n = 0;
  std::vector<Field2D> u;        // levels 0..n
  std::vector<Field2D> incr;     // [k-1] = u^k - u^{k-1}, k = 1..n
  std::vector<Field2D> lam_u;    // Lambda_h u^k
  std::vector<Field2D> ah_incr;  // A_h (u^k - u^{k-1})
  Field2D f_prev;                // F(t_{n}) cache of the f2o* right-hand side
};

struct RunTiming {
  double weights_s = 0.0;
  double rhs_s = 0.0;
  double solves_s = 0.0;
  double total_s = 0.0;
  double stepping_s = 0.0;  // whole stepping loop, excludes table builds
};

struct StepContext {
  const ProblemSpec& spec;
  const Tables& tables;
  const RhsEvaluator& rhs;
  double tau;
  AdiWorkspace& ws;
  int threads = 0;
  double cg_tol = 1e-12;
  int cg_maxit = 50000;
  RunTiming* timing = nullptr;
};

SchemeState init_state(SchemeTag tag, const ProblemSpec& spec, const RhsEvaluator& rhs);

void f2oacd_step(SchemeState& state, const StepContext& ctx);
void a2oacd_step(SchemeState& state, const StepContext& ctx);
void f2oscd_step(SchemeState& state, const StepContext& ctx);
void a2oscd_step(SchemeState& state, const StepContext& ctx);

/// Physical solution at the state's current level.
Field2D physical_solution(SchemeTag tag, const SchemeState& state, const Field2D& u0_field);

struct SolverOptions {
  int jacobi_nodes = 64;
  int avg_nodes = 4;
  int conv_nodes = 32;
  int threads = 0;
  double cg_tol = 1e-12;
  int cg_maxit = 50000;
};

struct Trajectory {
  std::vector<Field2D> u;  // physical solution at levels 0..N
  RunTiming timing;
};

Trajectory run_solver(const ProblemSpec& spec, SchemeTag tag, int N,
                      const SolverOptions& opt = {});

/// Conjugate gradient for the unsplit SPD operator c0 A_h - kappa Lambda_h on
/// the zero-boundary space. Throws on non-convergence, reporting the residual.
Field2D cg_solve_unsplit(double c0, double kappa, const Field2D& rhs, const Field2D& x0,
                         double rel_tol, int max_iter);

}  // namespace vexwave
