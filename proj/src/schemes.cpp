#include "vexwave/schemes.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "vexwave/operators.hpp"
#include "vexwave/special.hpp"

namespace vexwave {

std::string to_string(SchemeTag tag) {
  switch (tag) {
    case SchemeTag::f2oacd: return "f2oacd";
    case SchemeTag::a2oacd: return "a2oacd";
    case SchemeTag::f2oscd: return "f2oscd";
    case SchemeTag::a2oscd: return "a2oscd";
  }
  return "?";
}

std::optional<SchemeTag> scheme_from_string(const std::string& s) {
  if (s == "f2oacd") return SchemeTag::f2oacd;
  if (s == "a2oacd") return SchemeTag::a2oacd;
  if (s == "f2oscd") return SchemeTag::f2oscd;
  if (s == "a2oscd") return SchemeTag::a2oscd;
  return std::nullopt;
}

bool scheme_is_adi(SchemeTag tag) {
  return tag == SchemeTag::f2oacd || tag == SchemeTag::a2oacd;
}

bool scheme_is_averaged(SchemeTag tag) {
  return tag == SchemeTag::a2oacd || tag == SchemeTag::a2oscd;
}

SchemeState init_state(SchemeTag tag, const ProblemSpec& spec, const RhsEvaluator& rhs) {
  SchemeState st;
  st.n = 0;
  Field2D u0(spec.grid);
  if (scheme_is_averaged(tag)) {
    u0 = spec.sample(spec.u0);
    u0.zero_boundary();
  }
  st.u.push_back(u0);
  st.lam_u.push_back(apply_lambda_h(st.u[0]));
  if (!scheme_is_averaged(tag)) st.f_prev = rhs.eval_F_level(0);
  return st;
}

namespace {

class PhaseTimer {
 public:
  explicit PhaseTimer(double* acc) : acc_(acc), t0_(std::chrono::steady_clock::now()) {}
  void stop() {
    if (acc_ && !stopped_) {
      *acc_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
      stopped_ = true;
    }
  }
  ~PhaseTimer() { stop(); }

 private:
  double* acc_;
  std::chrono::steady_clock::time_point t0_;
  bool stopped_ = false;
};

// F-tilde^n of the formally second-order family; also the right-hand side of
// its standard (unsplit) variant:
//   c0 eta0 Lh u^{n-1} + tau^{abar+1} ( sum_{p<n} chi-hat_{n-p} Lh u^p
//   + rho-hat_n Lh u^0 ) - sum_{k<n} w~_{n-k} Ah E^k + tau Ah F^{n-1/2}
Field2D assemble_f2o_rhs(SchemeState& state, const StepContext& ctx, double eta0) {
  const int n = state.n + 1;
  const Tables& tb = ctx.tables;
  const double tau = ctx.tau;
  const double tpow = std::pow(tau, tb.cq.abar + 1.0);

  Field2D rhs(ctx.spec.grid);
  axpy(rhs, tb.kernel.c0 * eta0, state.lam_u[n - 1]);
  for (int p = 0; p < n; ++p) axpy(rhs, tpow * tb.cq.chi_hat[n - p], state.lam_u[p]);
  axpy(rhs, tpow * tb.cq.rho_hat[n], state.lam_u[0]);
  for (int k = 1; k < n; ++k) axpy(rhs, -tb.kernel.wtilde[n - k], state.ah_incr[k - 1]);

  Field2D fn = ctx.rhs.eval_F_level(n);
  Field2D fhalf = fn;
  axpy(fhalf, 1.0, state.f_prev);
  scale(fhalf, 0.5);
  state.f_prev = std::move(fn);
  Field2D ahf = apply_ah(fhalf);
  axpy(rhs, tau, ahf);
  return rhs;
}

// F-hat^n of the accurately second-order family (PI rule), likewise shared
// with its standard variant.
Field2D assemble_a2o_rhs(const SchemeState& state, const StepContext& ctx) {
  const int n = state.n + 1;
  const Tables& tb = ctx.tables;
  const double tau = ctx.tau;

  Field2D rhs(ctx.spec.grid);
  if (n == 1) {
    axpy(rhs, tau * tb.pi.lambda(1, 1), state.lam_u[0]);
  } else {
    auto lam = tb.pi.row(n);
    axpy(rhs, tau * lam[n - 1], state.lam_u[n - 1]);  // lambda_{n,n}
    axpy(rhs, tau * lam[0], state.lam_u[1]);          // lambda_{n,1}
    for (int k = 2; k < n; ++k) {
      const double c = 0.5 * tau * lam[k - 1];  // lambda_{n,k} on the midpoint
      axpy(rhs, c, state.lam_u[k]);
      axpy(rhs, c, state.lam_u[k - 1]);
    }
    for (int k = 1; k < n; ++k) axpy(rhs, -tb.kernel.wtilde[n - k], state.ah_incr[k - 1]);
  }
  Field2D fbar = ctx.rhs.eval_Fbar(n);
  Field2D ahf = apply_ah(fbar);
  axpy(rhs, tau, ahf);
  return rhs;
}

void push_level(SchemeState& state, Field2D&& incr) {
  Field2D next = state.u.back();
  axpy(next, 1.0, incr);
  next.zero_boundary();
  state.lam_u.push_back(apply_lambda_h(next));
  state.ah_incr.push_back(apply_ah(incr));
  state.incr.push_back(std::move(incr));
  state.u.push_back(std::move(next));
  ++state.n;
}

}  // namespace

void f2oacd_step(SchemeState& state, const StepContext& ctx) {
  const Tables& tb = ctx.tables;
  const double eta0 =
      std::pow(ctx.tau, tb.cq.abar + 1.0) * tb.cq.chi[0] / (2.0 * tb.kernel.c0);
  PhaseTimer t_rhs(ctx.timing ? &ctx.timing->rhs_s : nullptr);
  Field2D rhs = assemble_f2o_rhs(state, ctx, eta0);
  t_rhs.stop();
  PhaseTimer t_solve(ctx.timing ? &ctx.timing->solves_s : nullptr);
  Field2D incr(ctx.spec.grid);
  adi_sweep(rhs, eta0, tb.kernel.c0, incr, ctx.ws, ctx.threads);
  t_solve.stop();
  push_level(state, std::move(incr));
}

void a2oacd_step(SchemeState& state, const StepContext& ctx) {
  const Tables& tb = ctx.tables;
  const int n = state.n + 1;
  const double lnn = tb.pi.lambda(n, n);
  const double eta = (n == 1) ? ctx.tau * lnn / tb.kernel.c0
                              : ctx.tau * lnn / (2.0 * tb.kernel.c0);
  PhaseTimer t_rhs(ctx.timing ? &ctx.timing->rhs_s : nullptr);
  Field2D rhs = assemble_a2o_rhs(state, ctx);
  t_rhs.stop();
  PhaseTimer t_solve(ctx.timing ? &ctx.timing->solves_s : nullptr);
  Field2D incr(ctx.spec.grid);
  adi_sweep(rhs, eta, tb.kernel.c0, incr, ctx.ws, ctx.threads);
  t_solve.stop();
  push_level(state, std::move(incr));
}

void f2oscd_step(SchemeState& state, const StepContext& ctx) {
  const Tables& tb = ctx.tables;
  const double kappa = 0.5 * std::pow(ctx.tau, tb.cq.abar + 1.0) * tb.cq.chi[0];
  PhaseTimer t_rhs(ctx.timing ? &ctx.timing->rhs_s : nullptr);
  Field2D rhs = assemble_f2o_rhs(state, ctx, kappa / tb.kernel.c0);
  t_rhs.stop();
  PhaseTimer t_solve(ctx.timing ? &ctx.timing->solves_s : nullptr);
  Field2D guess = state.incr.empty() ? Field2D(ctx.spec.grid) : state.incr.back();
  Field2D incr = cg_solve_unsplit(tb.kernel.c0, kappa, rhs, guess, ctx.cg_tol, ctx.cg_maxit);
  t_solve.stop();
  push_level(state, std::move(incr));
}

void a2oscd_step(SchemeState& state, const StepContext& ctx) {
  const Tables& tb = ctx.tables;
  const int n = state.n + 1;
  const double lnn = tb.pi.lambda(n, n);
  const double kappa = (n == 1) ? ctx.tau * lnn : 0.5 * ctx.tau * lnn;
  PhaseTimer t_rhs(ctx.timing ? &ctx.timing->rhs_s : nullptr);
  Field2D rhs = assemble_a2o_rhs(state, ctx);
  t_rhs.stop();
  PhaseTimer t_solve(ctx.timing ? &ctx.timing->solves_s : nullptr);
  Field2D guess = state.incr.empty() ? Field2D(ctx.spec.grid) : state.incr.back();
  Field2D incr = cg_solve_unsplit(tb.kernel.c0, kappa, rhs, guess, ctx.cg_tol, ctx.cg_maxit);
  t_solve.stop();
  push_level(state, std::move(incr));
}

Field2D physical_solution(SchemeTag tag, const SchemeState& state, const Field2D& u0_field) {
  Field2D u = state.u[state.n];
  if (!scheme_is_averaged(tag)) axpy(u, 1.0, u0_field);
  return u;
}

Field2D cg_solve_unsplit(double c0, double kappa, const Field2D& rhs, const Field2D& x0,
                         double rel_tol, int max_iter) {
  auto apply = [&](const Field2D& v) {
    Field2D av = apply_ah(v);
    scale(av, c0);
    const Field2D lv = apply_lambda_h(v);
    axpy(av, -kappa, lv);
    av.zero_boundary();
    return av;
  };
  auto dot = [](const Field2D& a, const Field2D& b) { return inner(a, b); };

  Field2D x = x0;
  x.zero_boundary();
  Field2D r = rhs;
  {
    const Field2D ax = apply(x);
    axpy(r, -1.0, ax);
  }
  r.zero_boundary();
  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  if (rhs_norm == 0.0) return Field2D(rhs.grid);

  Field2D p = r;
  double rr = dot(r, r);
  for (int it = 0; it < max_iter; ++it) {
    if (std::sqrt(rr) <= rel_tol * rhs_norm) return x;
    const Field2D ap = apply(p);
    const double alpha = rr / dot(p, ap);
    axpy(x, alpha, p);
    axpy(r, -alpha, ap);
    const double rr_new = dot(r, r);
    const double beta = rr_new / rr;
    rr = rr_new;
    scale(p, beta);
    axpy(p, 1.0, r);
  }
  if (std::sqrt(rr) <= rel_tol * rhs_norm) return x;
  throw std::runtime_error("cg_solve_unsplit: no convergence after " +
                           std::to_string(max_iter) + " iterations, relative residual " +
                           std::to_string(std::sqrt(rr) / rhs_norm));
}

Trajectory run_solver(const ProblemSpec& spec, SchemeTag tag, int N, const SolverOptions& opt) {
  if (N < 1) throw std::invalid_argument("run_solver: N must be >= 1");
  using clock = std::chrono::steady_clock;
  const auto t_all0 = clock::now();
  auto secs = [](auto d) { return std::chrono::duration<double>(d).count(); };

  Trajectory out;
  const double tau = spec.T / N;

  const auto t_w0 = clock::now();
  Tables tables;
  tables.kernel = build_kernel_table(spec.profile, N, spec.T, opt.jacobi_nodes, opt.avg_nodes);
  if (scheme_is_averaged(tag)) {
    tables.pi = build_pi_table(spec.profile.abar, N, tau);
  } else {
    tables.cq = build_cq_table(spec.profile.abar, N);
  }
  out.timing.weights_s = secs(clock::now() - t_w0);

  RhsEvaluator rhs(spec, tables.kernel, opt.conv_nodes, opt.avg_nodes);
  AdiWorkspace ws;
  StepContext ctx{spec,       tables,     rhs, tau, ws, opt.threads,
                  opt.cg_tol, opt.cg_maxit, &out.timing};
  SchemeState state = init_state(tag, spec, rhs);

  Field2D u0_field = spec.sample(spec.u0);
  u0_field.zero_boundary();

  out.u.reserve(N + 1);
  out.u.push_back(physical_solution(tag, state, u0_field));

  const auto t_s0 = clock::now();
  for (int n = 1; n <= N; ++n) {
    switch (tag) {
      case SchemeTag::f2oacd: f2oacd_step(state, ctx); break;
      case SchemeTag::a2oacd: a2oacd_step(state, ctx); break;
      case SchemeTag::f2oscd: f2oscd_step(state, ctx); break;
      case SchemeTag::a2oscd: a2oscd_step(state, ctx); break;
    }
    out.u.push_back(physical_solution(tag, state, u0_field));
  }
  out.timing.stepping_s = secs(clock::now() - t_s0);
  out.timing.total_s = secs(clock::now() - t_all0);
  return out;
}

}  // namespace vexwave
