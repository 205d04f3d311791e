#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vexwave/operators.hpp"
#include "vexwave/schemes.hpp"
#include "vexwave/special.hpp"
#include "vexwave/study.hpp"

using namespace vexwave;

namespace {

ProblemSpec zero_data_problem(double alpha0, int M) {
  ProblemSpec p = make_example_problem("example1", alpha0, M);
  p.u0 = [](double, double) { return 0.0; };
  p.u0bar = [](double, double) { return 0.0; };
  p.lap_u0 = [](double, double) { return 0.0; };
  return p;
}

// Test-side re-derivation of the per-step right-hand sides from the printed
// update formulas, used to cross-check the production assembly + ADI solve
// against dense elimination of the unsplit operator.
Field2D reference_rhs(SchemeTag tag, const SchemeState& st, const Tables& tb,
                      const RhsEvaluator& ev, double tau) {
  const int n = st.n + 1;
  Field2D rhs(st.u[0].grid);
  if (!scheme_is_averaged(tag)) {
    const double tpow = std::pow(tau, tb.cq.abar + 1.0);
    axpy(rhs, 0.5 * tpow * tb.cq.chi[0], st.lam_u[n - 1]);
    for (int p = 0; p < n; ++p) axpy(rhs, tpow * tb.cq.chi_hat[n - p], st.lam_u[p]);
    axpy(rhs, tpow * tb.cq.rho_hat[n], st.lam_u[0]);
    for (int k = 1; k < n; ++k) axpy(rhs, -tb.kernel.wtilde[n - k], st.ah_incr[k - 1]);
    Field2D fh = ev.eval_F_level(n);
    axpy(fh, 1.0, ev.eval_F_level(n - 1));
    scale(fh, 0.5);
    axpy(rhs, tau, apply_ah(fh));
  } else {
    if (n == 1) {
      axpy(rhs, tau * tb.pi.lambda(1, 1), st.lam_u[0]);
    } else {
      axpy(rhs, tau * tb.pi.lambda(n, n), st.lam_u[n - 1]);
      axpy(rhs, tau * tb.pi.lambda(n, 1), st.lam_u[1]);
      for (int k = 2; k < n; ++k) {
        axpy(rhs, 0.5 * tau * tb.pi.lambda(n, k), st.lam_u[k]);
        axpy(rhs, 0.5 * tau * tb.pi.lambda(n, k), st.lam_u[k - 1]);
      }
      for (int k = 1; k < n; ++k) axpy(rhs, -tb.kernel.wtilde[n - k], st.ah_incr[k - 1]);
    }
    axpy(rhs, tau, apply_ah(ev.eval_Fbar(n)));
  }
  return rhs;
}

struct CrossCheck {
  double max_solution_dev = 0.0;   // vs dense solve of the unsplit operator
  double max_rel_residual = 0.0;   // unsplit equation residual of the ADI increment
};

CrossCheck cross_check(SchemeTag tag, const ProblemSpec& spec, int N) {
  const double tau = spec.T / N;
  Tables tables;
  tables.kernel = build_kernel_table(spec.profile, N, spec.T);
  if (scheme_is_averaged(tag))
    tables.pi = build_pi_table(spec.profile.abar, N, tau);
  else
    tables.cq = build_cq_table(spec.profile.abar, N);
  RhsEvaluator ev(spec, tables.kernel);
  AdiWorkspace ws;
  StepContext ctx{spec, tables, ev, tau, ws, 0, 1e-13, 50000, nullptr};
  SchemeState st = init_state(tag, spec, ev);
  const double c0 = tables.kernel.c0;

  CrossCheck out;
  for (int n = 1; n <= N; ++n) {
    const Field2D rhs_ref = reference_rhs(tag, st, tables, ev, tau);
    double eta = 0.0, kappa = 0.0;
    const bool adi = scheme_is_adi(tag);
    if (!scheme_is_averaged(tag))
      kappa = 0.5 * std::pow(tau, tables.cq.abar + 1.0) * tables.cq.chi[0];
    else
      kappa = (n == 1) ? tau * tables.pi.lambda(1, 1) : 0.5 * tau * tables.pi.lambda(n, n);
    eta = kappa / c0;

    auto op = [&](const Field2D& v) {
      Field2D t = apply_ah(v);
      scale(t, c0);
      axpy(t, -kappa, apply_lambda_h(v));
      if (adi) axpy(t, c0 * eta * eta, apply_dx2dy2(v));
      return t;
    };
    const auto A = oracles::dense_operator(spec.grid, op);
    const auto xd = oracles::dense_solve(A, oracles::interior_vector(rhs_ref));

    switch (tag) {
      case SchemeTag::f2oacd: f2oacd_step(st, ctx); break;
      case SchemeTag::a2oacd: a2oacd_step(st, ctx); break;
      case SchemeTag::f2oscd: f2oscd_step(st, ctx); break;
      case SchemeTag::a2oscd: a2oscd_step(st, ctx); break;
    }
    const auto xi = oracles::interior_vector(st.incr.back());

    double dev = 0.0, scl = 0.0;
    for (std::size_t k = 0; k < xd.size(); ++k) {
      dev = std::max(dev, std::abs(xd[k] - xi[k]));
      scl = std::max(scl, std::abs(xd[k]));
    }
    out.max_solution_dev = std::max(out.max_solution_dev, dev / (scl + 1e-300));

    // residual of the unsplit equation on the production increment
    const Field2D au = op(st.incr.back());
    double rnorm = 0.0, bnorm = 0.0;
    const auto b = oracles::interior_vector(rhs_ref);
    const auto ax = oracles::interior_vector(au);
    for (std::size_t k = 0; k < b.size(); ++k) {
      rnorm += (ax[k] - b[k]) * (ax[k] - b[k]);
      bnorm += b[k] * b[k];
    }
    out.max_rel_residual =
        std::max(out.max_rel_residual, std::sqrt(rnorm) / (std::sqrt(bnorm) + 1e-300));
  }
  return out;
}

}  // namespace

TEST_CASE("zero data stays identically zero for all four schemes") {
  const ProblemSpec p = zero_data_problem(1.5, 8);
  for (SchemeTag tag :
       {SchemeTag::f2oacd, SchemeTag::a2oacd, SchemeTag::f2oscd, SchemeTag::a2oscd}) {
    const Trajectory t = run_solver(p, tag, 4);
    for (const auto& u : t.u) CHECK(norm_inf(u) == 0.0);
  }
}

TEST_CASE("boundary stays exactly zero") {
  const ProblemSpec p = make_example_problem("example1", 1.5, 8);
  for (SchemeTag tag : {SchemeTag::f2oacd, SchemeTag::a2oacd}) {
    const Trajectory t = run_solver(p, tag, 6);
    for (const auto& u : t.u) CHECK(u.boundary_is_zero());
  }
}

TEST_CASE("run_solver: N = 1 equals a single step") {
  const ProblemSpec p = make_example_problem("example1", 1.5, 8);
  const Trajectory t = run_solver(p, SchemeTag::f2oacd, 1);
  CHECK(t.u.size() == 2);

  Tables tables;
  tables.kernel = build_kernel_table(p.profile, 1, p.T);
  tables.cq = build_cq_table(p.profile.abar, 1);
  RhsEvaluator ev(p, tables.kernel);
  AdiWorkspace ws;
  StepContext ctx{p, tables, ev, p.T, ws, 0, 1e-12, 50000, nullptr};
  SchemeState st = init_state(SchemeTag::f2oacd, p, ev);
  f2oacd_step(st, ctx);
  Field2D u0f = p.sample(p.u0);
  u0f.zero_boundary();
  const Field2D u1 = physical_solution(SchemeTag::f2oacd, st, u0f);
  for (std::size_t k = 0; k < u1.v.size(); ++k) CHECK(u1.v[k] == t.u[1].v[k]);
}

TEST_CASE("timing: total bounds the phases") {
  const ProblemSpec p = make_example_problem("example1", 1.3, 8);
  const Trajectory t = run_solver(p, SchemeTag::a2oacd, 8);
  CHECK(t.timing.total_s >= t.timing.weights_s + t.timing.stepping_s - 1e-9);
  CHECK(t.timing.stepping_s >= t.timing.rhs_s + t.timing.solves_s - 1e-9);
  CHECK(t.timing.total_s > 0.0);
}

TEST_CASE("f2oacd matches the dense unsplit oracle (M=8, N=4, example 1)") {
  const ProblemSpec p = make_example_problem("example1", 1.5, 8);
  const auto chk = cross_check(SchemeTag::f2oacd, p, 4);
  CHECK(chk.max_solution_dev <= 1e-11);
  CHECK(chk.max_rel_residual <= 1e-10);
}

TEST_CASE("a2oacd matches the dense unsplit oracle (M=8, N=4, example 2)") {
  const ProblemSpec p = make_example_problem("example2", 1.3, 8);
  const auto chk = cross_check(SchemeTag::a2oacd, p, 4);
  CHECK(chk.max_solution_dev <= 1e-11);
  CHECK(chk.max_rel_residual <= 1e-10);
}

TEST_CASE("standard schemes match dense elimination of the unsplit operator") {
  const ProblemSpec p = make_example_problem("example1", 1.4, 8);
  for (SchemeTag tag : {SchemeTag::f2oscd, SchemeTag::a2oscd}) {
    const auto chk = cross_check(tag, p, 3);
    CHECK(chk.max_solution_dev <= 1e-10);
  }
}

TEST_CASE("cg solver reports non-convergence with the residual") {
  const ProblemSpec p = make_example_problem("example1", 1.5, 8);
  Field2D rhs = p.sample(p.u0);
  rhs.zero_boundary();
  bool threw = false;
  try {
    (void)cg_solve_unsplit(1.0, 0.5, rhs, Field2D(p.grid), 1e-15, 1);
  } catch (const std::runtime_error& e) {
    threw = true;
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("constant exponent degenerates to the constant-order schemes") {
  // alpha(t) == alpha0: all wtilde vanish, c0 == 1 exactly, and the steppers
  // must coincide with directly coded constant-order counterparts.
  const double a0 = 1.6;
  const int M = 8, N = 6;
  ProblemSpec p = make_example_problem("example1", a0, M);
  p.profile = make_profile("constant", a0);
  const double tau = p.T / N;
  const double abar = a0 - 1.0;

  Tables tables;
  tables.kernel = build_kernel_table(p.profile, N, p.T);
  tables.cq = build_cq_table(abar, N);
  tables.pi = build_pi_table(abar, N, tau);
  CHECK(tables.kernel.c0 == 1.0);
  for (double w : tables.kernel.wtilde) CHECK(w == 0.0);

  const Trajectory tf = run_solver(p, SchemeTag::f2oacd, N);
  const Trajectory ta = run_solver(p, SchemeTag::a2oacd, N);

  // independent constant-order CN + trapezoidal-CQ ADI stepper
  {
    Field2D u0f = p.sample(p.u0);
    u0f.zero_boundary();
    const Field2D lap0 = p.sample(p.lap_u0);
    const Field2D ubar = p.sample(p.u0bar);
    const double eta0 = std::pow(tau, abar + 1.0) * tables.cq.chi[0] / 2.0;
    std::vector<Field2D> lam{apply_lambda_h(Field2D(p.grid))};
    std::vector<Field2D> ut{Field2D(p.grid)};
    for (int n = 1; n <= N; ++n) {
      Field2D rhs(p.grid);
      axpy(rhs, eta0, lam[n - 1]);
      const double tpow = std::pow(tau, abar + 1.0);
      for (int q = 0; q < n; ++q) axpy(rhs, tpow * tables.cq.chi_hat[n - q], lam[q]);
      auto Fat = [&](int lvl) {
        Field2D f = lap0;
        scale(f, std::pow(lvl * tau, abar) / gamma_fn(abar + 1.0));
        axpy(f, 1.0, ubar);  // g == 1
        return f;
      };
      Field2D fh = Fat(n);
      axpy(fh, 1.0, Fat(n - 1));
      scale(fh, 0.5);
      axpy(rhs, tau, apply_ah(fh));
      const Field2D e = adi_sweep(rhs, eta0, 1.0);
      Field2D next = ut[n - 1];
      axpy(next, 1.0, e);
      next.zero_boundary();
      lam.push_back(apply_lambda_h(next));
      ut.push_back(next);
    }
    for (int n = 0; n <= N; ++n) {
      Field2D phys = ut[n];
      axpy(phys, 1.0, u0f);
      double dev = 0.0;
      for (std::size_t k = 0; k < phys.v.size(); ++k)
        dev = std::max(dev, std::abs(phys.v[k] - tf.u[n].v[k]));
      CHECK(dev <= 1e-12);
    }
  }

  // independent constant-order averaged-PI ADI stepper
  {
    Field2D u0f = p.sample(p.u0);
    u0f.zero_boundary();
    const Field2D ubar = p.sample(p.u0bar);
    std::vector<Field2D> lam{apply_lambda_h(u0f)};
    std::vector<Field2D> uh{u0f};
    for (int n = 1; n <= N; ++n) {
      Field2D rhs(p.grid);
      auto row = tables.pi.row(n);
      if (n == 1) {
        axpy(rhs, tau * row[0], lam[0]);
      } else {
        axpy(rhs, tau * row[n - 1], lam[n - 1]);
        axpy(rhs, tau * row[0], lam[1]);
        for (int k = 2; k < n; ++k) {
          axpy(rhs, 0.5 * tau * row[k - 1], lam[k]);
          axpy(rhs, 0.5 * tau * row[k - 1], lam[k - 1]);
        }
      }
      axpy(rhs, tau, apply_ah(ubar));  // g == 1: the step average of g u0bar
      const double eta = (n == 1) ? tau * row[0] : 0.5 * tau * tables.pi.lambda(n, n);
      const Field2D e = adi_sweep(rhs, eta, 1.0);
      Field2D next = uh[n - 1];
      axpy(next, 1.0, e);
      next.zero_boundary();
      lam.push_back(apply_lambda_h(next));
      uh.push_back(next);
    }
    for (int n = 0; n <= N; ++n) {
      double dev = 0.0;
      for (std::size_t k = 0; k < uh[n].v.size(); ++k)
        dev = std::max(dev, std::abs(uh[n].v[k] - ta.u[n].v[k]));
      CHECK(dev <= 1e-12);
    }
  }
}

TEST_CASE("history caches stay coherent with the stored levels") {
  const ProblemSpec p = make_example_problem("example2", 1.4, 8);
  const int N = 5;
  Tables tables;
  tables.kernel = build_kernel_table(p.profile, N, p.T);
  tables.cq = build_cq_table(p.profile.abar, N);
  RhsEvaluator ev(p, tables.kernel);
  AdiWorkspace ws;
  StepContext ctx{p, tables, ev, p.T / N, ws, 0, 1e-12, 50000, nullptr};
  SchemeState st = init_state(SchemeTag::f2oacd, p, ev);
  for (int n = 1; n <= N; ++n) f2oacd_step(st, ctx);
  std::mt19937_64 rng(9);
  const int k = 1 + static_cast<int>(rng() % N);
  const Field2D fresh_lam = apply_lambda_h(st.u[k]);
  for (std::size_t i = 0; i < fresh_lam.v.size(); ++i)
    CHECK(fresh_lam.v[i] == st.lam_u[k].v[i]);
  Field2D incr = st.u[k];
  axpy(incr, -1.0, st.u[k - 1]);
  const Field2D fresh_ah = apply_ah(incr);
  for (std::size_t i = 0; i < fresh_ah.v.size(); ++i)
    CHECK(fresh_ah.v[i] == doctest::Approx(st.ah_incr[k - 1].v[i]).epsilon(1e-12));
}

TEST_CASE("adi and standard solutions approach each other under refinement") {
  double prev = -1.0;
  for (int N : {8, 16, 32}) {
    const ProblemSpec p = make_example_problem("example2", 1.5, 8);
    const Trajectory adi = run_solver(p, SchemeTag::f2oacd, N);
    const Trajectory std_ = run_solver(p, SchemeTag::f2oscd, N);
    Field2D d = adi.u.back();
    axpy(d, -1.0, std_.u.back());
    const double gap = norm_l2(d);
    if (prev >= 0.0) CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("mutual consistency: the two ADI schemes converge together") {
  // || U_f2oacd^N - U_a2oacd^N || at T must shrink at rate >= min(alpha0,2)-0.2
  const double a0 = 1.5;
  const int M = 16;
  std::vector<double> gaps;
  const std::vector<int> ladder{64, 128, 256, 512};
  for (int N : ladder) {
    const ProblemSpec p = make_example_problem("example1", a0, M);
    const Trajectory f = run_solver(p, SchemeTag::f2oacd, N);
    const Trajectory a = run_solver(p, SchemeTag::a2oacd, N);
    Field2D d = f.u.back();
    axpy(d, -1.0, a.u.back());
    gaps.push_back(norm_l2(d));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(ladder.size());
  for (int i = 0; i < n; ++i) {
    const double x = std::log2(static_cast<double>(ladder[i]));
    const double y = std::log2(gaps[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(-slope >= std::min(a0, 2.0) - 0.2);
}

TEST_CASE("rhs evaluator: closed forms and quadrature paths") {
  const ProblemSpec p = make_example_problem("example1", 1.5, 8);
  const int N = 4;
  const IdentityKernelTable kernel = build_kernel_table(p.profile, N, p.T);
  const RhsEvaluator ev(p, kernel);

  // t = 0: F = u0bar exactly
  const Field2D f0 = ev.eval_F(0.0);
  const Field2D ub = p.sample(p.u0bar);
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j)
      CHECK(f0.at(i, j) == doctest::Approx(ub.at(i, j)).epsilon(1e-14));

  // t = 1 closed form: -2 pi^2 u0 / Gamma(1.5) + g(1) u0bar
  const Field2D f1 = ev.eval_F(1.0);
  const double g1 = 0.93898300239900873809920778032133245776369577036051;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      const double x = p.grid.x(i), y = p.grid.y(j);
      const double expected =
          -2.0 * M_PI * M_PI * std::sin(M_PI * x) * std::sin(M_PI * y) / gamma_fn(1.5) +
          g1 * std::sin(2 * M_PI * x) * std::sin(2 * M_PI * y);
      CHECK(f1.at(i, j) == doctest::Approx(expected).epsilon(1e-9));
    }

  // level path agrees with the pointwise path at mesh times
  for (int n = 0; n <= N; ++n) {
    const Field2D a = ev.eval_F(kernel.times[n]);
    const Field2D b = ev.eval_F_level(n);
    for (std::size_t k = 0; k < a.v.size(); ++k)
      CHECK(a.v[k] == doctest::Approx(b.v[k]).epsilon(1e-12));
  }

  // Fbar with f == 0 is the exact step average of g times u0bar
  const Field2D fb = ev.eval_Fbar(2);
  const double tau = p.T / N;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j)
      CHECK(fb.at(i, j) ==
            doctest::Approx(kernel.g_step_integrals[2] / tau * ub.at(i, j)).epsilon(1e-13));
}

TEST_CASE("rhs evaluator: manufactured source against monomial convolution") {
  ProblemSpec p = make_example_problem("example2", 1.4, 6);
  const double abar = p.profile.abar;
  auto phi = [](double x, double y) {
    return std::sin(M_PI * x) * std::sin(2.0 * M_PI * y);
  };
  p.f = [phi](double x, double y, double t) { return phi(x, y) * t * t; };
  p.f_is_zero = false;
  const int N = 4;
  const IdentityKernelTable kernel = build_kernel_table(p.profile, N, p.T);
  const RhsEvaluator ev(p, kernel, 48);

  // beta_abar * (phi t^2) = phi * Gamma(3) t^{2+abar} / Gamma(3+abar)
  const double t = 0.75;
  const Field2D got = ev.eval_F(t);
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) {
      const double x = p.grid.x(i), y = p.grid.y(j);
      const double expected =
          p.lap_u0(x, y) * std::pow(t, abar) / gamma_fn(abar + 1.0) +
          phi(x, y) * oracles::frac_integral_monomial(abar, 2.0, t);
      CHECK(got.at(i, j) == doctest::Approx(expected).epsilon(1e-10));
    }

  // constant-in-time source: Fbar closed form
  ProblemSpec pc = make_example_problem("example2", 1.4, 6);
  pc.f = [phi](double x, double y, double) { return phi(x, y); };
  pc.f_is_zero = false;
  const IdentityKernelTable kc = build_kernel_table(pc.profile, N, pc.T);
  const RhsEvaluator evc(pc, kc, 48, 12);
  const int n = 3;
  const double tau = pc.T / N;
  const Field2D fbar = evc.eval_Fbar(n);
  const double tn = n * tau, tn1 = (n - 1) * tau;
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) {
      const double x = pc.grid.x(i), y = pc.grid.y(j);
      const double expected = phi(x, y) *
                              (std::pow(tn, abar + 1.0) - std::pow(tn1, abar + 1.0)) /
                              (tau * gamma_fn(abar + 2.0));
      CHECK(fbar.at(i, j) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("deterministic trajectories for a fixed configuration") {
  const ProblemSpec p = make_example_problem("example1", 1.7, 8);
  const Trajectory t1 = run_solver(p, SchemeTag::a2oacd, 6);
  const Trajectory t2 = run_solver(p, SchemeTag::a2oacd, 6);
  for (std::size_t n = 0; n < t1.u.size(); ++n)
    for (std::size_t k = 0; k < t1.u[n].v.size(); ++k)
      CHECK(t1.u[n].v[k] == t2.u[n].v[k]);
}
