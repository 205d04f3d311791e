#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vexwave/config.hpp"
#include "vexwave/operators.hpp"
#include "vexwave/special.hpp"
#include "vexwave/study.hpp"

namespace py = pybind11;
using namespace vexwave;

namespace {

py::array_t<double> field_to_array(const Field2D& f) {
  const int n1 = f.grid.m1 + 1, n2 = f.grid.m2 + 1;
  py::array_t<double> arr({n1, n2});
  auto r = arr.mutable_unchecked<2>();
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) r(i, j) = f.at(i, j);
  return arr;
}

SchemeTag tag_of(const std::string& s) {
  const auto t = scheme_from_string(s);
  if (!t) throw std::invalid_argument("unknown scheme tag '" + s + "'");
  return *t;
}

SolverOptions options_of(int jacobi_nodes, int avg_nodes, int conv_nodes, int threads) {
  SolverOptions o;
  o.jacobi_nodes = jacobi_nodes;
  o.avg_nodes = avg_nodes;
  o.conv_nodes = conv_nodes;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ADI compact finite-difference solvers for 2-D variable-exponent "
            "diffusion-wave equations";

  m.def("gamma", &gamma_fn, py::arg("x"), "Gamma function for x > 0");

  m.def(
      "gauss_jacobi",
      [](int n, double a, double b) {
        const QuadratureRule r = gauss_jacobi(n, a, b);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("n"), py::arg("a"), py::arg("b"),
      "Nodes and weights on (0,1) for weight (1-z)^a z^b");

  m.def(
      "gauss_legendre",
      [](int n) {
        const QuadratureRule r = gauss_legendre(n);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("n"), "Nodes and weights on (-1,1)");

  m.def(
      "eval_g",
      [](const std::string& profile, double alpha0, double t, int nodes) {
        const ExponentProfile p = make_profile(profile, alpha0);
        const QuadratureRule rule = gauss_jacobi(nodes, alpha0 - 2.0, 1.0 - alpha0);
        return eval_g(p, t, rule);
      },
      py::arg("profile"), py::arg("alpha0"), py::arg("t"), py::arg("nodes") = 64,
      "Generalized identity function g(t)");

  m.def(
      "kernel_table",
      [](const std::string& profile, double alpha0, int N, double T, int jacobi_nodes,
         int avg_nodes) {
        const IdentityKernelTable t =
            build_kernel_table(make_profile(profile, alpha0), N, T, jacobi_nodes, avg_nodes);
        py::dict d;
        d["times"] = t.times;
        d["g"] = t.g_vals;
        d["g_step_integrals"] = t.g_step_integrals;
        d["w"] = t.w;
        d["wtilde"] = t.wtilde;
        d["c0"] = t.c0;
        return d;
      },
      py::arg("profile"), py::arg("alpha0"), py::arg("N"), py::arg("T") = 1.0,
      py::arg("jacobi_nodes") = 64, py::arg("avg_nodes") = 4);

  m.def(
      "cq_table",
      [](double abar, int N) {
        const CQWeightTable t = build_cq_table(abar, N);
        py::dict d;
        d["chi"] = t.chi;
        d["rho"] = t.rho;
        d["chi_hat"] = t.chi_hat;
        d["rho_hat"] = t.rho_hat;
        return d;
      },
      py::arg("abar"), py::arg("N"));

  m.def(
      "pi_table",
      [](double abar, int N, double tau) {
        const PIWeightTable t = build_pi_table(abar, N, tau);
        py::list rows;
        for (int n = 1; n <= N; ++n) {
          auto r = t.row(n);
          rows.append(std::vector<double>(r.begin(), r.end()));
        }
        return rows;
      },
      py::arg("abar"), py::arg("N"), py::arg("tau"),
      "Lower-triangular lambda rows, row n has n entries");

  m.def(
      "solve",
      [](const std::string& example, const std::string& scheme, double alpha0, int N, int M,
         double T, int jacobi_nodes, int avg_nodes, int conv_nodes, int threads,
         bool trajectory) {
        const ProblemSpec spec = make_example_problem(example, alpha0, M, T);
        const Trajectory traj = run_solver(spec, tag_of(scheme), N,
                                           options_of(jacobi_nodes, avg_nodes, conv_nodes,
                                                      threads));
        py::dict d;
        d["u_final"] = field_to_array(traj.u.back());
        if (trajectory) {
          py::list levels;
          for (const auto& f : traj.u) levels.append(field_to_array(f));
          d["u"] = levels;
        }
        py::dict timing;
        timing["weights_s"] = traj.timing.weights_s;
        timing["rhs_s"] = traj.timing.rhs_s;
        timing["solves_s"] = traj.timing.solves_s;
        timing["stepping_s"] = traj.timing.stepping_s;
        timing["total_s"] = traj.timing.total_s;
        d["timing"] = timing;
        return d;
      },
      py::arg("example"), py::arg("scheme"), py::arg("alpha0"), py::arg("N"), py::arg("M"),
      py::arg("T") = 1.0, py::arg("jacobi_nodes") = 64, py::arg("avg_nodes") = 4,
      py::arg("conv_nodes") = 32, py::arg("threads") = 0, py::arg("trajectory") = false,
      "Run one scheme; returns the final field (and optionally the whole trajectory)");

  m.def(
      "two_mesh_time_error",
      [](const std::string& example, const std::string& scheme, double alpha0, int N, int M,
         double T) {
        StudyProblem p{example, alpha0, T};
        return two_mesh_time_error(p, tag_of(scheme), N, M);
      },
      py::arg("example"), py::arg("scheme"), py::arg("alpha0"), py::arg("N"), py::arg("M"),
      py::arg("T") = 1.0);

  m.def(
      "two_mesh_space_error",
      [](const std::string& example, const std::string& scheme, double alpha0, int N, int M,
         double T) {
        StudyProblem p{example, alpha0, T};
        return two_mesh_space_error(p, tag_of(scheme), N, M);
      },
      py::arg("example"), py::arg("scheme"), py::arg("alpha0"), py::arg("N"), py::arg("M"),
      py::arg("T") = 1.0);

  m.def("rate", &rate, py::arg("err_coarse"), py::arg("err_fine"),
        "log2(err_coarse / err_fine)");
}
