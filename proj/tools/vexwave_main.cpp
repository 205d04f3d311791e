// Command line front end: single runs, convergence studies, the ADI-vs-standard
// benchmark, and weight-table dumps.
//
// Exit codes: 0 success, 2 config error, 3 solver failure.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vexwave/config.hpp"
#include "vexwave/operators.hpp"
#include "vexwave/special.hpp"

using namespace vexwave;

namespace {

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

StudyConfig study_config_from(const Config& c, ConvergenceTable::Axis axis) {
  StudyConfig s;
  s.problem.example = c.example;
  s.problem.T = c.T;
  s.schemes = c.schemes;
  s.alpha0_values = c.alpha0_values;
  s.N_ladder = c.N_ladder;
  s.M_ladder = c.M_ladder;
  s.axis = axis;
  s.options = c.options;
  s.config_hash = c.hash;
  return s;
}

int run_solve(const Config& c, const std::string& out_path, const std::string& format) {
  const ProblemSpec spec =
      make_example_problem(c.example, c.alpha0_values.front(), c.M_ladder.front(), c.T);
  const SchemeTag tag = c.schemes.front();
  const Trajectory traj = run_solver(spec, tag, c.N_ladder.front(), c.options);
  const Field2D& uN = traj.u.back();
  std::fprintf(stderr,
               "solve %s example=%s alpha0=%.3f N=%d M=%d  |U^N|_L2=%.6e  "
               "(tables %.3fs, stepping %.3fs, total %.3fs)\n",
               to_string(tag).c_str(), c.example.c_str(), c.alpha0_values.front(),
               c.N_ladder.front(), c.M_ladder.front(), norm_l2(uN), traj.timing.weights_s,
               traj.timing.stepping_s, traj.timing.total_s);
  if (!out_path.empty() || format == "csv") write_or_print(field_csv(uN), out_path);
  (void)format;
  return 0;
}

int run_converge(const Config& c, ConvergenceTable::Axis axis, const std::string& out_path,
                 const std::string& format) {
  const ConvergenceTable table = run_convergence_study(study_config_from(c, axis));
  std::cerr << pretty_table(table);
  write_or_print(emit_to_string(table, format), out_path);
  return 0;
}

int run_bench(const Config& c, const std::string& out_path, const std::string& format) {
  BenchConfig bc;
  bc.problem.example = c.example;
  bc.problem.alpha0 = c.bench_alpha0;
  bc.problem.T = c.T;
  bc.N = c.bench_N;
  bc.M_ladder = c.bench_M_ladder;
  bc.repeats = c.bench_repeats;
  bc.options = c.options;
  bc.config_hash = c.hash;
  const std::vector<RunRecord> rows = run_benchmark(bc);
  emit_records(rows, ConvergenceTable::Axis::space, out_path.empty() ? "/dev/stdout" : out_path,
               format);

  // ADI must beat its standard counterpart at the largest M
  if (!bc.M_ladder.empty()) {
    const int Mmax = *std::max_element(bc.M_ladder.begin(), bc.M_ladder.end());
    double t_f2oacd = 0, t_f2oscd = 0, t_a2oacd = 0, t_a2oscd = 0;
    for (const auto& r : rows) {
      if (r.M != Mmax) continue;
      if (r.scheme == "f2oacd") t_f2oacd = r.seconds;
      if (r.scheme == "f2oscd") t_f2oscd = r.seconds;
      if (r.scheme == "a2oacd") t_a2oacd = r.seconds;
      if (r.scheme == "a2oscd") t_a2oscd = r.seconds;
    }
    if (!(t_f2oacd < t_f2oscd && t_a2oacd < t_a2oscd)) {
      std::cerr << "bench: ADI schemes not faster than standard at M=" << Mmax << "\n";
      return 3;
    }
  }
  return 0;
}

int run_weights(const std::string& table_name, double alpha0, int N, double T,
                const std::string& example, int row, int jacobi_nodes,
                const std::string& out_path) {
  const double abar = alpha0 - 1.0;
  const double tau = T / N;
  std::string out = "index,value\n";
  char buf[64];
  auto emit_series = [&](const std::vector<double>& v, int first_index) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g\n", k + first_index, v[k]);
      out += buf;
    }
  };

  if (table_name == "chi" || table_name == "rho" || table_name == "chi-hat" ||
      table_name == "rho-hat") {
    const CQWeightTable t = build_cq_table(abar, N);
    if (table_name == "chi") emit_series(t.chi, 0);
    if (table_name == "rho") emit_series(t.rho, 0);
    if (table_name == "chi-hat")
      emit_series(std::vector<double>(t.chi_hat.begin() + 1, t.chi_hat.end()), 1);
    if (table_name == "rho-hat")
      emit_series(std::vector<double>(t.rho_hat.begin() + 1, t.rho_hat.end()), 1);
  } else if (table_name == "lambda") {
    const PIWeightTable t = build_pi_table(abar, N, tau);
    const int n = (row <= 0) ? N : row;
    if (n > N) throw ConfigError("row", "row exceeds N");
    auto r = t.row(n);
    for (int j = 1; j <= n; ++j) {
      std::snprintf(buf, sizeof buf, "%d,%.17g\n", j, r[j - 1]);
      out += buf;
    }
  } else if (table_name == "g" || table_name == "w" || table_name == "wtilde" ||
             table_name == "g-int") {
    const ExponentProfile prof = make_profile(example, alpha0);
    const IdentityKernelTable t = build_kernel_table(prof, N, T, jacobi_nodes);
    if (table_name == "g") emit_series(t.g_vals, 0);
    if (table_name == "w") emit_series(t.w, 0);
    if (table_name == "wtilde") emit_series(t.wtilde, 0);
    if (table_name == "g-int")
      emit_series(std::vector<double>(t.g_step_integrals.begin() + 1,
                                      t.g_step_integrals.end()),
                  1);
  } else {
    throw ConfigError("table", "unknown table '" + table_name + "'");
  }
  write_or_print(out, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ADI compact finite-difference solver for 2-D variable-exponent "
               "diffusion-wave equations"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "csv";
  int threads = -1;       // -1: keep config value
  int jacobi_nodes = -1;  // -1: keep config value

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config_path, "JSON config file");
    if (needs_config) opt->required();
    sub->add_option("--out", out_path, "output path (default: stdout)");
    sub->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", threads, "worker threads for line solves (0 = serial)");
    sub->add_option("--jacobi-nodes", jacobi_nodes, "gauss-jacobi nodes for g evaluation");
  };

  CLI::App* solve = app.add_subcommand("solve", "single run, optional field snapshot CSV");
  add_common(solve, true);
  CLI::App* ct = app.add_subcommand("converge-time", "two-mesh temporal convergence table");
  add_common(ct, true);
  CLI::App* cs = app.add_subcommand("converge-space", "two-mesh spatial convergence table");
  add_common(cs, true);
  CLI::App* bench = app.add_subcommand("bench", "ADI vs standard wall-clock comparison");
  add_common(bench, true);

  CLI::App* weights = app.add_subcommand("weights", "dump a weight table as CSV");
  std::string table_name = "chi", example = "example1";
  double alpha0 = 1.5;
  double T = 1.0;
  int N = 32, row = 0;
  weights->add_option("--table", table_name,
                      "chi|rho|chi-hat|rho-hat|lambda|g|w|wtilde|g-int");
  weights->add_option("--alpha0", alpha0, "exponent base value in (1,2)");
  weights->add_option("--N", N, "number of time steps");
  weights->add_option("--T", T, "final time");
  weights->add_option("--example", example, "profile for g tables");
  weights->add_option("--row", row, "lambda row n (default N)");
  weights->add_option("--out", out_path, "output path (default: stdout)");
  weights->add_option("--jacobi-nodes", jacobi_nodes, "gauss-jacobi nodes for g evaluation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (weights->parsed()) {
      if (!(alpha0 > 1.0 && alpha0 < 2.0))
        throw ConfigError("alpha0", "must lie in (1,2)");
      if (N < 1) throw ConfigError("N", "must be >= 1");
      return run_weights(table_name, alpha0, N, T, example, row,
                         jacobi_nodes > 0 ? jacobi_nodes : 64, out_path);
    }
    Config cfg = parse_config(config_path);
    if (threads >= 0) cfg.options.threads = threads;
    if (jacobi_nodes > 0) cfg.options.jacobi_nodes = jacobi_nodes;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (format != "csv") cfg.format = format;
    if (solve->parsed()) return run_solve(cfg, cfg.out_path, cfg.format);
    if (ct->parsed())
      return run_converge(cfg, ConvergenceTable::Axis::time, cfg.out_path, cfg.format);
    if (cs->parsed())
      return run_converge(cfg, ConvergenceTable::Axis::space, cfg.out_path, cfg.format);
    if (bench->parsed()) return run_bench(cfg, cfg.out_path, cfg.format);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
