#include "vexwave/study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "vexwave/operators.hpp"

namespace vexwave {

const Trajectory& RunCache::get(const StudyProblem& p, SchemeTag tag, int N, int M,
                                const SolverOptions& opt) {
  const auto key = std::make_tuple(p.example, p.alpha0, to_string(tag), N, M);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const ProblemSpec spec = make_example_problem(p.example, p.alpha0, M, p.T);
    it = cache_.emplace(key, run_solver(spec, tag, N, opt)).first;
  }
  return it->second;
}

namespace {
double l2_diff_same_grid(const Field2D& a, const Field2D& b) {
  const int m1 = a.grid.m1, m2 = a.grid.m2;
  double s = 0.0;
  for (int i = 1; i < m1; ++i)
    for (int j = 1; j < m2; ++j) {
      const double d = a.at(i, j) - b.at(i, j);
      s += d * d;
    }
  return std::sqrt(a.grid.h1() * a.grid.h2() * s);
}
}  // namespace

double two_mesh_time_error(const StudyProblem& p, SchemeTag tag, int N, int M,
                           const SolverOptions& opt, RunCache* cache) {
  if (N < 1) throw std::invalid_argument("two_mesh_time_error: N must be >= 1");
  RunCache local;
  RunCache& c = cache ? *cache : local;
  const Trajectory& coarse = c.get(p, tag, N, M, opt);
  const Trajectory& fine = c.get(p, tag, 2 * N, M, opt);
  double e = 0.0;
  for (int n = 0; n <= N; ++n)
    e = std::max(e, l2_diff_same_grid(coarse.u[n], fine.u[2 * n]));
  return e;
}

double two_mesh_space_error(const StudyProblem& p, SchemeTag tag, int N, int M,
                            const SolverOptions& opt, RunCache* cache) {
  if (M < 2) throw std::invalid_argument("two_mesh_space_error: M must be >= 2");
  RunCache local;
  RunCache& c = cache ? *cache : local;
  const Field2D& uc = c.get(p, tag, N, M, opt).u.back();
  const Field2D& uf = c.get(p, tag, N, 2 * M, opt).u.back();
  double s = 0.0;
  for (int i = 1; i < M; ++i)
    for (int j = 1; j < M; ++j) {
      const double d = uc.at(i, j) - uf.at(2 * i, 2 * j);
      s += d * d;
    }
  return std::sqrt(uc.grid.h1() * uc.grid.h2() * s);
}

double rate(double err_coarse, double err_fine) {
  if (!(err_coarse > 0.0) || !(err_fine > 0.0))
    throw std::domain_error("rate: errors must be positive");
  return std::log2(err_coarse / err_fine);
}

ConvergenceTable run_convergence_study(const StudyConfig& cfg) {
  ConvergenceTable table;
  table.axis = cfg.axis;
  RunCache cache;
  for (SchemeTag tag : cfg.schemes) {
    for (double a0 : cfg.alpha0_values) {
      StudyProblem p = cfg.problem;
      p.alpha0 = a0;
      std::optional<double> prev_err;
      const auto& ladder =
          (cfg.axis == ConvergenceTable::Axis::time) ? cfg.N_ladder : cfg.M_ladder;
      for (std::size_t r = 0; r < ladder.size(); ++r) {
        RunRecord rec;
        rec.scheme = to_string(tag);
        rec.alpha0 = a0;
        rec.config_hash = cfg.config_hash;
        const auto t0 = std::chrono::steady_clock::now();
        if (cfg.axis == ConvergenceTable::Axis::time) {
          rec.N = ladder[r];
          rec.M = cfg.M_ladder.empty() ? 16 : cfg.M_ladder.front();
          rec.error = two_mesh_time_error(p, tag, rec.N, rec.M, cfg.options, &cache);
        } else {
          rec.N = cfg.N_ladder.empty() ? 32 : cfg.N_ladder.front();
          rec.M = ladder[r];
          rec.error = two_mesh_space_error(p, tag, rec.N, rec.M, cfg.options, &cache);
        }
        rec.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (prev_err && rec.error > 0.0 && *prev_err > 0.0)
          rec.rate = rate(*prev_err, rec.error);
        prev_err = rec.error;
        table.rows.push_back(std::move(rec));
      }
      cache.clear();  // ladders for different alpha0 share nothing
    }
  }
  return table;
}

std::vector<RunRecord> run_benchmark(const BenchConfig& cfg) {
  std::vector<RunRecord> out;
  SolverOptions opt = cfg.options;
  opt.threads = 0;  // timings comparable only when serial
  for (int M : cfg.M_ladder) {
    for (SchemeTag tag :
         {SchemeTag::f2oscd, SchemeTag::f2oacd, SchemeTag::a2oscd, SchemeTag::a2oacd}) {
      const ProblemSpec spec = make_example_problem(cfg.problem.example, cfg.problem.alpha0,
                                                    M, cfg.problem.T);
      std::vector<double> times;
      for (int r = 0; r < std::max(1, cfg.repeats); ++r)
        times.push_back(run_solver(spec, tag, cfg.N, opt).timing.stepping_s);
      std::sort(times.begin(), times.end());
      RunRecord rec;
      rec.scheme = to_string(tag);
      rec.alpha0 = cfg.problem.alpha0;
      rec.N = cfg.N;
      rec.M = M;
      rec.error = 0.0;
      rec.seconds = times[times.size() / 2];
      rec.config_hash = cfg.config_hash;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace vexwave
