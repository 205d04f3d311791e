#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vexwave/schemes.hpp"

namespace vexwave {

/// Logical problem for a study: registry example + exponent base value.
struct StudyProblem {
  std::string example = "example1";
  double alpha0 = 1.5;
  double T = 1.0;
};

struct RunRecord {
  std::string scheme;
  double alpha0 = 0.0;
  int N = 0;
  int M = 0;
  double error = 0.0;
  std::optional<double> rate;  // empty on the coarsest row of a study
  double seconds = 0.0;
  std::string config_hash;
};

struct ConvergenceTable {
  enum class Axis { time, space };
  Axis axis = Axis::time;
  std::vector<RunRecord> rows;
};

/// Trajectory cache so a refinement ladder reuses runs shared between rows.
class RunCache {
 public:
  const Trajectory& get(const StudyProblem& p, SchemeTag tag, int N, int M,
                        const SolverOptions& opt);
  void clear() { cache_.clear(); }

 private:
  std::map<std::tuple<std::string, double, std::string, int, int>, Trajectory> cache_;
};

/// E(tau,h): run at N and 2N on the same grid, max over shared times of the
/// discrete L2 difference.
double two_mesh_time_error(const StudyProblem& p, SchemeTag tag, int N, int M,
                           const SolverOptions& opt = {}, RunCache* cache = nullptr);

/// S(tau,h): run at M and 2M with fixed N, final-time difference at
/// coinciding nodes (2i,2j).
double two_mesh_space_error(const StudyProblem& p, SchemeTag tag, int N, int M,
                            const SolverOptions& opt = {}, RunCache* cache = nullptr);

/// log2(coarse/fine); both inputs must be positive.
double rate(double err_coarse, double err_fine);

struct StudyConfig {
  StudyProblem problem;
  std::vector<SchemeTag> schemes;
  std::vector<double> alpha0_values;
  std::vector<int> N_ladder;  // time axis: refined ladder; space axis: fixed N = N_ladder[0]
  std::vector<int> M_ladder;  // time axis: fixed M = M_ladder[0]; space axis: ladder
  ConvergenceTable::Axis axis = ConvergenceTable::Axis::time;
  SolverOptions options;
  std::string config_hash;
};

ConvergenceTable run_convergence_study(const StudyConfig& cfg);

struct BenchConfig {
  StudyProblem problem;
  int N = 32;
  std::vector<int> M_ladder;
  int repeats = 3;
  SolverOptions options;  // forced serial
  std::string config_hash;
};

/// Wall-clock of the stepping loop (tables excluded), median of `repeats`,
/// for each of the four schemes at each M.
std::vector<RunRecord> run_benchmark(const BenchConfig& cfg);

}  // namespace vexwave
