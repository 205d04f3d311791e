#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vexwave/study.hpp"

namespace vexwave {

/// Schema violation; `path` names the offending field (e.g. "schemes[1]").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct Config {
  std::string example = "example1";
  std::vector<SchemeTag> schemes;
  std::vector<double> alpha0_values;
  std::vector<int> N_ladder;
  std::vector<int> M_ladder;
  double T = 1.0;
  SolverOptions options;
  std::string out_path;      // empty = stdout
  std::string format = "csv";

  // bench block
  int bench_N = 32;
  double bench_alpha0 = 1.3;
  std::vector<int> bench_M_ladder{64, 128, 256};
  int bench_repeats = 3;

  std::string hash;  // FNV-1a of the canonical serialized form
};

Config parse_config(const std::string& path);
Config parse_config_text(const std::string& json_text);

/// Deterministic emission; `seconds` is the only column that may differ
/// between identical runs.
void emit(const ConvergenceTable& table, const std::string& path, const std::string& format);
std::string emit_to_string(const ConvergenceTable& table, const std::string& format);
void emit_records(const std::vector<RunRecord>& rows, ConvergenceTable::Axis axis,
                  const std::string& path, const std::string& format);

/// Inverse of emit, for round-trip checks and downstream tooling.
ConvergenceTable parse_table_text(const std::string& text, const std::string& format);

/// Plain-text rendering with the "*" convention on coarsest rows.
std::string pretty_table(const ConvergenceTable& table);

/// CSV of a field snapshot: "x,y,value" rows.
std::string field_csv(const Field2D& u);

}  // namespace vexwave
