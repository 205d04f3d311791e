#include "vexwave/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vexwave {

using nlohmann::json;

namespace {

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
T require(const json& j, const std::string& path, const char* type_name) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path, std::string("expected ") + type_name);
  }
}

std::vector<double> number_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(require<double>(j[i], path + "[" + std::to_string(i) + "]", "number"));
  return out;
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(require<int>(j[i], path + "[" + std::to_string(i) + "]", "integer"));
  return out;
}

}  // namespace

Config parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("<document>", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("<document>", "top level must be an object");

  static const char* known[] = {"example", "schemes",      "alpha0",  "N",
                                "M",       "T",            "jacobi_nodes", "avg_nodes",
                                "conv_nodes", "threads",   "cg_tol",  "out",
                                "format",  "bench"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw ConfigError(it.key(), "unknown field");
  }

  Config c;
  if (j.contains("example")) {
    c.example = require<std::string>(j["example"], "example", "string");
    if (c.example != "example1" && c.example != "example2")
      throw ConfigError("example", "unknown example id '" + c.example + "'");
  }
  if (j.contains("schemes")) {
    if (!j["schemes"].is_array()) throw ConfigError("schemes", "expected an array");
    for (std::size_t i = 0; i < j["schemes"].size(); ++i) {
      const std::string path = "schemes[" + std::to_string(i) + "]";
      const auto s = require<std::string>(j["schemes"][i], path, "string");
      const auto tag = scheme_from_string(s);
      if (!tag) throw ConfigError(path, "unknown scheme tag '" + s + "'");
      c.schemes.push_back(*tag);
    }
  }
  if (c.schemes.empty()) throw ConfigError("schemes", "at least one scheme tag required");

  if (j.contains("alpha0")) {
    c.alpha0_values = j["alpha0"].is_array()
                          ? number_list(j["alpha0"], "alpha0")
                          : std::vector<double>{require<double>(j["alpha0"], "alpha0", "number")};
  }
  if (c.alpha0_values.empty()) throw ConfigError("alpha0", "at least one value required");
  for (std::size_t i = 0; i < c.alpha0_values.size(); ++i)
    if (!(c.alpha0_values[i] > 1.0 && c.alpha0_values[i] < 2.0))
      throw ConfigError("alpha0[" + std::to_string(i) + "]", "must lie in (1,2)");

  if (j.contains("N"))
    c.N_ladder = j["N"].is_array() ? int_list(j["N"], "N")
                                   : std::vector<int>{require<int>(j["N"], "N", "integer")};
  if (c.N_ladder.empty()) throw ConfigError("N", "at least one value required");
  for (std::size_t i = 0; i < c.N_ladder.size(); ++i)
    if (c.N_ladder[i] < 1) throw ConfigError("N[" + std::to_string(i) + "]", "must be >= 1");

  if (j.contains("M"))
    c.M_ladder = j["M"].is_array() ? int_list(j["M"], "M")
                                   : std::vector<int>{require<int>(j["M"], "M", "integer")};
  if (c.M_ladder.empty()) throw ConfigError("M", "at least one value required");
  for (std::size_t i = 0; i < c.M_ladder.size(); ++i)
    if (c.M_ladder[i] < 2) throw ConfigError("M[" + std::to_string(i) + "]", "must be >= 2");

  if (j.contains("T")) {
    c.T = require<double>(j["T"], "T", "number");
    if (!(c.T > 0.0)) throw ConfigError("T", "must be positive");
  }
  if (j.contains("jacobi_nodes")) {
    c.options.jacobi_nodes = require<int>(j["jacobi_nodes"], "jacobi_nodes", "integer");
    if (c.options.jacobi_nodes < 1) throw ConfigError("jacobi_nodes", "must be >= 1");
  }
  if (j.contains("avg_nodes")) {
    c.options.avg_nodes = require<int>(j["avg_nodes"], "avg_nodes", "integer");
    if (c.options.avg_nodes < 1) throw ConfigError("avg_nodes", "must be >= 1");
  }
  if (j.contains("conv_nodes")) {
    c.options.conv_nodes = require<int>(j["conv_nodes"], "conv_nodes", "integer");
    if (c.options.conv_nodes < 1) throw ConfigError("conv_nodes", "must be >= 1");
  }
  if (j.contains("threads")) {
    c.options.threads = require<int>(j["threads"], "threads", "integer");
    if (c.options.threads < 0) throw ConfigError("threads", "must be >= 0");
  }
  if (j.contains("cg_tol")) {
    c.options.cg_tol = require<double>(j["cg_tol"], "cg_tol", "number");
    if (!(c.options.cg_tol > 0.0)) throw ConfigError("cg_tol", "must be positive");
  }
  if (j.contains("out")) c.out_path = require<std::string>(j["out"], "out", "string");
  if (j.contains("format")) {
    c.format = require<std::string>(j["format"], "format", "string");
    if (c.format != "csv" && c.format != "json")
      throw ConfigError("format", "must be 'csv' or 'json'");
  }

  if (j.contains("bench")) {
    const json& b = j["bench"];
    if (!b.is_object()) throw ConfigError("bench", "expected an object");
    if (b.contains("N")) c.bench_N = require<int>(b["N"], "bench.N", "integer");
    if (b.contains("alpha0"))
      c.bench_alpha0 = require<double>(b["alpha0"], "bench.alpha0", "number");
    if (b.contains("M")) c.bench_M_ladder = int_list(b["M"], "bench.M");
    if (b.contains("repeats"))
      c.bench_repeats = require<int>(b["repeats"], "bench.repeats", "integer");
    if (c.bench_N < 1) throw ConfigError("bench.N", "must be >= 1");
    if (!(c.bench_alpha0 > 1.0 && c.bench_alpha0 < 2.0))
      throw ConfigError("bench.alpha0", "must lie in (1,2)");
    if (c.bench_repeats < 1) throw ConfigError("bench.repeats", "must be >= 1");
  }

  // canonical form for the hash: sorted-key dump of the parsed document
  c.hash = fnv1a(j.dump());
  return c;
}

Config parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string emit_to_string(const ConvergenceTable& table, const std::string& format) {
  if (format == "csv") {
    std::string out = "scheme,alpha0,N,M,error,rate,seconds\n";
    for (const auto& r : table.rows) {
      out += r.scheme + "," + fmt_full(r.alpha0) + "," + std::to_string(r.N) + "," +
             std::to_string(r.M) + "," + fmt_full(r.error) + "," +
             (r.rate ? fmt_full(*r.rate) : std::string()) + "," + fmt_full(r.seconds) + "\n";
    }
    return out;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : table.rows) {
      json row;
      row["scheme"] = r.scheme;
      row["alpha0"] = r.alpha0;
      row["N"] = r.N;
      row["M"] = r.M;
      row["error"] = r.error;
      if (r.rate) row["rate"] = *r.rate;
      row["seconds"] = r.seconds;
      arr.push_back(row);
    }
    json doc;
    doc["axis"] = (table.axis == ConvergenceTable::Axis::time) ? "time" : "space";
    doc["rows"] = arr;
    return doc.dump(2) + "\n";
  }
  throw ConfigError("format", "must be 'csv' or 'json'");
}

void emit(const ConvergenceTable& table, const std::string& path, const std::string& format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit: cannot open '" + path + "'");
  out << emit_to_string(table, format);
}

void emit_records(const std::vector<RunRecord>& rows, ConvergenceTable::Axis axis,
                  const std::string& path, const std::string& format) {
  ConvergenceTable t;
  t.axis = axis;
  t.rows = rows;
  emit(t, path, format);
}

ConvergenceTable parse_table_text(const std::string& text, const std::string& format) {
  ConvergenceTable t;
  if (format == "json") {
    const json doc = json::parse(text);
    t.axis = (doc.value("axis", "time") == std::string("space"))
                 ? ConvergenceTable::Axis::space
                 : ConvergenceTable::Axis::time;
    for (const auto& row : doc.at("rows")) {
      RunRecord r;
      r.scheme = row.at("scheme").get<std::string>();
      r.alpha0 = row.at("alpha0").get<double>();
      r.N = row.at("N").get<int>();
      r.M = row.at("M").get<int>();
      r.error = row.at("error").get<double>();
      if (row.contains("rate")) r.rate = row.at("rate").get<double>();
      r.seconds = row.at("seconds").get<double>();
      t.rows.push_back(std::move(r));
    }
    return t;
  }
  if (format != "csv") throw ConfigError("format", "must be 'csv' or 'json'");
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    RunRecord r;
    std::getline(ls, r.scheme, ',');
    std::getline(ls, cell, ',');
    r.alpha0 = std::strtod(cell.c_str(), nullptr);
    std::getline(ls, cell, ',');
    r.N = std::atoi(cell.c_str());
    std::getline(ls, cell, ',');
    r.M = std::atoi(cell.c_str());
    std::getline(ls, cell, ',');
    r.error = std::strtod(cell.c_str(), nullptr);
    std::getline(ls, cell, ',');
    if (!cell.empty()) r.rate = std::strtod(cell.c_str(), nullptr);
    std::getline(ls, cell, ',');
    r.seconds = std::strtod(cell.c_str(), nullptr);
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::string pretty_table(const ConvergenceTable& table) {
  const bool time_axis = table.axis == ConvergenceTable::Axis::time;
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-8s %-6s %6s %6s %14s %8s %10s\n", "scheme", "a0",
                "N", "M", time_axis ? "E(tau,h)" : "S(tau,h)", "rate", "seconds");
  out += buf;
  for (const auto& r : table.rows) {
    char ratebuf[16];
    if (r.rate)
      std::snprintf(ratebuf, sizeof ratebuf, "%8.2f", *r.rate);
    else
      std::snprintf(ratebuf, sizeof ratebuf, "%8s", "*");
    std::snprintf(buf, sizeof buf, "%-8s %-6.2f %6d %6d %14.4e %s %10.3f\n",
                  r.scheme.c_str(), r.alpha0, r.N, r.M, r.error, ratebuf, r.seconds);
    out += buf;
  }
  return out;
}

std::string field_csv(const Field2D& u) {
  std::string out = "x,y,value\n";
  char buf[96];
  for (int i = 0; i <= u.grid.m1; ++i)
    for (int j = 0; j <= u.grid.m2; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", u.grid.x(i), u.grid.y(j),
                    u.at(i, j));
      out += buf;
    }
  return out;
}

}  // namespace vexwave
