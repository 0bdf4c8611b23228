#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdmaps/markov.hpp"

namespace qdmaps::cli {

// Everything the subcommands consume; the front end only fills this in.
struct RunConfig {
  std::string model = "werner-exp";
  double alpha = 1.0;
  double beta = 0.5;
  double a = 1.0;
  int n = 1;
  double g = 1.0;
  double omega = 1.0;

  double t_start = 0.2;
  double t_end = 3.0;
  int steps = 15;
  std::optional<double> t1;
  std::optional<double> t2;

  double cp_tol = 1e-10;
  double singular_tol = 1e-12;
  std::uint64_t seed = 12345;

  std::string map_file;
  std::string out;
};

// %.12g with NaN spelled "nan"; the decimal format of every CSV column.
std::string fmt12(double x);

// steps evenly spaced points from t_start to t_end inclusive.
// Throws InvalidConfig unless steps >= 2 and t_end > t_start >= 0.
std::vector<double> linspace(double t_start, double t_end, int steps);

PFunction make_pfunction(const RunConfig& cfg);
ModelFamily make_family(const RunConfig& cfg);

// Subcommand drivers. Reports go to os; CSV/map files go to cfg.out. Each
// returns the process exit code: 0 success / CP, 2 NCP finding, 1 bad input
// or I/O failure. Errors are reported on os, never thrown.
int run_check(const RunConfig& cfg, std::ostream& os);
int run_model(const RunConfig& cfg, std::ostream& os);
int run_scan(const RunConfig& cfg, std::ostream& os);
int run_concurrence(const RunConfig& cfg, std::ostream& os);
int run_classify(const RunConfig& cfg, std::ostream& os);

}  // namespace qdmaps::cli
