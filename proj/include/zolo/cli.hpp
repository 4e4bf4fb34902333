#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "zolo/adi.hpp"
#include "zolo/io.hpp"

namespace zolo::cli {

struct Common {
  std::string config;
  std::string out;  // empty: standard output
  std::string format = "csv";  // csv | json, for tabular commands
  std::uint64_t seed = 7;
  int nq = 512;
  double tol = 1e-8;
};

struct IntRange {
  int lo = 1, hi = 1;
};
// "a..b" or "a"; throws InvalidInput unless 0 <= a <= b.
IntRange parse_range(const std::string& s);

void cmd_map(const Common& o, std::ostream& os);
void cmd_bound(const Common& o, IntRange n, bool empirical, std::ostream& os);
// |r_n| and arg r_n on a grid x grid lattice covering both sets with a 20% margin.
void cmd_faber(const Common& o, int n, int grid, std::ostream& os);
void cmd_shifts(const Common& o, ShiftKind kind, int k, std::ostream& os);
// Rows j = 0..k: ADI relative error after j steps with a j-shift set, its certificate and
// the upper bound on Z_j.
void cmd_adi(const Common& o, ShiftKind kind, int k, int m, int p, std::ostream& os);
// kind "cauchy": m x p Cauchy matrix with nodes in E and F. kind "vandermonde": m nodes in
// the disk E, p columns. Rows j: sigma_{j+1} / sigma_1 and its bound.
void cmd_svbounds(const Common& o, const std::string& kind, int m, int p, std::ostream& os);

// Full command line. Exit codes: 0 success, 1 configuration error, 2 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zolo::cli
