#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zolo/bounds.hpp"
#include "zolo/conformal.hpp"

namespace zolo {

using json = nlohmann::json;

// Region JSON: {"type": "disk" | "rectangle" | "polygon" | "curve", shape fields,
// "transform": {"scale": [re, im], "shift": [re, im]}, "complement": bool}, with shape fields
//   disk:      "center": [re, im], "radius": r
//   rectangle: "re": [lo, hi], "im": [lo, hi]
//   polygon:   "vertices": [[re, im], ...]
//   curve:     "terms": [{"k": k, "c": [re, im]}, ...] or "samples": [[re, im], ...]
// F may also be {"type": "negate", "of": "E"}. Errors name the offending field.
Region region_from_json(const json& j, const std::string& where);

struct PairConfig {
  std::optional<Region> E, F;
  SolverConfig solver;
  std::uint64_t hash = 0;  // FNV-1a of the raw config bytes
  json doc;

  const Region& e() const;  // throws InvalidInput when absent
  const Region& f() const;
};

// Parses {"E": Region, "F": Region, "solver": {...}}; both sets are optional so that
// single-set commands can share the format. Throws InvalidInput on malformed input.
PairConfig parse_pair_config(const std::string& text);
PairConfig load_pair_config(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

GeometryConstants geometry_constants(const ConformalMap& map);

// Map parameters as JSON: type, variant, h, residual and either the Mobius coefficients or
// anchors, radii, basis coefficients, recurrence coefficients and poles. Complex numbers are
// [re, im] pairs.
json map_to_json(const ConformalMap& map);
json to_json(cplx z);

// Metadata written as '#'-prefixed lines ahead of CSV data and as a "meta" object in JSON.
struct Metadata {
  std::string command;
  std::uint64_t config_hash = 0;
  double h = 0, rotE = 0, rotF = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> extra;
};
json to_json(const Metadata& m);

// CSV with a metadata header; numbers are printed with 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const Metadata& meta, const std::vector<std::string>& columns);
  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(int v);
  CsvWriter& operator<<(bool v);
  void end_row();

 private:
  void sep();
  std::ostream& os_;
  std::size_t ncols_, col_ = 0;
};

std::string format_double(double v);

}  // namespace zolo
