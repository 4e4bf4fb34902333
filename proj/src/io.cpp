#include "zolo/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef ZOLO_VERSION
#define ZOLO_VERSION "dev"
#endif

namespace zolo {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidInput("config: " + where + ": " + what);
}

const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(where, "expected a finite number");
  return v;
}

cplx complex_value(const json& j, const std::string& where) {
  if (j.is_number()) return number(j, where);
  if (!j.is_array() || j.size() != 2) bad(where, "expected [re, im]");
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

std::pair<double, double> interval(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where, "expected [lo, hi]");
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

std::vector<cplx> point_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of [re, im]");
  std::vector<cplx> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_value(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Region base_region(const json& j, const std::string& where) {
  const json& type = field(j, where, "type");
  if (!type.is_string()) bad(where + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "disk") {
    const double r = number(field(j, where, "radius"), where + ".radius");
    if (!(r > 0)) bad(where + ".radius", "must be positive");
    return Region::disk(complex_value(field(j, where, "center"), where + ".center"), r);
  }
  if (t == "rectangle") {
    const auto re = interval(field(j, where, "re"), where + ".re");
    const auto im = interval(field(j, where, "im"), where + ".im");
    if (!(re.second > re.first)) bad(where + ".re", "interval must have positive length");
    if (!(im.second > im.first)) bad(where + ".im", "interval must have positive length");
    return Region::rectangle(re.first, re.second, im.first, im.second);
  }
  if (t == "polygon") return Region::polygon(point_list(field(j, where, "vertices"), where + ".vertices"));
  if (t == "curve") {
    if (j.contains("samples")) return Region::curve_from_samples(point_list(j["samples"], where + ".samples"));
    const json& terms = field(j, where, "terms");
    if (!terms.is_array()) bad(where + ".terms", "expected an array");
    std::vector<FourierTerm> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string w = where + ".terms[" + std::to_string(i) + "]";
      const json& k = field(terms[i], w, "k");
      if (!k.is_number_integer()) bad(w + ".k", "expected an integer");
      out.push_back({k.get<int>(), complex_value(field(terms[i], w, "c"), w + ".c")});
    }
    return Region::curve(std::move(out));
  }
  bad(where + ".type", "unknown region type '" + t + "'");
}

Region with_modifiers(Region r, const json& j, const std::string& where) {
  if (j.contains("transform")) {
    const json& tr = j["transform"];
    const std::string w = where + ".transform";
    const cplx scale = tr.contains("scale") ? complex_value(tr["scale"], w + ".scale") : cplx(1.0);
    const cplx shift = tr.contains("shift") ? complex_value(tr["shift"], w + ".shift") : cplx(0.0);
    if (scale == 0.0) bad(w + ".scale", "must be nonzero");
    r = r.transformed(scale, shift);
  }
  if (j.contains("complement")) {
    if (!j["complement"].is_boolean()) bad(where + ".complement", "expected true or false");
    if (j["complement"].get<bool>()) r = r.complement();
  }
  return r;
}

void read_int(const json& s, const char* key, int& out) {
  if (!s.contains(key)) return;
  if (!s[key].is_number_integer() || s[key].get<int>() < 1) bad(std::string("solver.") + key, "expected a positive integer");
  out = s[key].get<int>();
}

void read_positive(const json& s, const char* key, double& out) {
  if (!s.contains(key)) return;
  const double v = number(s[key], std::string("solver.") + key);
  if (!(v > 0)) bad(std::string("solver.") + key, "must be positive");
  out = v;
}

}  // namespace

Region region_from_json(const json& j, const std::string& where) {
  return with_modifiers(base_region(j, where), j, where);
}

const Region& PairConfig::e() const {
  if (!E) throw InvalidInput("config: E: missing");
  return *E;
}

const Region& PairConfig::f() const {
  if (!F) throw InvalidInput("config: F: missing");
  return *F;
}

PairConfig parse_pair_config(const std::string& text) {
  PairConfig c;
  c.hash = fnv1a64(text);
  try {
    c.doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config: malformed JSON: ") + e.what());
  }
  if (!c.doc.is_object()) bad("(root)", "expected an object");
  if (c.doc.contains("E")) c.E = region_from_json(c.doc["E"], "E");
  if (c.doc.contains("F")) {
    const json& f = c.doc["F"];
    if (f.is_object() && f.value("type", "") == "negate") {
      const json& of = field(f, "F", "of");
      if (of != "E") bad("F.of", "only \"E\" is supported");
      if (!c.E) bad("F.of", "E is not defined");
      c.F = with_modifiers(c.E->negated(), f, "F");
    } else {
      c.F = region_from_json(f, "F");
    }
  }
  if (c.E && c.F) check_disjoint(*c.E, *c.F);
  if (c.doc.contains("solver")) {
    const json& s = c.doc["solver"];
    if (!s.is_object()) bad("solver", "expected an object");
    read_positive(s, "tolerance", c.solver.tolerance);
    read_int(s, "max_degree", c.solver.max_degree);
    read_int(s, "n_samples", c.solver.n_samples);
    read_int(s, "max_poles", c.solver.max_poles);
    read_positive(s, "taper", c.solver.taper);
  }
  return c;
}

PairConfig load_pair_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pair_config(ss.str());
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

GeometryConstants geometry_constants(const ConformalMap& map) {
  GeometryConstants gc;
  gc.h = map.h();
  gc.rotE = rotation(map.E());
  gc.rotF = rotation(map.F());
  gc.convex = is_convex(map.E()) && is_convex(map.F());
  gc.variant = map.variant();
  return gc;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json map_to_json(const ConformalMap& map) {
  json j;
  j["variant"] = map.variant() == Variant::A1 ? "A1" : "A2";
  j["h"] = map.h();
  j["residual"] = map.residual();
  auto list = [](const std::vector<cplx>& v) {
    json a = json::array();
    for (auto z : v) a.push_back(to_json(z));
    return a;
  };
  if (auto* m = dynamic_cast<const MobiusMap*>(&map)) {
    j["type"] = "mobius";
    j["a"] = to_json(m->a());
    j["b"] = to_json(m->b());
    j["c"] = to_json(m->c());
    j["d"] = to_json(m->d());
  } else if (auto* a = dynamic_cast<const AnnulusMap*>(&map)) {
    const auto& d = a->data();
    j["type"] = "annulus";
    j["zE"] = to_json(d.zE);
    j["zF"] = to_json(d.zF);
    j["rhoE"] = d.rhoE;
    j["rhoF"] = d.rhoF;
    j["c0"] = d.c0;
    j["laurentE"] = list(d.laurentE);
    j["laurentF"] = list(d.laurentF);
    auto hess = [&](const std::vector<std::vector<cplx>>& H) {
      json out = json::array();
      for (const auto& row : H) out.push_back(list(row));
      return out;
    };
    j["hessE"] = hess(d.hessE);
    j["hessF"] = hess(d.hessF);
    json poles = json::array();
    for (const auto& p : d.poles)
      poles.push_back({{"location", to_json(p.location)}, {"scale", p.scale}, {"coeff", to_json(p.coeff)}});
    j["poles"] = poles;
  }
  return j;
}

json to_json(const Metadata& m) {
  json j = {{"version", ZOLO_VERSION}, {"command", m.command},   {"config_hash", hex64(m.config_hash)},
            {"h", m.h},                {"rotE", m.rotE},         {"rotF", m.rotF},
            {"seed", m.seed}};
  for (const auto& [k, v] : m.extra) {
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (!v.empty() && *end == '\0' && std::isfinite(d))
      j[k] = d;
    else
      j[k] = v;
  }
  return j;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const Metadata& m, const std::vector<std::string>& columns)
    : os_(os), ncols_(columns.size()) {
  os_ << "# zolo " << ZOLO_VERSION << "\n"
      << "# command: " << m.command << "\n"
      << "# config_hash: " << hex64(m.config_hash) << "\n"
      << "# h: " << format_double(m.h) << "\n"
      << "# rotE: " << format_double(m.rotE) << "\n"
      << "# rotF: " << format_double(m.rotF) << "\n"
      << "# seed: " << m.seed << "\n";
  for (const auto& [k, v] : m.extra) os_ << "# " << k << ": " << v << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) os_ << (i ? "," : "") << columns[i];
  os_ << "\n";
}

void CsvWriter::sep() {
  if (col_ == ncols_) throw InvalidInput("CsvWriter: too many values in row");
  if (col_++) os_ << ",";
}

CsvWriter& CsvWriter::operator<<(double v) {
  sep();
  os_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::operator<<(int v) {
  sep();
  os_ << v;
  return *this;
}

CsvWriter& CsvWriter::operator<<(bool v) {
  sep();
  os_ << (v ? 1 : 0);
  return *this;
}

void CsvWriter::end_row() {
  if (col_ != ncols_) throw InvalidInput("CsvWriter: incomplete row");
  os_ << "\n";
  col_ = 0;
}

}  // namespace zolo
