#include "zolo/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "zolo/bounds.hpp"
#include "zolo/displacement.hpp"
#include "zolo/faber.hpp"

#ifndef ZOLO_VERSION
#define ZOLO_VERSION "dev"
#endif

namespace zolo::cli {

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void emit(const Common& o, const Metadata& meta, const Table& t, std::ostream& os) {
  if (o.format == "json") {
    json j;
    j["meta"] = to_json(meta);
    j["columns"] = t.columns;
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row = json::array();
      for (double v : r) row.push_back(std::isfinite(v) ? json(v) : json(format_double(v)));
      rows.push_back(row);
    }
    j["rows"] = rows;
    os << j.dump(2) << "\n";
    return;
  }
  CsvWriter w(os, meta, t.columns);
  for (const auto& r : t.rows) {
    for (double v : r) w << v;
    w.end_row();
  }
}

Metadata metadata(const std::string& command, const PairConfig& cfg, const Common& o,
                  const ConformalMap* map) {
  Metadata m;
  m.command = command;
  m.config_hash = cfg.hash;
  m.seed = o.seed;
  if (map) {
    const auto gc = geometry_constants(*map);
    m.h = gc.h;
    m.rotE = gc.rotE;
    m.rotF = gc.rotF;
    m.extra.push_back({"residual", format_double(map->residual())});
  }
  return m;
}

struct Loaded {
  PairConfig cfg;
  std::shared_ptr<const ConformalMap> map;
};

Loaded load(const Common& o) {
  if (o.nq < 64) throw InvalidInput("--nq must be at least 64");
  if (!(o.tol > 0)) throw InvalidInput("--tol must be positive");
  Loaded l{load_pair_config(o.config), nullptr};
  l.cfg.solver.tolerance = o.tol;
  l.map = solve_map(l.cfg.e(), l.cfg.f(), l.cfg.solver);
  return l;
}

ShiftSet make_shifts(const ConformalMap& map, std::shared_ptr<const ConformalMap> ptr, ShiftKind kind, int k,
                     int nq, const BoundaryQuadrature& qE, const BoundaryQuadrature& qF) {
  switch (kind) {
    case ShiftKind::faber:
      return faber_shifts(build_context(std::move(ptr), k, nq), k);
    case ShiftKind::fejer:
      return fejer_shifts(map, k);
    default:
      return leja_shifts(qE, qF, k);
  }
}

}  // namespace

IntRange parse_range(const std::string& s) {
  IntRange r;
  try {
    const auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(s);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(s);
    }
  } catch (const std::logic_error&) {
    throw InvalidInput("range '" + s + "': expected a..b or a single integer");
  }
  if (r.lo < 0 || r.hi < r.lo) throw InvalidInput("range '" + s + "': need 0 <= a <= b");
  return r;
}

void cmd_map(const Common& o, std::ostream& os) {
  const auto l = load(o);
  json j = map_to_json(*l.map);
  j["meta"] = to_json(metadata("map", l.cfg, o, l.map.get()));
  os << j.dump(2) << "\n";
}

void cmd_bound(const Common& o, IntRange n, bool empirical, std::ostream& os) {
  const auto l = load(o);
  const auto gc = geometry_constants(*l.map);
  Metadata meta = metadata("bound", l.cfg, o, l.map.get());
  const auto vc = validity_constants(gc.rotE, gc.rotF, gc.h, gc.variant);
  meta.extra.push_back({"x0", format_double(vc.x0)});
  meta.extra.push_back({"N0", format_double(vc.N0)});
  Table t{{"n", "lower", "upper", "valid", "clamped"}, {}};
  if (empirical) t.columns.push_back("empirical");
  for (int k = n.lo; k <= n.hi; ++k) {
    const auto b = zolotarev_upper(gc, k);
    std::vector<double> row{double(k), b.lower, b.upper, double(b.upper_valid), double(b.clamped)};
    if (empirical) row.push_back(empirical_ratio(build_context(l.map, k, o.nq)));
    t.rows.push_back(std::move(row));
  }
  emit(o, meta, t, os);
}

void cmd_faber(const Common& o, int n, int grid, std::ostream& os) {
  if (n < 0) throw InvalidInput("--n must be non-negative");
  if (grid < 2) throw InvalidInput("--grid must be at least 2");
  const auto l = load(o);
  const auto ctx = build_context(l.map, n, o.nq);
  Metadata meta = metadata("faber", l.cfg, o, l.map.get());
  meta.extra.push_back({"n", std::to_string(n)});
  const auto [a0, a1] = l.cfg.e().bbox();
  const auto [b0, b1] = l.cfg.f().bbox();
  const double x0 = std::min(a0.real(), b0.real()), x1 = std::max(a1.real(), b1.real());
  const double y0 = std::min(a0.imag(), b0.imag()), y1 = std::max(a1.imag(), b1.imag());
  const double mx = 0.2 * (x1 - x0), my = 0.2 * (y1 - y0);
  Table t{{"re", "im", "abs_rn", "arg_rn"}, {}};
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const cplx z(x0 - mx + (x1 - x0 + 2 * mx) * i / (grid - 1), y0 - my + (y1 - y0 + 2 * my) * j / (grid - 1));
      cplx r = std::numeric_limits<double>::quiet_NaN();
      try {
        r = eval_rn(ctx, z);
      } catch (const Error&) {
        // lattice points on a filter contour have no value
      }
      t.rows.push_back({z.real(), z.imag(), std::abs(r), std::arg(r)});
    }
  emit(o, meta, t, os);
}

void cmd_shifts(const Common& o, ShiftKind kind, int k, std::ostream& os) {
  if (k < 0) throw InvalidInput("--k must be non-negative");
  const auto l = load(o);
  const auto qE = boundary_samples(l.map->E(), 2000), qF = boundary_samples(l.map->F(), 2000);
  const auto s = make_shifts(*l.map, l.map, kind, k, o.nq, qE, qF);
  json j;
  j["meta"] = to_json(metadata("shifts", l.cfg, o, l.map.get()));
  j["kind"] = to_string(kind);
  j["k"] = s.k();
  j["kappa"] = json::array();
  j["tau"] = json::array();
  for (auto z : s.kappa) j["kappa"].push_back(to_json(z));
  for (auto z : s.tau) j["tau"].push_back(to_json(z));
  j["certificate"] = error_certificate(s, qE, qF);
  j["diagnostics"] = s.diagnostics;
  os << j.dump(2) << "\n";
}

void cmd_adi(const Common& o, ShiftKind kind, int k, int m, int p, std::ostream& os) {
  if (k < 0) throw InvalidInput("--k must be non-negative");
  const auto l = load(o);
  const auto gc = geometry_constants(*l.map);
  const auto P = diagonal_problem(l.map->E(), l.map->F(), m, p, o.seed);
  const auto qE = boundary_samples(l.map->E(), 2000), qF = boundary_samples(l.map->F(), 2000);
  Metadata meta = metadata("adi", l.cfg, o, l.map.get());
  meta.extra.push_back({"shifts", to_string(kind)});
  meta.extra.push_back({"m", std::to_string(m)});
  meta.extra.push_back({"p", std::to_string(p)});
  Table t{{"k", "rel_error", "certificate", "bound"}, {}};
  // Leja shifts are nested, so one run covers every j.
  ShiftSet nested;
  if (kind == ShiftKind::leja) nested = leja_shifts(qE, qF, k);
  for (int j = 0; j <= k; ++j) {
    ShiftSet s = nested;
    if (kind != ShiftKind::leja) {
      s = make_shifts(*l.map, l.map, kind, j, o.nq, qE, qF);
    } else {
      s.kappa.resize(j);
      s.tau.resize(j);
    }
    const auto H = adi_iterate(P, s, j);
    t.rows.push_back({double(j), H.rel_error.back(), error_certificate(s, qE, qF), zolotarev_upper(gc, j).upper});
  }
  emit(o, meta, t, os);
}

void cmd_svbounds(const Common& o, const std::string& kind, int m, int p, std::ostream& os) {
  if (m < 1 || p < 1) throw InvalidInput("--m and --p must be positive");
  std::mt19937_64 rng(o.seed);
  Table t{{"j", "sigma_ratio", "bound"}, {}};
  if (kind == "cauchy") {
    const auto l = load(o);
    const auto gc = geometry_constants(*l.map);
    const auto x = random_points(l.map->E(), m, rng);
    const auto y = random_points(l.map->F(), p, rng);
    const auto sv = singular_values(cauchy_matrix(x, y));
    for (std::size_t j = 0; j < sv.size(); ++j)
      t.rows.push_back({double(j), sv[j] / sv[0], zolotarev_upper(gc, int(j)).upper});
    Metadata meta = metadata("svbounds", l.cfg, o, l.map.get());
    meta.extra.push_back({"kind", kind});
    emit(o, meta, t, os);
    return;
  }
  if (kind != "vandermonde") throw InvalidInput("--kind: expected cauchy or vandermonde");
  const PairConfig cfg = load_pair_config(o.config);
  const Region& E = cfg.e();
  if (E.kind() != RegionKind::disk || E.is_complement()) throw InvalidInput("config: E: vandermonde needs a disk");
  const double h = vandermonde_h(E.center(), E.radius());
  const auto a = random_points(E, m, rng);
  const auto sv = singular_values(vandermonde_matrix(a, p));
  for (std::size_t j = 0; j < sv.size(); ++j) t.rows.push_back({double(j), sv[j] / sv[0], std::pow(h, -double(j))});
  Metadata meta = metadata("svbounds", cfg, o, nullptr);
  meta.h = h;
  meta.rotE = meta.rotF = 1;
  meta.extra.push_back({"kind", kind});
  emit(o, meta, t, os);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faber rationals, Zolotarev bounds and ADI shifts for pairs of planar sets", "zolo"};
  app.set_version_flag("--version", ZOLO_VERSION);
  app.require_subcommand(1);
  Common o;
  auto common = [&](CLI::App* c) {
    c->add_option("--config", o.config, "pair config JSON")->required()->check(CLI::ExistingFile);
    c->add_option("--out", o.out, "output file (default: standard output)");
    c->add_option("--seed", o.seed, "random seed")->capture_default_str();
    c->add_option("--nq", o.nq, "boundary samples per set")->capture_default_str();
    c->add_option("--tol", o.tol, "conformal map tolerance")->capture_default_str();
  };
  auto tabular = [&](CLI::App* c) {
    c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };

  auto* map = app.add_subcommand("map", "solve the annulus map and export it as JSON");
  common(map);

  std::string nrange = "1..30";
  bool empirical = false;
  auto* bound = app.add_subcommand("bound", "upper and lower bounds on Z_n");
  common(bound);
  tabular(bound);
  bound->add_option("--n", nrange, "degree or range a..b")->capture_default_str();
  bound->add_flag("--empirical", empirical, "add the measured Faber ratio");

  int n = 8, grid = 200;
  auto* faber = app.add_subcommand("faber", "sample r_n on a lattice");
  common(faber);
  tabular(faber);
  faber->add_option("--n", n, "degree")->capture_default_str();
  faber->add_option("--grid", grid, "lattice points per axis")->capture_default_str();

  std::string kind = "faber";
  int k = 8;
  auto* shifts = app.add_subcommand("shifts", "ADI shift parameters as JSON");
  common(shifts);
  shifts->add_option("--kind", kind, "faber, fejer or leja")->capture_default_str();
  shifts->add_option("--k", k, "number of shifts")->capture_default_str();

  int m = 100, p = 100;
  auto* adi = app.add_subcommand("adi", "ADI error history on a random diagonal Sylvester problem");
  common(adi);
  tabular(adi);
  adi->add_option("--shifts", kind, "faber, fejer or leja")->capture_default_str();
  adi->add_option("--k", k, "largest number of shifts")->capture_default_str();
  adi->add_option("--m", m, "rows")->capture_default_str();
  adi->add_option("--p", p, "columns")->capture_default_str();

  std::string svkind = "cauchy";
  auto* sv = app.add_subcommand("svbounds", "singular values of Cauchy or Vandermonde matrices and their bounds");
  common(sv);
  tabular(sv);
  sv->add_option("--kind", svkind, "cauchy or vandermonde")->capture_default_str();
  sv->add_option("--m", m, "rows")->capture_default_str();
  sv->add_option("--p", p, "columns")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    std::ostringstream buf;
    if (map->parsed()) cmd_map(o, buf);
    if (bound->parsed()) cmd_bound(o, parse_range(nrange), empirical, buf);
    if (faber->parsed()) cmd_faber(o, n, grid, buf);
    if (shifts->parsed()) cmd_shifts(o, shift_kind_from_string(kind), k, buf);
    if (adi->parsed()) cmd_adi(o, shift_kind_from_string(kind), k, m, p, buf);
    if (sv->parsed()) cmd_svbounds(o, svkind, m, p, buf);
    if (o.out.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw InvalidInput("cannot write '" + o.out + "'");
      f << buf.str();
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const MapNotResolved& e) {
    err << "error: " << e.what() << " (residual " << e.residual() << ")\n";
    return 2;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace zolo::cli
