#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "zolo/io.hpp"

using namespace zolo;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_pair_config(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Config, ParsesEveryRegionType) {
  const auto c = parse_pair_config(R"({
    "E": {"type": "rectangle", "re": [0.3, 1.3], "im": [-0.5, 0.5]},
    "F": {"type": "polygon", "vertices": [[-1, -1], [-0.5, -1], [-0.5, 1], [-1, 1]]}})");
  EXPECT_EQ(c.e().kind(), RegionKind::rectangle);
  EXPECT_EQ(c.f().kind(), RegionKind::polygon);
  const auto d = parse_pair_config(R"({"E": {"type": "disk", "center": [2, 1], "radius": 0.5},
    "F": {"type": "curve", "terms": [{"k": 1, "c": [1, 0]}, {"k": -1, "c": [0.2, 0]}]}})");
  EXPECT_EQ(d.e().kind(), RegionKind::disk);
  EXPECT_EQ(d.e().center(), cplx(2, 1));
  EXPECT_DOUBLE_EQ(d.e().radius(), 0.5);
  EXPECT_TRUE(contains(d.f(), 0.0));
}

TEST(Config, NegateTransformAndComplement) {
  const auto c = parse_pair_config(R"({"E": {"type": "disk", "center": [1, 0.5], "radius": 0.3},
    "F": {"type": "negate", "of": "E"}})");
  EXPECT_TRUE(contains(c.f(), cplx(-1, -0.5)));
  EXPECT_FALSE(contains(c.f(), cplx(-1, 0.5)));
  const auto t = parse_pair_config(R"({"E": {"type": "disk", "center": [0, 0], "radius": 1,
    "transform": {"scale": [2, 0], "shift": [5, 0]}}})");
  EXPECT_NEAR(std::abs(t.e().center() - cplx(5, 0)), 0, 1e-15);
  EXPECT_NEAR(t.e().radius(), 2, 1e-15);
  EXPECT_FALSE(t.F.has_value());
  const auto k = parse_pair_config(R"({"E": {"type": "disk", "center": [0, 0], "radius": 1},
    "F": {"type": "disk", "center": [0, 0], "radius": 2, "complement": true}})");
  EXPECT_TRUE(k.f().is_complement());
  EXPECT_TRUE(contains(k.f(), cplx(3, 0)));
}

TEST(Config, SolverSettings) {
  const auto c = parse_pair_config(R"({"E": {"type": "disk", "center": [1, 0], "radius": 0.5},
    "solver": {"tolerance": 1e-6, "max_degree": 40, "n_samples": 900}})");
  EXPECT_EQ(c.solver.tolerance, 1e-6);
  EXPECT_EQ(c.solver.max_degree, 40);
  EXPECT_EQ(c.solver.n_samples, 900);
  EXPECT_NE(error_of(R"({"solver": {"max_degree": 0}})").find("solver.max_degree"), std::string::npos);
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_NE(error_of(R"({"E": {"type": "disk", "center": [1, 0]}})").find("E.radius: missing"), std::string::npos);
  EXPECT_NE(error_of(R"({"E": {"type": "disk", "center": [1], "radius": 1}})").find("E.center"), std::string::npos);
  EXPECT_NE(error_of(R"({"E": {"type": "blob"}})").find("E.type"), std::string::npos);
  EXPECT_NE(error_of(R"({"E": {"type": "rectangle", "re": [1, 0], "im": [0, 1]}})").find("E.re"), std::string::npos);
  EXPECT_NE(error_of(R"({"E": {"type": "disk", "center": [0, 0], "radius": -1}})").find("E.radius"), std::string::npos);
  EXPECT_NE(error_of(R"({"E": {"type": "disk", "center": [0, 0], "radius": 1, "complement": 3}})")
                .find("E.complement"),
            std::string::npos);
  EXPECT_NE(error_of("{\"E\": ").find("malformed JSON"), std::string::npos);
  EXPECT_NE(error_of("[1, 2]").find("expected an object"), std::string::npos);
  EXPECT_NE(error_of(R"({"E": {"type": "disk", "center": [0, 0], "radius": 1},
    "F": {"type": "disk", "center": [0.5, 0], "radius": 1}})"),
            "");
}

TEST(Config, AccessorsThrowWhenAbsent) {
  const auto c = parse_pair_config("{}");
  EXPECT_THROW(c.e(), InvalidInput);
  EXPECT_THROW(c.f(), InvalidInput);
}

TEST(Config, HashIsDeterministicAndContentSensitive) {
  const std::string a = R"({"E": {"type": "disk", "center": [1, 0], "radius": 0.5}})";
  EXPECT_EQ(parse_pair_config(a).hash, parse_pair_config(a).hash);
  EXPECT_NE(parse_pair_config(a).hash, parse_pair_config(a + " ").hash);
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(hex64(255), "0x00000000000000ff");
}

TEST(Config, ShippedConfigsLoad) {
  for (const char* name : {"two_disks", "concentric", "fig1_alpha_1", "fig2_cauchy", "fig2_vandermonde", "fig3"})
    EXPECT_NO_THROW(load_pair_config(std::string(ZOLO_CONFIG_DIR) + "/" + name + ".json")) << name;
  EXPECT_THROW(load_pair_config("/nonexistent/zolo.json"), InvalidInput);
}

TEST(Csv, HeaderAndRows) {
  Metadata m{"bound", 0x1234, 2.5, 1, 1.5, 7, {{"x0", "4.5"}}};
  std::ostringstream os;
  CsvWriter w(os, m, {"n", "value", "ok"});
  w << 3 << 0.1 << true;
  w.end_row();
  const std::string s = os.str();
  for (const char* line : {"# command: bound\n", "# config_hash: 0x0000000000001234\n", "# h: 2.5\n", "# rotE: 1\n",
                           "# rotF: 1.5\n", "# seed: 7\n", "# x0: 4.5\n", "n,value,ok\n", "3,0.10000000000000001,1\n"})
    EXPECT_NE(s.find(line), std::string::npos) << line;
  EXPECT_EQ(s.rfind("# zolo ", 0), 0u);
}

TEST(Csv, FormatDouble) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(INFINITY), "inf");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  EXPECT_EQ(std::stod(format_double(0.1)), 0.1);
}

TEST(Json, MetadataAndMapExport) {
  const Region E = Region::disk(1.0, .7);
  const MobiusMap mob = mobius_two_disks(E, E.negated());
  const json jm = map_to_json(mob);
  EXPECT_EQ(jm["type"], "mobius");
  EXPECT_NEAR(jm["h"].get<double>(), mob.h(), 1e-15);
  for (const char* key : {"a", "b", "c", "d", "variant", "residual"}) EXPECT_TRUE(jm.contains(key)) << key;

  const AnnulusMap ann = solve_annulus_map(Region::disk(0.0, 1), Region::disk(0.0, 2).complement());
  const json ja = map_to_json(ann);
  EXPECT_EQ(ja["type"], "annulus");
  for (const char* key : {"zE", "zF", "rhoE", "rhoF", "c0", "laurentE", "laurentF", "hessE", "hessF", "poles"})
    EXPECT_TRUE(ja.contains(key)) << key;

  const auto gc = geometry_constants(ann);
  EXPECT_NEAR(gc.h, 2, 1e-8);
  EXPECT_EQ(gc.rotE, 1);
  EXPECT_NEAR(gc.rotF, 1, 1e-12);

  const json meta = to_json(Metadata{"map", 1, 2, 1, 1, 9, {{"N0", "3.5"}, {"note", "text"}}});
  EXPECT_EQ(meta["command"], "map");
  EXPECT_EQ(meta["seed"], 9);
  EXPECT_EQ(meta["N0"], 3.5);
  EXPECT_EQ(meta["note"], "text");
  EXPECT_TRUE(meta.contains("version"));
  EXPECT_EQ(to_json(cplx(1, -2)), json::array({1.0, -2.0}));
}
