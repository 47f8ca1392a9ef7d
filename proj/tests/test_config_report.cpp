#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "ccs/config.hpp"
#include "ccs/report.hpp"

using namespace ccs;
using nlohmann::json;

namespace {

// Minimal structural validator for the subset of JSON Schema the shipped
// schema uses: type, enum, required, properties, items.
bool validate(const json& schema, const json& value, std::string& why) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    const bool ok = (t == "object" && value.is_object()) ||
                    (t == "array" && value.is_array()) ||
                    (t == "string" && value.is_string()) ||
                    (t == "integer" && value.is_number_integer()) ||
                    (t == "number" && value.is_number()) ||
                    (t == "boolean" && value.is_boolean());
    if (!ok) {
      why = "type mismatch: expected " + t + ", got " + std::string(value.type_name());
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& e : schema["enum"])
      if (e == value) hit = true;
    if (!hit) {
      why = "enum violation at " + value.dump();
      return false;
    }
  }
  if (schema.contains("required"))
    for (const auto& k : schema["required"])
      if (!value.contains(k.get<std::string>())) {
        why = "missing required key " + k.get<std::string>();
        return false;
      }
  if (schema.contains("properties") && value.is_object())
    for (const auto& [k, sub] : schema["properties"].items())
      if (value.contains(k) && !validate(sub, value[k], why)) {
        why = k + ": " + why;
        return false;
      }
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!validate(schema["items"], item, why)) return false;
  return true;
}

SuiteConfig tiny() {
  SuiteConfig cfg;
  cfg.corpus_fields = 1;
  cfg.corpus_degree = 2;
  cfg.points_per_surface = 1;
  cfg.quad_points = 16;
  cfg.surfaces = {"plane", "sphere"};
  return cfg;
}

}  // namespace

TEST_CASE("config parsing: defaults, overrides, exact rationals") {
  const Config cfg = parse_config(R"({
    "mode": "float",
    "tolerance": 1e-9,
    "seed": 9,
    "material": {"mu": "3/2", "lambda": 2, "alpha1": "5/4", "alpha2": "1/4"},
    "corpus": {"fields": 4, "degree": 3, "coeff_bound": 6, "points_per_surface": 5},
    "surfaces": ["plane", "sphere"],
    "quadrature": {"points": 24, "tolerance": 1e-7},
    "out": "somewhere",
    "check": "I05"
  })");
  CHECK(!cfg.suite.rational_mode);
  CHECK(cfg.suite.tolerance == 1e-9);
  CHECK(cfg.suite.seed == 9);
  CHECK(cfg.suite.material.mu == Rational(3, 2));
  CHECK(cfg.suite.material.lambda == Rational(2));
  CHECK(cfg.suite.corpus_fields == 4);
  CHECK(cfg.suite.surfaces.size() == 2);
  CHECK(cfg.suite.quad_points == 24);
  CHECK(cfg.out_dir == "somewhere");
  CHECK(cfg.suite.only_check == "I05");
}

TEST_CASE("config rejection: unknown keys, bad values, bad literals") {
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"unknown_key": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"material": {"mu": "1", "bogus": 2}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"corpus": {"fields": 0}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"mode": "decimal"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"surfaces": ["torus"]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"material": {"mu": "0"}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"material": {"mu": 1.5}})"), ConfigError);

  // corrupted field literal: the diagnostic names the offending term
  try {
    parse_config(R"({"fields": [["x1^2 + 3&&4", "0", "0"]]})");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("&&") != std::string::npos);
  }
}

TEST_CASE("report JSON validates against the shipped schema") {
  std::ifstream in(std::string(CCS_SOURCE_DIR) + "/schemas/report.schema.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;

  const SuiteConfig cfg = tiny();
  const SuiteReport rep = run_suite(cfg);
  const json body = json::parse(report_to_json(rep, cfg.material));
  std::string why;
  const bool ok = validate(schema, body, why);
  INFO(why);
  CHECK(ok);
  CHECK(body["report_version"] == 1);
  // exact rationals as strings
  CHECK(body["material"]["mu"].is_string());
}

TEST_CASE("report files are written") {
  const SuiteConfig cfg = tiny();
  const SuiteReport rep = run_suite(cfg);
  const std::string dir = "test_report_out";
  write_report_files(rep, cfg.material, dir);
  std::ifstream jf(dir + "/report.json"), mf(dir + "/report.md");
  CHECK(jf.good());
  CHECK(mf.good());
}
