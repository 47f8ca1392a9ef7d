#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccs/fields.hpp"
#include "ccs/suite.hpp"

namespace ccs {

// Evaluation request: a field, a surface, a point on it.
struct EvaluateSpec {
  std::string surface = "plane";
  std::optional<std::string> custom_surface_f;  // raw level-set polynomial
  std::vector<std::string> field = {"x2^2", "0", "0"};
  std::vector<std::string> point = {"0", "0", "0"};
};

struct Config {
  SuiteConfig suite;
  EvaluateSpec evaluate;
  std::string out_dir;  // empty: no files written

  static Config defaults() { return Config{}; }
};

// Parses and schema-validates a JSON config; unknown keys are rejected.
Config load_config(const std::string& path);
Config parse_config(const std::string& json_text);

}  // namespace ccs
