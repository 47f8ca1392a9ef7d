#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccs/fields.hpp"
#include "ccs/material.hpp"

namespace ccs {

enum class CheckMode { PointwiseExact, PointwiseFloat, IntegralQuadrature };

inline const char* to_string(CheckMode m) {
  switch (m) {
    case CheckMode::PointwiseExact: return "pointwise-exact";
    case CheckMode::PointwiseFloat: return "pointwise-float";
    default: return "integral-quadrature";
  }
}

struct ResidualEntry {
  std::string name;
  bool exact_zero = false;  // meaningful in rational mode
  double max_abs = 0.0;     // double image of the largest residual component
};

struct CheckResult {
  std::string id;
  std::string eq_tag;
  std::string description;
  CheckMode mode = CheckMode::PointwiseExact;
  std::vector<ResidualEntry> residuals;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
  std::string inputs_digest;
};

struct SuiteConfig {
  bool rational_mode = true;
  double tolerance = 1e-10;  // float-mode pointwise comparisons
  std::uint64_t seed = 1;
  int corpus_fields = 20;
  int corpus_degree = 4;
  long coeff_bound = 10;
  int points_per_surface = 10;
  std::vector<std::string> surfaces = {"plane", "sphere", "ellipsoid"};
  MaterialParams material = default_material();
  int quad_points = 32;  // per direction; doubled for the convergence check
  double quad_tolerance = 1e-8;
  std::vector<PolyVec> explicit_fields;  // overrides the random corpus when set
  std::optional<std::string> only_check;

  static MaterialParams default_material() {
    MaterialParams m;
    m.mu = Rational(2);
    m.lambda = Rational(1);
    m.alpha1 = Rational(3, 2);
    m.alpha2 = Rational(1, 2);
    m.eta = Rational(1, 4);
    m.Lc = Rational(1);
    return m;
  }
};

struct SuiteReport {
  std::string mode;  // "rational" | "float"
  std::uint64_t seed = 0;
  double tolerance = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  bool all_pass = false;
  double wall_ms = 0;
  std::string corpus_digest;
};

struct CatalogueEntry {
  const char* id;
  const char* eq_tag;
  const char* description;
};

// The full catalogue, in execution order. run_suite refuses to start if this
// drifts from the documented anchor table.
const std::vector<CatalogueEntry>& check_catalogue();

SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace ccs
