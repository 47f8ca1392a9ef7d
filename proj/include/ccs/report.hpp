#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccs/suite.hpp"

namespace ccs {

// Canonical machine-readable report ("report_version": 1). Exact values are
// serialized as strings so no precision is lost in JSON.
std::string report_to_json(const SuiteReport& report, const MaterialParams& material);

// Human-readable summary: one row per catalogue id.
std::string report_to_markdown(const SuiteReport& report);

// Writes report.json and report.md into out_dir (created if missing).
void write_report_files(const SuiteReport& report, const MaterialParams& material,
                        const std::string& out_dir);

// One evaluated traction set, stringified losslessly by the caller.
struct EvaluationRecord {
  std::string formulation;
  std::vector<std::string> t;
  std::vector<std::string> g;
  std::string g_normal;                          // recorded, non-working
  std::optional<std::vector<std::string>> pi;    // only with a curve
};

std::string evaluation_to_json(const std::string& surface, const std::vector<std::string>& field,
                               const std::vector<std::string>& point, const std::string& mode,
                               const std::vector<EvaluationRecord>& records);

}  // namespace ccs
