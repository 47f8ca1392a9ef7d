#include "ccs/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccs {

namespace {

using nlohmann::json;

json material_json(const MaterialParams& m) {
  json j;
  j["mu"] = m.mu.str();
  j["lambda"] = m.lambda.str();
  j["alpha1"] = m.alpha1.str();
  j["alpha2"] = m.alpha2.str();
  j["kappa"] = m.kappa().str();
  if (!(m.alpha1 + m.alpha2).is_zero()) j["eta_derived"] = m.eta_derived().str();
  if (m.eta) j["eta"] = m.eta->str();
  if (m.Lc) j["Lc"] = m.Lc->str();
  j["curvature_definiteness"] = to_string(m.curvature_definiteness());
  j["conformal"] = m.conformal();
  return j;
}

}  // namespace

std::string report_to_json(const SuiteReport& report, const MaterialParams& material) {
  json j;
  j["report_version"] = 1;
  j["mode"] = report.mode;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  j["material"] = material_json(material);
  j["corpus"] = report.corpus_digest;
  j["all_pass"] = report.all_pass;
  j["warnings"] = report.warnings;
  j["wall_ms"] = report.wall_ms;
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    json cj;
    cj["id"] = c.id;
    cj["eq_tag"] = c.eq_tag;
    cj["description"] = c.description;
    cj["mode"] = to_string(c.mode);
    cj["pass"] = c.pass;
    cj["skipped"] = c.skipped;
    if (c.skipped) cj["skip_reason"] = c.skip_reason;
    cj["inputs_digest"] = c.inputs_digest;
    cj["residuals"] = json::array();
    for (const auto& res : c.residuals) {
      json rj;
      rj["name"] = res.name;
      // exact residuals are reported as the string "0" to keep the JSON lossless
      if (res.exact_zero)
        rj["value"] = "0";
      else
        rj["max_abs"] = res.max_abs;
      rj["exact_zero"] = res.exact_zero;
      cj["residuals"].push_back(rj);
    }
    j["checks"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

std::string report_to_markdown(const SuiteReport& report) {
  std::ostringstream os;
  os << "# Identity suite report\n\n";
  os << "- mode: " << report.mode << "\n";
  os << "- seed: " << report.seed << "\n";
  os << "- corpus: " << report.corpus_digest << "\n";
  os << "- result: " << (report.all_pass ? "PASS" : "FAIL") << "\n\n";
  os << "| id | tag | mode | residual | status |\n";
  os << "|----|-----|------|----------|--------|\n";
  for (const auto& c : report.checks) {
    double worst = 0;
    bool exact = true;
    for (const auto& res : c.residuals) {
      worst = std::max(worst, res.max_abs);
      exact = exact && res.exact_zero;
    }
    std::ostringstream rv;
    if (c.skipped)
      rv << "-";
    else if (exact)
      rv << "0 (exact)";
    else
      rv << worst;
    os << "| " << c.id << " | " << c.eq_tag << " | " << to_string(c.mode) << " | " << rv.str()
       << " | " << (c.skipped ? "SKIP: " + c.skip_reason : (c.pass ? "pass" : "FAIL")) << " |\n";
  }
  if (!report.warnings.empty()) {
    os << "\n## Warnings\n\n";
    for (const auto& w : report.warnings) os << "- " << w << "\n";
  }
  return os.str();
}

std::string evaluation_to_json(const std::string& surface, const std::vector<std::string>& field,
                               const std::vector<std::string>& point, const std::string& mode,
                               const std::vector<EvaluationRecord>& records) {
  json j;
  j["report_version"] = 1;
  j["mode"] = mode;
  j["surface"] = surface;
  j["field"] = field;
  j["point"] = point;
  j["tractions"] = json::array();
  for (const auto& r : records) {
    json tj;
    tj["formulation"] = r.formulation;
    tj["t"] = r.t;
    tj["g"] = r.g;
    tj["g_normal"] = r.g_normal;
    tj["g_normal_working"] = false;
    if (r.pi) tj["pi"] = *r.pi;
    j["tractions"].push_back(tj);
  }
  return j.dump(2) + "\n";
}

void write_report_files(const SuiteReport& report, const MaterialParams& material,
                        const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream out(fs::path(out_dir) / "report.json");
    if (!out) throw ConfigError("cannot write report.json in '" + out_dir + "'");
    out << report_to_json(report, material);
  }
  {
    std::ofstream out(fs::path(out_dir) / "report.md");
    if (!out) throw ConfigError("cannot write report.md in '" + out_dir + "'");
    out << report_to_markdown(report);
  }
}

}  // namespace ccs
