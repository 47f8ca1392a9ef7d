#include "ccs/config.hpp"

#include <fstream>
#include <set>

#include "ccs/surface.hpp"

#include <json.hpp>

namespace ccs {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError(where + ": expected an integer or a \"p/q\" string");
}

MaterialParams material_from(const json& j) {
  require_keys(j, "material", {"mu", "lambda", "alpha1", "alpha2", "eta", "Lc"});
  MaterialParams m;
  if (j.contains("mu")) m.mu = rational_from(j["mu"], "material.mu");
  if (j.contains("lambda")) m.lambda = rational_from(j["lambda"], "material.lambda");
  if (j.contains("alpha1")) m.alpha1 = rational_from(j["alpha1"], "material.alpha1");
  if (j.contains("alpha2")) m.alpha2 = rational_from(j["alpha2"], "material.alpha2");
  if (j.contains("eta")) m.eta = rational_from(j["eta"], "material.eta");
  if (j.contains("Lc")) m.Lc = rational_from(j["Lc"], "material.Lc");
  m.validate();
  return m;
}

}  // namespace

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  require_keys(j, "config",
               {"mode", "tolerance", "seed", "material", "corpus", "surfaces", "fields",
                "quadrature", "out", "check", "evaluate"});

  Config cfg;
  if (j.contains("mode")) {
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "rational")
      cfg.suite.rational_mode = true;
    else if (mode == "float")
      cfg.suite.rational_mode = false;
    else
      throw ConfigError("mode must be \"rational\" or \"float\"");
  }
  if (j.contains("tolerance")) {
    cfg.suite.tolerance = j["tolerance"].get<double>();
    if (cfg.suite.tolerance < 0) throw ConfigError("tolerance must be >= 0");
  }
  if (j.contains("seed")) cfg.suite.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("material")) cfg.suite.material = material_from(j["material"]);
  if (j.contains("corpus")) {
    require_keys(j["corpus"], "corpus",
                 {"fields", "degree", "coeff_bound", "points_per_surface"});
    const auto& c = j["corpus"];
    if (c.contains("fields")) cfg.suite.corpus_fields = c["fields"].get<int>();
    if (c.contains("degree")) cfg.suite.corpus_degree = c["degree"].get<int>();
    if (c.contains("coeff_bound")) cfg.suite.coeff_bound = c["coeff_bound"].get<long>();
    if (c.contains("points_per_surface"))
      cfg.suite.points_per_surface = c["points_per_surface"].get<int>();
    if (cfg.suite.corpus_fields < 1 || cfg.suite.corpus_degree < 0 ||
        cfg.suite.coeff_bound < 1 || cfg.suite.points_per_surface < 1)
      throw ConfigError("corpus: counts must be positive, degree >= 0");
  }
  if (j.contains("surfaces")) {
    cfg.suite.surfaces.clear();
    for (const auto& s : j["surfaces"]) {
      const std::string name = s.get<std::string>();
      surface_by_name(name);  // validates
      cfg.suite.surfaces.push_back(name);
    }
    if (cfg.suite.surfaces.empty()) throw ConfigError("surfaces: need at least one");
  }
  if (j.contains("fields")) {
    for (const auto& f : j["fields"]) {
      if (!f.is_array() || f.size() != 3)
        throw ConfigError("fields: each entry is an array of 3 component literals");
      std::vector<std::string> comps;
      for (const auto& c : f) comps.push_back(c.get<std::string>());
      try {
        cfg.suite.explicit_fields.push_back(parse_vec_field(comps));
      } catch (const ParseError& e) {
        throw ConfigError(std::string("fields: ") + e.what());
      }
    }
  }
  if (j.contains("quadrature")) {
    require_keys(j["quadrature"], "quadrature", {"points", "tolerance"});
    const auto& q = j["quadrature"];
    if (q.contains("points")) cfg.suite.quad_points = q["points"].get<int>();
    if (q.contains("tolerance")) cfg.suite.quad_tolerance = q["tolerance"].get<double>();
    if (cfg.suite.quad_points < 2) throw ConfigError("quadrature.points must be >= 2");
  }
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("check")) cfg.suite.only_check = j["check"].get<std::string>();
  if (j.contains("evaluate")) {
    require_keys(j["evaluate"], "evaluate", {"surface", "surface_f", "field", "point"});
    const auto& e = j["evaluate"];
    if (e.contains("surface")) cfg.evaluate.surface = e["surface"].get<std::string>();
    if (e.contains("surface_f")) cfg.evaluate.custom_surface_f = e["surface_f"].get<std::string>();
    if (e.contains("field")) {
      cfg.evaluate.field.clear();
      for (const auto& c : e["field"]) cfg.evaluate.field.push_back(c.get<std::string>());
      if (cfg.evaluate.field.size() != 3)
        throw ConfigError("evaluate.field: need exactly 3 components");
    }
    if (e.contains("point")) {
      cfg.evaluate.point.clear();
      for (const auto& c : e["point"]) {
        if (c.is_string())
          cfg.evaluate.point.push_back(c.get<std::string>());
        else
          cfg.evaluate.point.push_back(c.dump());
      }
      if (cfg.evaluate.point.size() != 3)
        throw ConfigError("evaluate.point: need exactly 3 coordinates");
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

}  // namespace ccs
