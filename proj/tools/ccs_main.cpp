#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccs/config.hpp"
#include "ccs/constitutive.hpp"
#include "ccs/patch.hpp"
#include "ccs/report.hpp"
#include "ccs/suite.hpp"
#include "ccs/tractions.hpp"

namespace {

using namespace ccs;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

struct CliOptions {
  std::string config_path;
  std::string mode;
  std::string out_dir;
  std::string check_id;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> field;
  std::vector<std::string> point;
  std::string surface;
  std::string patch = "all";
};

Config load_effective_config(const CliOptions& opt) {
  Config cfg = opt.config_path.empty() ? Config::defaults() : load_config(opt.config_path);
  if (!opt.mode.empty()) {
    if (opt.mode == "rational")
      cfg.suite.rational_mode = true;
    else if (opt.mode == "float")
      cfg.suite.rational_mode = false;
    else
      throw ConfigError("--mode must be rational or float");
  }
  if (opt.seed_set) cfg.suite.seed = opt.seed;
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (!opt.check_id.empty()) cfg.suite.only_check = opt.check_id;
  if (!opt.field.empty()) {
    if (opt.field.size() != 3) throw ConfigError("--field needs exactly 3 components");
    cfg.evaluate.field = opt.field;
  }
  if (!opt.point.empty()) {
    if (opt.point.size() != 3) throw ConfigError("--point needs exactly 3 coordinates");
    cfg.evaluate.point = opt.point;
  }
  if (!opt.surface.empty()) cfg.evaluate.surface = opt.surface;
  return cfg;
}

int cmd_verify(const CliOptions& opt) {
  const Config cfg = load_effective_config(opt);
  const SuiteReport report = run_suite(cfg.suite);
  std::cout << report_to_markdown(report);
  if (!cfg.out_dir.empty()) write_report_files(report, cfg.suite.material, cfg.out_dir);
  return report.all_pass ? kExitPass : kExitCheckFailure;
}

std::string scalar_str(const QuadExt& v) { return v.str(); }
std::string scalar_str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

template <class K>
void print_vec(const std::string& label, const Vec3<K>& v) {
  std::cout << label << ":";
  for (int i = 0; i < 3; ++i) std::cout << "  [" << (i + 1) << "] " << scalar_str(v(i));
  std::cout << "\n";
}

template <class K>
void print_mat(const std::string& label, const Mat3<K>& m) {
  std::cout << label << ":\n";
  for (int i = 0; i < 3; ++i) {
    std::cout << "  ";
    for (int j = 0; j < 3; ++j)
      std::cout << "(" << (i + 1) << "," << (j + 1) << ")=" << scalar_str(m(i, j)) << "  ";
    std::cout << "\n";
  }
}

template <class K>
void print_ten3(const std::string& label, const Ten3<K>& t) {
  std::cout << label << " (flattened i,j,k):\n";
  for (int i = 0; i < 3; ++i) {
    std::cout << "  ";
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        std::cout << "(" << (i + 1) << "," << (j + 1) << "," << (k + 1)
                  << ")=" << scalar_str(t(i, j, k)) << " ";
    std::cout << "\n";
  }
}

template <class K>
std::vector<std::string> vec_strs(const Vec3<K>& v) {
  return {scalar_str(v(0)), scalar_str(v(1)), scalar_str(v(2))};
}

template <class K, class PointMaker>
int evaluate_with(const Config& cfg, const LevelSurface& surf, const PolyVec& u,
                  PointMaker&& make_pt) {
  const ConstitutiveFields cf(u, cfg.suite.material);
  const SurfacePoint<K> p = make_pt(surf);
  const SurfaceJets<K> J = surface_jets(surf, p.x);

  print_mat("sigma", eval_mat(cf.sigma, p.x));
  print_mat("couple stress m", eval_mat(cf.mtilde, p.x));
  print_ten3("hyperstress", eval_ten3(cf.hyper, p.x));
  print_mat("nonlocal force stress tau", eval_mat(cf.tau, p.x));
  print_vec("t_int  [" + std::string(to_string(Formulation::MindlinTiersten)) + "]",
            traction_mindlin(cf, p, J));
  print_vec("t_int  [" + std::string(to_string(Formulation::StronglyIndependent)) + "]",
            traction_strong(cf, p, J, StrongRoute::Split));
  print_vec("g_int  [" + std::string(to_string(Formulation::MindlinTiersten)) + "]",
            doubleforce_mindlin(cf, p));
  print_vec("g_int  [" + std::string(to_string(Formulation::StronglyIndependent)) + "]",
            doubleforce_strong(cf, p));

  if (!cfg.out_dir.empty()) {
    std::vector<EvaluationRecord> records;
    for (Formulation f : {Formulation::MindlinTiersten, Formulation::StronglyIndependent,
                          Formulation::ThirdOrder}) {
      const TractionSet<K> ts = evaluate_tractions(cf, surf, p, f);
      EvaluationRecord rec;
      rec.formulation = to_string(f);
      rec.t = vec_strs(ts.t);
      rec.g = vec_strs(ts.g);
      rec.g_normal = scalar_str(ts.g_normal);
      records.push_back(rec);
    }
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream out(std::filesystem::path(cfg.out_dir) / "evaluate.json");
    out << evaluation_to_json(surf.name, cfg.evaluate.field, cfg.evaluate.point,
                              cfg.suite.rational_mode ? "rational" : "float", records);
    std::cout << "\nwrote " << cfg.out_dir << "/evaluate.json\n";
  }
  return kExitPass;
}

int cmd_evaluate(const CliOptions& opt) {
  const Config cfg = load_effective_config(opt);
  LevelSurface surf = cfg.evaluate.custom_surface_f
                          ? LevelSurface("custom", Poly::parse(*cfg.evaluate.custom_surface_f))
                          : surface_by_name(cfg.evaluate.surface);
  const PolyVec u = parse_vec_field(cfg.evaluate.field);
  std::cout << "field u = (" << u(0).str() << ", " << u(1).str() << ", " << u(2).str() << ")\n";
  std::cout << "surface " << surf.name << ": F = " << surf.F.str() << "\n";
  std::cout << "point = (" << cfg.evaluate.point[0] << ", " << cfg.evaluate.point[1] << ", "
            << cfg.evaluate.point[2] << ")\n\n";
  if (cfg.suite.rational_mode) {
    Vec3<Rational> x(Rational::parse(cfg.evaluate.point[0]),
                     Rational::parse(cfg.evaluate.point[1]),
                     Rational::parse(cfg.evaluate.point[2]));
    return evaluate_with<QuadExt>(cfg, surf, u,
                                  [&](const LevelSurface& s) { return surface_point_exact(s, x); });
  }
  Vec3<double> x(std::stod(cfg.evaluate.point[0]), std::stod(cfg.evaluate.point[1]),
                 std::stod(cfg.evaluate.point[2]));
  return evaluate_with<double>(
      cfg, surf, u, [&](const LevelSurface& s) { return surface_point_float(s, x); });
}

int cmd_integrals(const CliOptions& opt) {
  const Config cfg = load_effective_config(opt);
  SuiteConfig sc = cfg.suite;
  if (opt.patch == "degenerate") {
    Patch p = patch_disc();
    p.a1 = p.a0;  // zero measure
    patch_integral(p, 4, [](const Vec3d&) { return 1.0; });  // throws GeometryError
  } else if (opt.patch != "all") {
    patch_by_name(opt.patch);  // validates the name
  }
  sc.only_check = "I11";
  SuiteReport r11 = run_suite(sc);
  sc.only_check = "I12";
  SuiteReport r12 = run_suite(sc);
  bool ok = true;
  for (const SuiteReport* rep : {&r11, &r12})
    for (const auto& c : rep->checks) {
      if (c.skipped) continue;
      std::cout << c.id << " [" << c.eq_tag << "]\n";
      for (const auto& res : c.residuals)
        std::cout << "  " << res.name << ": " << res.max_abs << "\n";
      std::cout << "  -> " << (c.pass ? "pass" : "FAIL") << "\n";
      ok = ok && c.pass;
    }
  return ok ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification tool for the indeterminate couple stress model"};
  app.require_subcommand(1);
  CliOptions opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON config file");
    sub->add_option("--mode", opt.mode, "rational|float");
    sub->add_option("--out", opt.out_dir, "output directory for reports");
    sub->add_option("--seed", opt.seed, "corpus seed")->each([&](const std::string&) {
      opt.seed_set = true;
    });
  };

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify);
  verify->add_option("--check", opt.check_id, "run a single catalogue item (e.g. I03)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "print all tensors at a surface point");
  add_common(evaluate);
  evaluate->add_option("--field", opt.field, "3 component literals")->expected(3);
  evaluate->add_option("--point", opt.point, "3 coordinates")->expected(3);
  evaluate->add_option("--surface", opt.surface, "surface preset name");

  CLI::App* integrals = app.add_subcommand("integrals", "run the integral-theorem checks");
  add_common(integrals);
  integrals->add_option("--patch", opt.patch, "patch preset (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (evaluate->parsed()) return cmd_evaluate(opt);
    if (integrals->parsed()) return cmd_integrals(opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
