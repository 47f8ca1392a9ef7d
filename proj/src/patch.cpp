#include "ccs/patch.hpp"

#include "ccs/tractions.hpp"

#include <cmath>
#include <numbers>

namespace ccs {

namespace {

constexpr double kPi = std::numbers::pi;

// Deterministic pairwise-tree reduction; float results are run-to-run
// stable and insensitive to any future parallel split.
double tree_sum(std::vector<double>& v) {
  if (v.empty()) return 0.0;
  size_t n = v.size();
  while (n > 1) {
    const size_t half = (n + 1) / 2;
    for (size_t i = 0; i < n / 2; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2 == 1) v[n / 2] = v[n - 1];
    n = half;
  }
  return v[0];
}

double legendre(int n, double x, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    dp = 0;
    return 1.0;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  dp = n * (x * p1 - p0) / (x * x - 1.0);
  return p1;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.exactness_degree = 2 * n - 1;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      const double p = legendre(n, x, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, dp);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

Patch patch_hemisphere_upper() {
  Patch p;
  p.name = "hemisphere_upper";
  p.surface = surface_sphere();
  p.chart = [](double th, double ph) {
    return Vec3d(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  };
  p.chart_da = [](double th, double ph) {
    return Vec3d(std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th));
  };
  p.chart_db = [](double th, double ph) {
    return Vec3d(-std::sin(th) * std::sin(ph), std::sin(th) * std::cos(ph), 0.0);
  };
  p.a0 = 0;
  p.a1 = kPi / 2;
  p.b0 = 0;
  p.b1 = 2 * kPi;
  p.boundary.gamma = [](double t) { return Vec3d(std::cos(t), std::sin(t), 0.0); };
  p.boundary.dgamma = [](double t) { return Vec3d(-std::sin(t), std::cos(t), 0.0); };
  p.boundary.t0 = 0;
  p.boundary.t1 = 2 * kPi;
  return p;
}

Patch patch_hemisphere_lower() {
  Patch p;
  p.name = "hemisphere_lower";
  p.surface = surface_sphere();
  p.chart = [](double th, double ph) {
    return Vec3d(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  };
  p.chart_da = [](double th, double ph) {
    return Vec3d(std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th));
  };
  p.chart_db = [](double th, double ph) {
    return Vec3d(-std::sin(th) * std::sin(ph), std::sin(th) * std::cos(ph), 0.0);
  };
  p.a0 = kPi / 2;
  p.a1 = kPi;
  p.b0 = 0;
  p.b1 = 2 * kPi;
  // reversed traversal: the outward conormal of the lower patch points up
  p.boundary.gamma = [](double t) { return Vec3d(std::cos(-t), std::sin(-t), 0.0); };
  p.boundary.dgamma = [](double t) { return Vec3d(std::sin(-t), -std::cos(-t), 0.0); };
  p.boundary.t0 = 0;
  p.boundary.t1 = 2 * kPi;
  return p;
}

Patch patch_disc() {
  Patch p;
  p.name = "disc";
  p.surface = surface_plane();
  p.chart = [](double r, double ph) { return Vec3d(r * std::cos(ph), r * std::sin(ph), 0.0); };
  p.chart_da = [](double, double ph) { return Vec3d(std::cos(ph), std::sin(ph), 0.0); };
  p.chart_db = [](double r, double ph) { return Vec3d(-r * std::sin(ph), r * std::cos(ph), 0.0); };
  p.a0 = 0;
  p.a1 = 1;
  p.b0 = 0;
  p.b1 = 2 * kPi;
  p.boundary.gamma = [](double t) { return Vec3d(std::cos(t), std::sin(t), 0.0); };
  p.boundary.dgamma = [](double t) { return Vec3d(-std::sin(t), std::cos(t), 0.0); };
  p.boundary.t0 = 0;
  p.boundary.t1 = 2 * kPi;
  return p;
}

Patch patch_ellipsoid_upper() {
  Patch p;
  p.name = "ellipsoid_upper";
  p.surface = surface_ellipsoid();
  p.chart = [](double th, double ph) {
    return Vec3d(2.0 * std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  };
  p.chart_da = [](double th, double ph) {
    return Vec3d(2.0 * std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th));
  };
  p.chart_db = [](double th, double ph) {
    return Vec3d(-2.0 * std::sin(th) * std::sin(ph), std::sin(th) * std::cos(ph), 0.0);
  };
  p.a0 = 0;
  p.a1 = kPi / 2;
  p.b0 = 0;
  p.b1 = 2 * kPi;
  p.boundary.gamma = [](double t) { return Vec3d(2.0 * std::cos(t), std::sin(t), 0.0); };
  p.boundary.dgamma = [](double t) { return Vec3d(-2.0 * std::sin(t), std::cos(t), 0.0); };
  p.boundary.t0 = 0;
  p.boundary.t1 = 2 * kPi;
  return p;
}

Patch patch_by_name(const std::string& name) {
  if (name == "hemisphere") return patch_hemisphere_upper();
  if (name == "hemisphere_lower") return patch_hemisphere_lower();
  if (name == "disc") return patch_disc();
  if (name == "ellipsoid") return patch_ellipsoid_upper();
  throw ConfigError("unknown patch '" + name + "'");
}

double patch_integral(const Patch& patch, int n,
                      const std::function<double(const Vec3d&)>& f) {
  if (patch.degenerate()) throw GeometryError("degenerate patch: zero measure");
  const QuadratureRule rule = gauss_legendre(n);
  const double am = 0.5 * (patch.a1 - patch.a0), ac = 0.5 * (patch.a1 + patch.a0);
  const double bm = 0.5 * (patch.b1 - patch.b0), bc = 0.5 * (patch.b1 + patch.b0);
  std::vector<double> contrib;
  contrib.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double a = ac + am * rule.nodes[i];
      const double b = bc + bm * rule.nodes[j];
      const Vec3d xa = patch.chart_da(a, b);
      const Vec3d xb = patch.chart_db(a, b);
      const double da = std::sqrt(norm2(cross(xa, xb)));
      contrib.push_back(rule.weights[i] * rule.weights[j] * am * bm * da *
                        f(patch.chart(a, b)));
    }
  return tree_sum(contrib);
}

double curve_integral(const Patch& patch, int n,
                      const std::function<double(const Vec3d&, const Vec3d&)>& f) {
  if (patch.degenerate()) throw GeometryError("degenerate patch: zero measure");
  const QuadratureRule rule = gauss_legendre(n);
  const double tm = 0.5 * (patch.boundary.t1 - patch.boundary.t0);
  const double tc = 0.5 * (patch.boundary.t1 + patch.boundary.t0);
  std::vector<double> contrib;
  contrib.reserve(rule.nodes.size());
  for (int i = 0; i < n; ++i) {
    const double t = tc + tm * rule.nodes[i];
    const Vec3d x = patch.boundary.gamma(t);
    const Vec3d dx = patch.boundary.dgamma(t);
    contrib.push_back(rule.weights[i] * tm * f(x, dx));
  }
  return tree_sum(contrib);
}

Vec3d boundary_conormal(const Patch& patch, const Vec3d& x, const Vec3d& tangent) {
  const SurfacePoint<double> sp = surface_point_float(patch.surface, x);
  const double tn = std::sqrt(norm2(tangent));
  const Vec3d unit_tan = (1.0 / tn) * tangent;
  return cross(unit_tan, sp.n);
}

static double surface_divergence_integrand(
    const Patch& patch, const Vec3d& x,
    const std::function<Vec3<Jet<double>>(const SurfaceJets<double>&)>& v) {
  const SurfacePoint<double> sp = surface_point_float(patch.surface, x, {}, 1e-9);
  const SurfaceJets<double> J = surface_jets(patch.surface, x);
  const Vec3<Jet<double>> tv = mat_vec(J.T, v(J));
  // (T_ij v_j),k T_ik
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) s += tv(i).d[k] * sp.T(i, k);
  return s;
}

IntegralPair surface_divergence_theorem(const Patch& patch, const PolyVec& v, int n) {
  return surface_divergence_theorem_composite(
      patch, [&v](const SurfaceJets<double>& J) { return eval_vec(v, J.x); },
      [&v](const Vec3d& x) { return eval_vec(v, x); }, n);
}

IntegralPair surface_divergence_theorem_composite(
    const Patch& patch, const std::function<Vec3<Jet<double>>(const SurfaceJets<double>&)>& v,
    const std::function<Vec3d(const Vec3d&)>& v_value, int n) {
  IntegralPair out;
  out.surface_side = patch_integral(
      patch, n, [&](const Vec3d& x) { return surface_divergence_integrand(patch, x, v); });
  out.boundary_side = curve_integral(patch, n, [&](const Vec3d& x, const Vec3d& tangent) {
    const Vec3d nu = boundary_conormal(patch, x, tangent);
    return dot(v_value(x), nu) * std::sqrt(norm2(tangent));
  });
  return out;
}

IntegralPair stokes_circulation(const Patch& patch, const PolyVec& u, int n) {
  const PolyVec c = curl_vec(u);
  IntegralPair out;
  out.surface_side = patch_integral(patch, n, [&](const Vec3d& x) {
    const SurfacePoint<double> sp = surface_point_float(patch.surface, x, {}, 1e-9);
    return dot(eval_vec(c, x), sp.n);
  });
  out.boundary_side = curve_integral(patch, n, [&](const Vec3d& x, const Vec3d& dx) {
    return dot(eval_vec(u, x), dx);
  });
  return out;
}

IntegralPair stokes_circulation_weighted(const Patch& patch, const ConstitutiveFields& cf,
                                         const PolyVec& w, int n) {
  IntegralPair out;
  out.surface_side = patch_integral(patch, n, [&](const Vec3d& x) {
    const SurfacePoint<double> sp = surface_point_float(patch.surface, x, {}, 1e-9);
    const SurfaceJets<double> J = surface_jets(patch.surface, x);
    const Jet<double> psi = psi_jet(cf, J);
    // curl(psi w) = grad psi x w + psi curl w
    const Vec3d grad_psi = jet_gradient(psi);
    const Vec3d val =
        cross(grad_psi, eval_vec(w, x)) + psi.v * eval_vec(curl_vec(w), x);
    return dot(val, sp.n);
  });
  out.boundary_side = curve_integral(patch, n, [&](const Vec3d& x, const Vec3d& dx) {
    const SurfacePoint<double> sp = surface_point_float(patch.surface, x, {}, 1e-9);
    const Mat3<double> m = eval_mat(cf.mtilde, x);
    const double psi = dot(sp.n, mat_vec(m, sp.n));
    // <tau, psi w> ds with tau ds = gamma'(t) dt
    return psi * dot(eval_vec(w, x), dx);
  });
  return out;
}

IntegralPair surface_divergence_split(const Patch& upper, const Patch& lower,
                                      const PolyVec& v_plus, const PolyVec& v_minus, int n) {
  IntegralPair out;
  const IntegralPair up = surface_divergence_theorem(upper, v_plus, n);
  const IntegralPair low = surface_divergence_theorem(lower, v_minus, n);
  out.surface_side = up.surface_side + low.surface_side;
  // rim integral of [[<v, nu>]] over the shared boundary, nu = nu+ of the
  // upper patch
  out.boundary_side = curve_integral(upper, n, [&](const Vec3d& x, const Vec3d& tangent) {
    const Vec3d nu = boundary_conormal(upper, x, tangent);
    return dot(eval_vec(v_plus, x) - eval_vec(v_minus, x), nu) * std::sqrt(norm2(tangent));
  });
  return out;
}

}  // namespace ccs
