#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ccs/constitutive.hpp"
#include "ccs/fields.hpp"
#include "ccs/surface.hpp"

namespace ccs {

using Vec3d = Vec3<double>;

// Gauss-Legendre rule on [-1,1]; weights positive, exact for polynomials of
// degree 2n-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness_degree = 0;
};

QuadratureRule gauss_legendre(int n);

// Closed boundary curve of a patch: gamma(t) on [t0,t1] with the traversal
// direction chosen so that the outward conormal is nu = tau x n.
struct BoundaryCurve {
  std::function<Vec3d(double)> gamma;
  std::function<Vec3d(double)> dgamma;
  double t0 = 0, t1 = 0;
};

// Parametrized patch of a level surface with one closed boundary curve.
struct Patch {
  std::string name;
  LevelSurface surface;
  std::function<Vec3d(double, double)> chart;     // (a,b) -> x
  std::function<Vec3d(double, double)> chart_da;  // d chart / da
  std::function<Vec3d(double, double)> chart_db;  // d chart / db
  double a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  BoundaryCurve boundary;

  bool degenerate() const { return a0 >= a1 || b0 >= b1; }
};

Patch patch_hemisphere_upper();
Patch patch_hemisphere_lower();
Patch patch_disc();
Patch patch_ellipsoid_upper();
Patch patch_by_name(const std::string& name);

struct IntegralPair {
  double surface_side = 0;  // patch integral
  double boundary_side = 0; // line integral
  double residual() const { return std::abs(surface_side - boundary_side); }
};

// Integrates f over the patch with an n x n tensor Gauss-Legendre rule; the
// area element comes from the chart. Deterministic pairwise-tree summation.
double patch_integral(const Patch& patch, int n,
                      const std::function<double(const Vec3d&)>& f);

// Line integral of f ds over the boundary curve.
double curve_integral(const Patch& patch, int n,
                      const std::function<double(const Vec3d&, const Vec3d& tangent)>& f);

// Conormal at a boundary point: nu = unit(tangent) x n, outward by the
// traversal convention above.
Vec3d boundary_conormal(const Patch& patch, const Vec3d& x, const Vec3d& tangent);

// Surface divergence theorem for an ambient vector field:
//   int_S (T_ij v_j),k T_ik da = int_dS <v, nu> ds
IntegralPair surface_divergence_theorem(const Patch& patch, const PolyVec& v, int n);

// Same statement for a jet-expressible composite field.
IntegralPair surface_divergence_theorem_composite(
    const Patch& patch, const std::function<Vec3<Jet<double>>(const SurfaceJets<double>&)>& v,
    const std::function<Vec3d(const Vec3d&)>& v_value, int n);

// Stokes circulation: int_S <curl u, n> da = oint <u, gamma'> ds
IntegralPair stokes_circulation(const Patch& patch, const PolyVec& u, int n);

// Circulation of the composite field psi(x) * w(x) with psi = <n, m.n>:
// oint <tau, psi w> ds = int_S <n, curl(psi w)> da.
IntegralPair stokes_circulation_weighted(const Patch& patch, const ConstitutiveFields& cf,
                                         const PolyVec& w, int n);

// Split form over a closed surface: the surface-divergence integrals of two
// one-sided fields against the jump line integral on the shared rim.
IntegralPair surface_divergence_split(const Patch& upper, const Patch& lower,
                                      const PolyVec& v_plus, const PolyVec& v_minus, int n);

}  // namespace ccs
