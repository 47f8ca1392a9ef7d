#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/fields.hpp"
#include "ccs/jet.hpp"
#include "ccs/material.hpp"
#include "ccs/poly.hpp"
#include "ccs/prng.hpp"
#include "ccs/quadext.hpp"

namespace ccs {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Level-set surface {x : F(x) = 0} with unit normal n = sign * grad F / |grad F|.
struct LevelSurface {
  std::string name;
  Poly F;
  int orientation = 1;
  PolyVec grad_F;

  LevelSurface() = default;
  LevelSurface(std::string name_, Poly f, int orient = 1)
      : name(std::move(name_)), F(std::move(f)), orientation(orient), grad_F(grad_scalar(F)) {}

  // exact membership in rational mode; scaled tolerance in float mode
  bool contains(const Vec3<Rational>& x) const { return F.eval(x).is_zero(); }
  bool contains(const Vec3<double>& x, double tol = 1e-12) const {
    const double nx = std::sqrt(dot(x, x));
    const double scale = 1.0 + std::pow(nx, std::max(F.degree(), 0));
    return std::abs(F.eval(x)) < tol * scale;
  }
};

inline LevelSurface surface_plane() { return LevelSurface("plane", Poly::var(2)); }

inline LevelSurface surface_sphere() {
  const Poly x1 = Poly::var(0), x2 = Poly::var(1), x3 = Poly::var(2);
  return LevelSurface("sphere", x1 * x1 + x2 * x2 + x3 * x3 - Poly(1));
}

inline LevelSurface surface_ellipsoid() {
  const Poly x1 = Poly::var(0), x2 = Poly::var(1), x3 = Poly::var(2);
  return LevelSurface("ellipsoid", (x1 * x1).scaled(Rational(1, 4)) + x2 * x2 + x3 * x3 - Poly(1));
}

// A non-quadric level set; exercises second derivatives of F that are not
// constant.
inline LevelSurface surface_quartic() {
  const Poly x1 = Poly::var(0), x2 = Poly::var(1), x3 = Poly::var(2);
  return LevelSurface("quartic", x1 * x1 * x1 * x1 + x2 * x2 + x3 * x3 - Poly(2));
}

inline LevelSurface surface_by_name(const std::string& name) {
  if (name == "plane") return surface_plane();
  if (name == "sphere") return surface_sphere();
  if (name == "ellipsoid") return surface_ellipsoid();
  if (name == "quartic") return surface_quartic();
  throw ConfigError("unknown surface preset '" + name + "'");
}

// Point on a surface with normal, projectors and an orthonormal triad
// (tau, nu, n) with tau = n x nu.
template <class K>
struct SurfacePoint {
  Vec3<K> x;
  Vec3<K> n;
  Mat3<K> T;  // 1 - n(x)n
  Mat3<K> Q;  // n(x)n
  Vec3<K> tau, nu;
};

namespace detail {

template <class K>
void fill_projectors(SurfacePoint<K>& p) {
  p.Q = outer(p.n, p.n);
  p.T = Mat3<K>::identity() - p.Q;
}

// Exact orthonormal tangent pair from a Householder reflection mapping e3 to
// n. Stays inside Q(sqrt(s)); no second radical is introduced.
template <class K>
void fill_triad_reflection(SurfacePoint<K>& p) {
  const Vec3<K> e1(ScalarOps<K>::one(), ScalarOps<K>::zero(), ScalarOps<K>::zero());
  const Vec3<K> e3(ScalarOps<K>::zero(), ScalarOps<K>::zero(), ScalarOps<K>::one());
  const Vec3<K> w = p.n - e3;
  const K ww = dot(w, w);
  if (ScalarOps<K>::is_zero(ww, 1e-14)) {
    p.nu = e1;
  } else {
    const K f = (ScalarOps<K>::from_ratio(2, 1) * dot(w, e1)) / ww;
    p.nu = e1 - f * w;
  }
  p.tau = cross(p.n, p.nu);
}

}  // namespace detail

// Rational-mode surface point: x must lie exactly on F = 0 and be regular.
// All derived data live in the quadratic extension Q(sqrt(|grad F(x)|^2)).
inline SurfacePoint<QuadExt> surface_point_exact(const LevelSurface& surf,
                                                 const Vec3<Rational>& x) {
  if (!surf.contains(x))
    throw GeometryError("point is not on surface '" + surf.name + "'");
  const Vec3<Rational> gF(surf.grad_F(0).eval(x), surf.grad_F(1).eval(x),
                          surf.grad_F(2).eval(x));
  const Rational s = dot(gF, gF);
  if (s.is_zero()) throw GeometryError("geometric singularity: grad F = 0");
  const QuadExt g = QuadExt::sqrt_of(s);
  SurfacePoint<QuadExt> p;
  const Rational orient(surf.orientation);
  for (int i = 0; i < 3; ++i) {
    p.x(i) = QuadExt(x(i));
    p.n(i) = QuadExt(gF(i) * orient) / g;
  }
  detail::fill_projectors(p);
  detail::fill_triad_reflection(p);
  return p;
}

// Float-mode surface point; membership within a scaled tolerance. An
// optional hint picks the nu direction (Gram-Schmidt); hint collinear with
// n is a frame degeneracy.
inline SurfacePoint<double> surface_point_float(const LevelSurface& surf, const Vec3<double>& x,
                                                std::optional<Vec3<double>> hint = {},
                                                double tol = 1e-12) {
  if (!surf.contains(x, tol))
    throw GeometryError("point is not on surface '" + surf.name + "' (float tolerance)");
  const Vec3<double> gF(surf.grad_F(0).eval(x), surf.grad_F(1).eval(x), surf.grad_F(2).eval(x));
  const double s = dot(gF, gF);
  if (s < 1e-28) throw GeometryError("geometric singularity: grad F = 0");
  const double g = std::sqrt(s);
  SurfacePoint<double> p;
  p.x = x;
  p.n = (surf.orientation / g) * gF;
  detail::fill_projectors(p);
  Vec3<double> h;
  if (hint) {
    h = *hint;
  } else {
    // least-aligned axis keeps the Gram-Schmidt step well conditioned
    int a = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(p.n(i)) < std::abs(p.n(a))) a = i;
    h = Vec3<double>(0, 0, 0);
    h(a) = 1.0;
  }
  const Vec3<double> raw = h - dot(h, p.n) * p.n;
  const double rn = std::sqrt(dot(raw, raw));
  if (rn < 1e-10) throw GeometryError("frame degeneracy: hint collinear with n");
  p.nu = (1.0 / rn) * raw;
  p.tau = cross(p.n, p.nu);
  return p;
}

// Validates a user triad hint in rational mode (the exact triad itself comes
// from the reflection construction).
inline void check_hint_exact(const SurfacePoint<QuadExt>& p, const Vec3<Rational>& hint) {
  Vec3<QuadExt> h;
  for (int i = 0; i < 3; ++i) h(i) = QuadExt(hint(i));
  const Vec3<QuadExt> raw = h - dot(h, p.n) * p.n;
  if (all_zero(raw)) throw GeometryError("frame degeneracy: hint collinear with n");
}

// First-order jets of the surface data at a point: ambient coordinates, the
// normal field n(x) = grad F/|grad F| and T(x) = 1 - n(x)n. Everything a
// surface composite needs in order to be differentiated exactly.
template <class K>
struct SurfaceJets {
  Vec3<Jet<K>> x;
  Vec3<Jet<K>> n;
  Mat3<Jet<K>> T;
};

template <class K>
SurfaceJets<K> surface_jets(const LevelSurface& surf, const Vec3<K>& x0) {
  SurfaceJets<K> J;
  for (int i = 0; i < 3; ++i) J.x(i) = Jet<K>::seed(x0(i), i);
  Vec3<Jet<K>> gF;
  for (int i = 0; i < 3; ++i) gF(i) = surf.grad_F(i).eval(J.x);
  const Jet<K> s = dot(gF, gF);
  if (ScalarOps<K>::is_zero(s.v, 1e-28)) throw GeometryError("geometric singularity: grad F = 0");
  const Jet<K> g = jet_sqrt(s);
  const Jet<K> orient = ScalarOps<Jet<K>>::from_ratio(surf.orientation, 1);
  for (int i = 0; i < 3; ++i) J.n(i) = orient * gF(i) / g;
  J.T = Mat3<Jet<K>>::identity() - outer(J.n, J.n);
  return J;
}

template <class K>
Vec3<K> jet_gradient(const Jet<K>& j) {
  return Vec3<K>(j.d[0], j.d[1], j.d[2]);
}

// grad[M.T] : T with the outer projector taken at the point:
// result_i = d_p[(M.T)_ij] T_pj. Only tangential derivatives of M enter.
// M is any jet-expressible composite of polynomial fields and surface data.
template <class K, class F>
Vec3<K> tangential_gradient_contraction(const SurfacePoint<K>& p, const SurfaceJets<K>& J,
                                        F&& field) {
  const Mat3<Jet<K>> X = field(J);
  const Mat3<Jet<K>> XT = mat_mul(X, J.T);
  Vec3<K> r;
  for (int i = 0; i < 3; ++i) {
    K s = ScalarOps<K>::zero();
    for (int j = 0; j < 3; ++j)
      for (int q = 0; q < 3; ++q) s += XT(i, j).d[q] * p.T(q, j);
    r(i) = s;
  }
  return r;
}

// Variant without the inner .T (used for grad[anti(n)] : T).
template <class K, class F>
Vec3<K> gradient_colon_t(const SurfacePoint<K>& p, const SurfaceJets<K>& J, F&& field) {
  const Mat3<Jet<K>> X = field(J);
  Vec3<K> r;
  for (int i = 0; i < 3; ++i) {
    K s = ScalarOps<K>::zero();
    for (int j = 0; j < 3; ++j)
      for (int q = 0; q < 3; ++q) s += X(i, j).d[q] * p.T(q, j);
    r(i) = s;
  }
  return r;
}

// grad[anti(n)] : T — identically zero on every C^2 level set; evaluated,
// not assumed.
template <class K>
Vec3<K> anti_normal_vanishing(const LevelSurface& surf, const SurfacePoint<K>& p) {
  const SurfaceJets<K> J = surface_jets(surf, p.x);
  return gradient_colon_t(p, J, [](const SurfaceJets<K>& jj) { return anti(jj.n); });
}

// ----- jump across a curve --------------------------------------------------
// [[<a, nu>]] = <a+ - a-, nu> with nu = nu+; the matrix form pairs each side
// with its own conormal: [[A.nu]] = (A+ - A-).nu.

template <class K>
K scalar_jump(const Vec3<K>& a_plus, const Vec3<K>& a_minus, const Vec3<K>& nu) {
  return dot(a_plus - a_minus, nu);
}

template <class K>
Vec3<K> mat_jump(const Mat3<K>& a_plus, const Mat3<K>& a_minus, const Vec3<K>& nu) {
  return mat_vec(a_plus - a_minus, nu);
}

// ----- deterministic rational points on the preset surfaces -----------------

namespace detail {

inline bool generic_enough(const Vec3<Rational>& x) {
  // no coordinate-axis symmetry: all components nonzero with distinct
  // absolute values
  for (int i = 0; i < 3; ++i)
    if (x(i).is_zero()) return false;
  return x(0).abs() != x(1).abs() && x(0).abs() != x(2).abs() && x(1).abs() != x(2).abs();
}

inline Vec3<Rational> sphere_point_from(Prng& rng) {
  // stereographic image of a rational pair; lands exactly on the unit sphere
  const Rational a = rng.next_rational(8), b = rng.next_rational(8);
  const Rational d = a * a + b * b + Rational(1);
  return Vec3<Rational>(Rational(2) * a / d, Rational(2) * b / d,
                        (a * a + b * b - Rational(1)) / d);
}

}  // namespace detail

inline std::vector<Vec3<Rational>> rational_surface_points(const LevelSurface& surf, Prng& rng,
                                                           int count) {
  std::vector<Vec3<Rational>> pts;
  int guard = 0;
  while (static_cast<int>(pts.size()) < count) {
    if (++guard > 1000 * count) throw GeometryError("point generation stalled");
    Vec3<Rational> x;
    if (surf.name == "plane") {
      x = Vec3<Rational>(rng.next_rational(8), rng.next_rational(8), Rational(0));
      if (x(0).is_zero() || x(1).is_zero() || x(0).abs() == x(1).abs()) continue;
      pts.push_back(x);
      continue;
    } else if (surf.name == "sphere") {
      x = detail::sphere_point_from(rng);
    } else if (surf.name == "ellipsoid") {
      const Vec3<Rational> s = detail::sphere_point_from(rng);
      x = Vec3<Rational>(Rational(2) * s(0), s(1), s(2));
    } else if (surf.name == "quartic") {
      const Rational t = rng.next_rational(6);
      const Rational d = t * t + Rational(1);
      const Rational c = (Rational(1) - t * t) / d, s2 = Rational(2) * t / d;
      x = Vec3<Rational>(rng.next_u64() & 1 ? Rational(1) : Rational(-1), c, s2);
    } else {
      throw GeometryError("no rational point generator for surface '" + surf.name + "'");
    }
    if (!detail::generic_enough(x)) continue;
    if (!surf.contains(x)) throw GeometryError("generated point left the surface");
    pts.push_back(x);
  }
  return pts;
}

}  // namespace ccs
