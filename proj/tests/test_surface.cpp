#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "ccs/surface.hpp"
#include "ccs/tractions.hpp"
#include "helpers.hpp"

using namespace ccs;
using namespace ccs::testing;

namespace {

QuadExt qe(long n, long d = 1) { return QuadExt(Rational(n, d)); }

// Surface finite-difference oracle for grad[M.T]:T on a two-parameter chart:
// sum_ab g^{ab} [D_{t_a}(MT)] . t_b with t_a the chart tangents and g the
// first fundamental form.
Vec3<double> chart_fd_tgc(const LevelSurface& surf,
                          const std::function<Vec3<double>(double, double)>& chart, double a,
                          double b, const std::function<Mat3<double>(const Vec3<double>&)>& M,
                          double h = 1e-5) {
  auto mt = [&](double aa, double bb) {
    const Vec3<double> x = chart(aa, bb);
    const SurfacePoint<double> p = surface_point_float(surf, x, {}, 1e-7);
    return mat_mul(M(x), p.T);
  };
  const Vec3<double> ta = (0.5 / h) * (chart(a + h, b) - chart(a - h, b));
  const Vec3<double> tb = (0.5 / h) * (chart(a, b + h) - chart(a, b - h));
  const Mat3<double> da = (0.5 / h) * (mt(a + h, b) - mt(a - h, b));
  const Mat3<double> db = (0.5 / h) * (mt(a, b + h) - mt(a, b - h));
  // inverse metric
  const double g11 = dot(ta, ta), g12 = dot(ta, tb), g22 = dot(tb, tb);
  const double det = g11 * g22 - g12 * g12;
  const double i11 = g22 / det, i12 = -g12 / det, i22 = g11 / det;
  Vec3<double> r(0, 0, 0);
  const Mat3<double> ds[2] = {da, db};
  const Vec3<double> ts[2] = {ta, tb};
  const double inv[2][2] = {{i11, i12}, {i12, i22}};
  for (int aa = 0; aa < 2; ++aa)
    for (int bb = 0; bb < 2; ++bb) r = r + inv[aa][bb] * mat_vec(ds[aa], ts[bb]);
  return r;
}

}  // namespace

TEST_CASE("normals and projectors on the preset surfaces") {
  // sphere at (0,0,1)
  const LevelSurface sph = surface_sphere();
  const auto p = surface_point_exact(sph, Vec3<Rational>(Rational(0), Rational(0), Rational(1)));
  CHECK(p.n(0).is_zero());
  CHECK(p.n(1).is_zero());
  CHECK(p.n(2) == qe(1));
  CHECK(p.T(0, 0) == qe(1));
  CHECK(p.T(1, 1) == qe(1));
  CHECK(p.T(2, 2).is_zero());

  // plane: n = e3 everywhere
  const LevelSurface pl = surface_plane();
  const auto pp = surface_point_exact(pl, Vec3<Rational>(Rational(5, 3), Rational(-2), Rational(0)));
  CHECK(pp.n(2) == qe(1));

  // ellipsoid at (2,0,0): n = (1,0,0)
  const LevelSurface el = surface_ellipsoid();
  const auto pe = surface_point_exact(el, Vec3<Rational>(Rational(2), Rational(0), Rational(0)));
  CHECK(pe.n(0) == qe(1));
  CHECK(pe.n(1).is_zero());
  CHECK(pe.n(2).is_zero());

  // membership and singularity errors
  CHECK_THROWS_AS(surface_point_exact(sph, Vec3<Rational>(Rational(2), Rational(0), Rational(0))),
                  GeometryError);
  // F = x.x has a singular point at the origin (gradient vanishes there)
  const Poly x1 = Poly::var(0), x2 = Poly::var(1), x3 = Poly::var(2);
  const LevelSurface cone("selfcut", x1 * x1 + x2 * x2 + x3 * x3);
  CHECK_THROWS_AS(surface_point_exact(cone, Vec3<Rational>()), GeometryError);

  // float membership uses a scaled tolerance
  CHECK(sph.contains(Vec3<double>(1.0 + 1e-14, 0, 0), 1e-12));
  CHECK(!sph.contains(Vec3<double>(1.01, 0, 0), 1e-12));
  CHECK_THROWS_AS(surface_point_float(sph, Vec3<double>(1.01, 0, 0)), GeometryError);
}

TEST_CASE("exact projector algebra and triads at generated points") {
  Prng rng(101);
  for (const char* name : {"plane", "sphere", "ellipsoid", "quartic"}) {
    const LevelSurface surf = surface_by_name(name);
    for (const auto& x : rational_surface_points(surf, rng, 5)) {
      const auto p = surface_point_exact(surf, x);
      const auto id = Mat3<QuadExt>::identity();
      CHECK(all_zero(p.T + p.Q - id));
      CHECK(all_zero(mat_mul(p.T, p.T) - p.T));
      CHECK(all_zero(mat_mul(p.Q, p.Q) - p.Q));
      CHECK(all_zero(mat_mul(p.T, p.Q)));
      CHECK(all_zero(p.T - transpose(p.T)));
      CHECK((dot(p.n, p.n) - qe(1)).is_zero());
      // triad: orthonormal, tau = n x nu
      CHECK((dot(p.tau, p.tau) - qe(1)).is_zero());
      CHECK((dot(p.nu, p.nu) - qe(1)).is_zero());
      CHECK(dot(p.tau, p.nu).is_zero());
      CHECK(dot(p.tau, p.n).is_zero());
      CHECK(dot(p.nu, p.n).is_zero());
      CHECK(all_zero(p.tau - cross(p.n, p.nu)));
      // no coordinate-axis symmetry in the generated points
      CHECK(!x(0).is_zero());
    }
  }
  // hint validation: collinear hint is a frame degeneracy
  const LevelSurface pl = surface_plane();
  const auto p0 = surface_point_exact(pl, Vec3<Rational>(Rational(1), Rational(2), Rational(0)));
  CHECK_THROWS_AS(check_hint_exact(p0, Vec3<Rational>(Rational(0), Rational(0), Rational(7))),
                  GeometryError);
  CHECK_NOTHROW(check_hint_exact(p0, Vec3<Rational>(Rational(1), Rational(0), Rational(0))));
}

TEST_CASE("grad[anti(n)]:T vanishes exactly on polynomial level sets") {
  Prng rng(103);
  for (const char* name : {"plane", "sphere", "ellipsoid", "quartic"}) {
    const LevelSurface surf = surface_by_name(name);
    for (const auto& x : rational_surface_points(surf, rng, 10)) {
      const auto p = surface_point_exact(surf, x);
      CHECK(all_zero(anti_normal_vanishing(surf, p)));
    }
  }
}

TEST_CASE("tangential gradient contraction: constants, idempotence, oracle") {
  // constant M on the flat plane -> 0
  const LevelSurface pl = surface_plane();
  Prng rng(107);
  const auto xpl = rational_surface_points(pl, rng, 1).front();
  const auto p = surface_point_exact(pl, xpl);
  const auto J = surface_jets(pl, p.x);
  Mat3<Rational> C = random_mat(rng);
  auto const_field = [&](const SurfaceJets<QuadExt>& jj) {
    Mat3<Jet<QuadExt>> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Jet<QuadExt>(QuadExt(C(i, j)));
    (void)jj;
    return m;
  };
  CHECK(all_zero(tangential_gradient_contraction(p, J, const_field)));

  // M = anti(n): reduces to the vanishing lemma on any surface
  const LevelSurface el = surface_ellipsoid();
  for (const auto& x : rational_surface_points(el, rng, 3)) {
    const auto pe = surface_point_exact(el, x);
    const auto Je = surface_jets(el, pe.x);
    auto anti_n = [](const SurfaceJets<QuadExt>& jj) { return anti(jj.n); };
    CHECK(all_zero(tangential_gradient_contraction(pe, Je, anti_n)));
  }

  // inserting extra T factors never changes the result (T.T = T)
  PolyMat Mf;
  for (int i = 0; i < 9; ++i) Mf.c[i] = random_poly(rng, 2, 6);
  const LevelSurface sph = surface_sphere();
  for (const auto& x : rational_surface_points(sph, rng, 3)) {
    const auto ps = surface_point_exact(sph, x);
    const auto Js = surface_jets(sph, ps.x);
    auto field_m = [&](const SurfaceJets<QuadExt>& jj) { return eval_mat(Mf, jj.x); };
    auto field_mtt = [&](const SurfaceJets<QuadExt>& jj) {
      return mat_mul(eval_mat(Mf, jj.x), jj.T);  // (M.T).T == M.T
    };
    const auto base = tangential_gradient_contraction(ps, Js, field_m);
    CHECK(all_zero(base - tangential_gradient_contraction(ps, Js, field_mtt)));
    // outer projector: contracting with T.T instead of T is the same
    const Mat3<Jet<QuadExt>> X = mat_mul(field_m(Js), Js.T);
    Vec3<QuadExt> alt;
    const Mat3<QuadExt> TT = mat_mul(ps.T, ps.T);
    for (int i = 0; i < 3; ++i) {
      QuadExt s = QuadExt(Rational(0));
      for (int j = 0; j < 3; ++j)
        for (int q = 0; q < 3; ++q) s += X(i, j).d[q] * TT(q, j);
      alt(i) = s;
    }
    CHECK(all_zero(base - alt));
  }

  // on the plane and the sphere the normal extension is geodesic, so adding
  // c.Q to the outer projector does not change the value there
  for (const LevelSurface& surf : {surface_plane(), surface_sphere()}) {
    for (const auto& x : rational_surface_points(surf, rng, 2)) {
      const auto ps = surface_point_exact(surf, x);
      const auto Js = surface_jets(surf, ps.x);
      auto field_m = [&](const SurfaceJets<QuadExt>& jj) { return eval_mat(Mf, jj.x); };
      const auto base = tangential_gradient_contraction(ps, Js, field_m);
      const Mat3<Jet<QuadExt>> X = mat_mul(field_m(Js), Js.T);
      const Mat3<QuadExt> TQ = ps.T + QuadExt(Rational(5, 3)) * ps.Q;
      Vec3<QuadExt> alt;
      for (int i = 0; i < 3; ++i) {
        QuadExt s = QuadExt(Rational(0));
        for (int j = 0; j < 3; ++j)
          for (int q = 0; q < 3; ++q) s += X(i, j).d[q] * TQ(q, j);
        alt(i) = s;
      }
      CHECK(all_zero(base - alt));
    }
  }

  // chart finite-difference oracle on the unit sphere (float mode)
  const LevelSurface sphf = surface_sphere();
  auto chart = [](double th, double ph) {
    return Vec3<double>(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  };
  auto Mval = [&](const Vec3<double>& x) { return eval_mat(Mf, x); };
  for (const double th : {0.7, 1.1}) {
    const double ph = 0.9;
    const Vec3<double> x = chart(th, ph);
    const SurfacePoint<double> pf = surface_point_float(sphf, x, {}, 1e-9);
    const SurfaceJets<double> Jf = surface_jets(sphf, x);
    auto field_m = [&](const SurfaceJets<double>& jj) { return eval_mat(Mf, jj.x); };
    const Vec3<double> exact = tangential_gradient_contraction(pf, Jf, field_m);
    const Vec3<double> fd = chart_fd_tgc(sphf, chart, th, ph, Mval);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(exact(i) - fd(i)) <= 1e-6 * (1.0 + std::abs(exact(i))));
  }
}

TEST_CASE("jump operator") {
  const LevelSurface sph = surface_sphere();
  const auto c = equator_curve_point(sph, Vec3<Rational>(Rational(3, 5), Rational(4, 5), Rational(0)));
  Prng rng(109);
  const Vec3<Rational> ar = random_vec(rng);
  Vec3<QuadExt> a;
  for (int i = 0; i < 3; ++i) a(i) = QuadExt(ar(i));
  // equal one-sided limits: zero jump
  CHECK(scalar_jump(a, a, c.nu).is_zero());
  // difference along nu: jump is 1
  CHECK((scalar_jump(a + c.nu, a, c.nu) - qe(1)).is_zero());
  // difference along the curve tangent: jump vanishes
  CHECK(scalar_jump(a + c.tau, a, c.nu).is_zero());
  // matrix jump with equal sides vanishes
  Mat3<QuadExt> A;
  for (int i = 0; i < 9; ++i) A.c[i] = QuadExt(rng.next_rational(5));
  CHECK(all_zero(mat_jump(A, A, c.nu)));
}

TEST_CASE("surface point generators produce exact, generic points") {
  Prng rng(113);
  for (const char* name : {"plane", "sphere", "ellipsoid", "quartic"}) {
    const LevelSurface surf = surface_by_name(name);
    const auto pts = rational_surface_points(surf, rng, 10);
    CHECK(pts.size() == 10);
    for (const auto& x : pts) {
      CHECK(surf.F.eval(x).is_zero());  // exact membership
      CHECK(!x(0).is_zero());
      CHECK(!x(1).is_zero());
      if (std::string(name) != "plane") CHECK(!x(2).is_zero());
      CHECK(x(0).abs() != x(1).abs());
    }
  }
}
