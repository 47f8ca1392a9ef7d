#pragma once

#include <optional>
#include <string>

#include "ccs/constitutive.hpp"
#include "ccs/surface.hpp"

namespace ccs {

// The two complete traction formulations plus the third-order route they
// both reduce from. "MindlinTiersten" pairs the traction with the tangential
// curl datum; "StronglyIndependent" pairs it with the tangential normal
// derivative; "ThirdOrder" keeps the hyperstress form.
enum class Formulation { MindlinTiersten, StronglyIndependent, ThirdOrder };

inline const char* to_string(Formulation f) {
  switch (f) {
    case Formulation::MindlinTiersten: return "mindlin-tiersten";
    case Formulation::StronglyIndependent: return "strongly-independent";
    default: return "third-order";
  }
}

template <class K>
struct TractionSet {
  Formulation formulation;
  Vec3<K> t;                      // surface traction
  Vec3<K> g;                      // double-force traction (tangential part works)
  K g_normal;                     // recorded but non-working: never enters a formula
  std::optional<Vec3<K>> pi;     // line traction, present when a curve is supplied
};

// ----- composite jet helpers -------------------------------------------------

template <class K>
Mat3<Jet<K>> mtilde_jet(const ConstitutiveFields& cf, const SurfaceJets<K>& J) {
  return eval_mat(cf.mtilde, J.x);
}

template <class K>
Jet<K> psi_jet(const ConstitutiveFields& cf, const SurfaceJets<K>& J) {
  // psi = <n, m.n> (= <n, sym(m).n>, the normal-normal couple stress)
  const Mat3<Jet<K>> m = mtilde_jet(cf, J);
  return dot(J.n, mat_vec(m, J.n));
}

template <class K>
Mat3<Jet<K>> anti_m_n_jet(const ConstitutiveFields& cf, const SurfaceJets<K>& J) {
  return anti(mat_vec(mtilde_jet(cf, J), J.n));
}

template <class K>
Mat3<Jet<K>> anti_tangential_m_n_jet(const ConstitutiveFields& cf, const SurfaceJets<K>& J) {
  const Vec3<Jet<K>> g = mat_vec(J.T, mat_vec(mtilde_jet(cf, J), J.n));
  return anti(g);
}

template <class K>
Mat3<Jet<K>> hyperstress_n_jet(const ConstitutiveFields& cf, const SurfaceJets<K>& J) {
  return ten3_dot_vec(eval_ten3(cf.hyper, J.x), J.n);
}

// ----- surface tractions -----------------------------------------------------

// (sigma - tau).n - 1/2 n x grad<n, sym(m).n>
template <class K>
Vec3<K> traction_mindlin(const ConstitutiveFields& cf, const SurfacePoint<K>& p,
                         const SurfaceJets<K>& J) {
  const Mat3<K> total = eval_mat(cf.sigma, p.x) - eval_mat(cf.tau, p.x);
  const Vec3<K> grad_psi = jet_gradient(psi_jet(cf, J));
  return mat_vec(total, p.n) - ScalarOps<K>::from_ratio(1, 2) * cross(p.n, grad_psi);
}

// tangential double force T.m.n
template <class K>
Vec3<K> doubleforce_mindlin(const ConstitutiveFields& cf, const SurfacePoint<K>& p) {
  return mat_vec(p.T, mat_vec(eval_mat(cf.mtilde, p.x), p.n));
}

enum class StrongRoute {
  FullAnti,      // (sigma - tau).n - 1/2 grad[anti(m.n).T] : T
  Split,         // mindlin traction - 1/2 grad[anti(T.m.n).T] : T
  ThirdOrder,    // (sigma - Div hyper).n - grad[(hyper.n).T] : T
};

template <class K>
Vec3<K> traction_strong(const ConstitutiveFields& cf, const SurfacePoint<K>& p,
                        const SurfaceJets<K>& J, StrongRoute route = StrongRoute::Split) {
  const K half = ScalarOps<K>::from_ratio(1, 2);
  switch (route) {
    case StrongRoute::FullAnti: {
      const Mat3<K> total = eval_mat(cf.sigma, p.x) - eval_mat(cf.tau, p.x);
      const Vec3<K> corr = tangential_gradient_contraction(
          p, J, [&](const SurfaceJets<K>& jj) { return anti_m_n_jet(cf, jj); });
      return mat_vec(total, p.n) - half * corr;
    }
    case StrongRoute::Split: {
      const Vec3<K> base = traction_mindlin(cf, p, J);
      const Vec3<K> corr = tangential_gradient_contraction(
          p, J, [&](const SurfaceJets<K>& jj) { return anti_tangential_m_n_jet(cf, jj); });
      return base - half * corr;
    }
    case StrongRoute::ThirdOrder: {
      const PolyMat tau3 = div_ten3(cf.hyper);
      const Mat3<K> total = eval_mat(cf.sigma, p.x) - eval_mat(tau3, p.x);
      const Vec3<K> corr = tangential_gradient_contraction(
          p, J, [&](const SurfaceJets<K>& jj) { return hyperstress_n_jet(cf, jj); });
      return mat_vec(total, p.n) - corr;
    }
  }
  return Vec3<K>();
}

// g = anti(T.m.n).n = (T.m.n) x n; tangential by construction
template <class K>
Vec3<K> doubleforce_strong(const ConstitutiveFields& cf, const SurfacePoint<K>& p) {
  return cross(doubleforce_mindlin(cf, p), p.n);
}

// ----- B tensor ---------------------------------------------------------------

enum class BRoute { IndexFormula, HyperstressDotN, HalfAntiMN };

template <class K>
Mat3<K> b_tensor(const ConstitutiveFields& cf, const SurfacePoint<K>& p,
                 BRoute route = BRoute::IndexFormula) {
  switch (route) {
    case BRoute::IndexFormula: {
      // B_ij = a1/2 (u_i,j - u_j,i),p n_p
      //      + (a1-a2)/4 [(u_p,i - u_i,p),p n_j + (u_j,p - u_p,j),p n_i]
      const Rational half_a1 = cf.params.alpha1 / Rational(2);
      const Rational quarter_dif = (cf.params.alpha1 - cf.params.alpha2) / Rational(4);
      Mat3<K> r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Poly wi, wj;
          for (int q = 0; q < 3; ++q) {
            wi += (cf.u(q).diff(i).diff(q) - cf.u(i).diff(q).diff(q)).scaled(quarter_dif);
            wj += (cf.u(j).diff(q).diff(q) - cf.u(q).diff(j).diff(q)).scaled(quarter_dif);
          }
          K s = ScalarOps<K>::zero();
          for (int q = 0; q < 3; ++q) {
            const Poly dq = (cf.u(i).diff(j) - cf.u(j).diff(i)).diff(q).scaled(half_a1);
            s += dq.eval(p.x) * p.n(q);
          }
          s += wi.eval(p.x) * p.n(j) + wj.eval(p.x) * p.n(i);
          r(i, j) = s;
        }
      return r;
    }
    case BRoute::HyperstressDotN:
      return ten3_dot_vec(eval_ten3(cf.hyper, p.x), p.n);
    case BRoute::HalfAntiMN:
      return ScalarOps<K>::from_ratio(1, 2) *
             anti(mat_vec(eval_mat(cf.mtilde, p.x), p.n));
  }
  return Mat3<K>();
}

// ----- line tractions ----------------------------------------------------------

// Curve point on the rim between two boundary regions: same surface normal n
// on both sides, opposite conormals; nu is nu+ and tau = n x nu.
template <class K>
struct CurvePoint {
  SurfacePoint<K> sp;
  Vec3<K> nu;   // nu+ ( = -nu- )
  Vec3<K> tau;  // n x nu+
};

inline CurvePoint<QuadExt> equator_curve_point(const LevelSurface& sphere,
                                               const Vec3<Rational>& x) {
  CurvePoint<QuadExt> c;
  c.sp = surface_point_exact(sphere, x);
  c.nu = Vec3<QuadExt>(QuadExt(0l), QuadExt(0l), QuadExt(Rational(-1)));  // outward from the upper patch
  c.tau = cross(c.sp.n, c.nu);
  return c;
}

enum class LineForm {
  SecondOrderHalf,        // 1/2 [[anti(m.n).nu]]
  SecondOrderTangential,  // 1/2 [[anti(T.m.n).nu]]
  FinalNoHalf,            // [[anti(T.m.n).nu]] — kept literally; factor-2 flag
  ThirdOrder,             // [[(hyper.n).nu]]
};

template <class K>
Vec3<K> line_traction(const ConstitutiveFields& plus, const ConstitutiveFields& minus,
                      const CurvePoint<K>& c, LineForm form) {
  const K half = ScalarOps<K>::from_ratio(1, 2);
  const SurfacePoint<K>& p = c.sp;
  auto anti_mn = [&](const ConstitutiveFields& cf) {
    return anti(mat_vec(eval_mat(cf.mtilde, p.x), p.n));
  };
  auto anti_tmn = [&](const ConstitutiveFields& cf) {
    return anti(mat_vec(p.T, mat_vec(eval_mat(cf.mtilde, p.x), p.n)));
  };
  auto hyper_n = [&](const ConstitutiveFields& cf) {
    return ten3_dot_vec(eval_ten3(cf.hyper, p.x), p.n);
  };
  switch (form) {
    case LineForm::SecondOrderHalf:
      return half * mat_jump(anti_mn(plus), anti_mn(minus), c.nu);
    case LineForm::SecondOrderTangential:
      return half * mat_jump(anti_tmn(plus), anti_tmn(minus), c.nu);
    case LineForm::FinalNoHalf:
      return mat_jump(anti_tmn(plus), anti_tmn(minus), c.nu);
    case LineForm::ThirdOrder:
      return mat_jump(hyper_n(plus), hyper_n(minus), c.nu);
  }
  return Vec3<K>();
}

// ----- the traction equivalence map -------------------------------------------

// Maps external data of the curl-paired formulation onto the normal-
// derivative-paired one: g = g~ x n and t = t~ - 1/2 grad[anti(g~).T] : T.
// The external g~ must be a field on the surface (only its tangential
// derivatives enter), supplied as a jet-expressible callable.
template <class K, class GFun>
std::pair<Vec3<K>, Vec3<K>> map_tractions_m2s(const Vec3<K>& t_ext_weak,
                                              const Vec3<K>& g_ext_weak_value, GFun&& g_field,
                                              const SurfacePoint<K>& p,
                                              const SurfaceJets<K>& J) {
  const Vec3<K> g_strong = cross(g_ext_weak_value, p.n);
  const Vec3<K> corr = tangential_gradient_contraction(
      p, J, [&](const SurfaceJets<K>& jj) { return anti(g_field(jj)); });
  const Vec3<K> t_strong = t_ext_weak - ScalarOps<K>::from_ratio(1, 2) * corr;
  return {t_strong, g_strong};
}

// t - t~ = -1/2 grad[anti(T.m(u).n).T] : T — the u-dependent obstruction to
// an a-priori equivalence when force and first-derivative data share a
// boundary portion. Generically nonzero.
template <class K>
Vec3<K> mixed_case_residual(const ConstitutiveFields& cf, const SurfacePoint<K>& p,
                            const SurfaceJets<K>& J) {
  const Vec3<K> corr = tangential_gradient_contraction(
      p, J, [&](const SurfaceJets<K>& jj) { return anti_tangential_m_n_jet(cf, jj); });
  return -(ScalarOps<K>::from_ratio(1, 2) * corr);
}

// ----- kinematic boundary-data converters --------------------------------------

enum class ConvertDirection { CurlToNormal, NormalToCurl };

// Local-frame relations between the two tangential boundary data:
//   <curl u, tau> = <grad u . n, nu>  - <grad u . nu, n>
//   <curl u, nu>  = <grad u . tau, n> - <grad u . n, tau>
// grad_u supplies only tangential derivatives here (directional derivatives
// along tau and nu of the surface restriction of u); `extra` is the other
// tangential datum. The round trip is the identity.
template <class K>
Vec3<K> kinematic_convert(const Mat3<K>& grad_u, const Vec3<K>& extra, ConvertDirection dir,
                          const SurfacePoint<K>& p) {
  const Vec3<K>&tau = p.tau, &nu = p.nu, &n = p.n;
  const K dtau_n = dot(mat_vec(grad_u, tau), n);  // tangential data of u|_S
  const K dnu_n = dot(mat_vec(grad_u, nu), n);
  if (dir == ConvertDirection::NormalToCurl) {
    const K along_tau = dot(extra, nu) - dnu_n;
    const K along_nu = dtau_n - dot(extra, tau);
    return along_tau * tau + along_nu * nu;
  }
  const K along_tau = dtau_n - dot(extra, nu);
  const K along_nu = dot(extra, tau) + dnu_n;
  return along_tau * tau + along_nu * nu;
}

// ----- one-stop evaluation for the CLI ------------------------------------------

template <class K>
TractionSet<K> evaluate_tractions(const ConstitutiveFields& cf, const LevelSurface& surf,
                                  const SurfacePoint<K>& p, Formulation f) {
  const SurfaceJets<K> J = surface_jets(surf, p.x);
  TractionSet<K> out;
  out.formulation = f;
  switch (f) {
    case Formulation::MindlinTiersten:
      out.t = traction_mindlin(cf, p, J);
      out.g = doubleforce_mindlin(cf, p);
      break;
    case Formulation::StronglyIndependent:
      out.t = traction_strong(cf, p, J, StrongRoute::Split);
      out.g = doubleforce_strong(cf, p);
      break;
    case Formulation::ThirdOrder:
      out.t = traction_strong(cf, p, J, StrongRoute::ThirdOrder);
      out.g = doubleforce_strong(cf, p);
      break;
  }
  out.g_normal = dot(out.g, p.n);
  return out;
}

// Same, with a rim point and two-sided data: the line traction is filled in.
template <class K>
TractionSet<K> evaluate_tractions(const ConstitutiveFields& plus, const ConstitutiveFields& minus,
                                  const LevelSurface& surf, const CurvePoint<K>& c,
                                  Formulation f) {
  TractionSet<K> out = evaluate_tractions(plus, surf, c.sp, f);
  switch (f) {
    case Formulation::MindlinTiersten:
    case Formulation::StronglyIndependent:
      out.pi = line_traction(plus, minus, c, LineForm::SecondOrderHalf);
      break;
    case Formulation::ThirdOrder:
      out.pi = line_traction(plus, minus, c, LineForm::ThirdOrder);
      break;
  }
  return out;
}

}  // namespace ccs
