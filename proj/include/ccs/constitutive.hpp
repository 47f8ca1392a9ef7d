#pragma once

#include "ccs/fields.hpp"
#include "ccs/material.hpp"
#include "ccs/poly.hpp"
#include "ccs/tensor.hpp"

namespace ccs {

// Every tensor here has a field-level variant (polynomial output); identity
// checks subtract fields so residuals are polynomials testable for the
// literal zero. Point values are obtained by evaluating the fields.

inline Poly rp(const Rational& r) { return Poly(r); }

// ----- linear force stress ------------------------------------------------

// sigma = 2 mu sym(grad u) + lambda tr(grad u) 1
inline PolyMat sigma_field(const PolyVec& u, const MaterialParams& p) {
  const PolyMat g = grad_vec(u);
  return rp(Rational(2) * p.mu) * sym(g) + (rp(p.lambda) * tr(g)) * PolyMat::identity();
}

// ----- energies -----------------------------------------------------------

enum class WlinForm { MuLambda, DevKappa };

inline Poly wlin_field(const PolyVec& u, const MaterialParams& p, WlinForm form) {
  const PolyMat g = grad_vec(u);
  const Poly t = tr(g);
  switch (form) {
    case WlinForm::MuLambda:
      return rp(p.mu) * frob2(sym(g)) + rp(p.lambda / Rational(2)) * t * t;
    case WlinForm::DevKappa:
      return rp(p.mu) * frob2(dev(sym(g))) + rp(p.kappa() / Rational(2)) * t * t;
  }
  return Poly();
}

enum class WcurvForm { SymSkew, AxlPicture, DevSymSkew };

inline Poly wcurv_field(const PolyVec& u, const MaterialParams& p, WcurvForm form) {
  const Rational q4(1, 4);
  switch (form) {
    case WcurvForm::SymSkew: {
      const PolyMat gc = grad_vec(curl_vec(u));
      return rp(p.alpha1 * q4) * frob2(sym(gc)) + rp(p.alpha2 * q4) * frob2(skew(gc));
    }
    case WcurvForm::AxlPicture: {
      const PolyVec a = axl(skew(grad_vec(u)));
      const PolyMat ga = grad_vec(a);
      return rp(p.alpha1) * frob2(sym(ga)) + rp(p.alpha2) * frob2(skew(ga));
    }
    case WcurvForm::DevSymSkew: {
      const PolyMat gc = grad_vec(curl_vec(u));
      return rp(p.alpha1 * q4) * frob2(dev(sym(gc))) + rp(p.alpha2 * q4) * frob2(skew(gc));
    }
  }
  return Poly();
}

// Single-modulus curvature energy with the trace cross term weighted by eta.
// Four algebraically equal forms; the axl picture carries the full modulus
// (not the quarter) because grad axl(skew grad u) = (1/2) grad curl u.
enum class EtaForm { TraceSquare, AxlPicture, CrossTerm, Weighted };

inline Poly wcurv_eta_field(const PolyVec& u, const MaterialParams& p, EtaForm form) {
  if (!p.eta || !p.Lc) throw ConfigError("eta-form energy requires eta and Lc");
  const Rational pref = p.mu * (*p.Lc) * (*p.Lc) * p.alpha1 / Rational(4);
  const Rational eta = *p.eta;
  switch (form) {
    case EtaForm::TraceSquare: {
      const PolyMat gc = grad_vec(curl_vec(u));
      return rp(pref) * (frob2(gc) + rp(eta) * tr(mat_mul(gc, gc)));
    }
    case EtaForm::AxlPicture: {
      const PolyVec a = axl(skew(grad_vec(u)));
      const PolyMat ga = grad_vec(a);
      return rp(pref * Rational(4)) *
             (frob2(dev(sym(ga))) + frob2(skew(ga)) + rp(eta) * inner(ga, transpose(ga)));
    }
    case EtaForm::CrossTerm: {
      const PolyMat gc = grad_vec(curl_vec(u));
      return rp(pref) *
             (frob2(dev(sym(gc))) + frob2(skew(gc)) + rp(eta) * inner(gc, transpose(gc)));
    }
    case EtaForm::Weighted: {
      const PolyMat gc = grad_vec(curl_vec(u));
      return rp(pref) * (rp(Rational(1) + eta) * frob2(dev(sym(gc))) +
                         rp(Rational(1) - eta) * frob2(skew(gc)));
    }
  }
  return Poly();
}

// ----- second-order couple stress m ---------------------------------------

enum class MtForm { HalfSum, DevSymSkew, AxlPicture, IndexFormat };

inline PolyMat mtilde_field(const PolyVec& u, const MaterialParams& p, MtForm form) {
  const Rational half_sum = (p.alpha1 + p.alpha2) / Rational(2);
  const Rational half_dif = (p.alpha1 - p.alpha2) / Rational(2);
  switch (form) {
    case MtForm::HalfSum: {
      const PolyMat gc = grad_vec(curl_vec(u));
      return rp(half_sum) * gc + rp(half_dif) * transpose(gc);
    }
    case MtForm::DevSymSkew: {
      const PolyMat gc = grad_vec(curl_vec(u));
      return rp(p.alpha1) * dev(sym(gc)) + rp(p.alpha2) * skew(gc);
    }
    case MtForm::AxlPicture: {
      const PolyMat ga = grad_vec(axl(skew(grad_vec(u))));
      return rp(Rational(2) * p.alpha1) * dev(sym(ga)) + rp(Rational(2) * p.alpha2) * skew(ga);
    }
    case MtForm::IndexFormat: {
      // m_il = (a1+a2)/2 eps_ijk u_k,jl + (a1-a2)/2 eps_ljk u_k,ji
      PolyMat r;
      for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) {
          Poly s;
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
              if (eps(i, j, k) != 0)
                s += u(k).diff(j).diff(l).scaled(half_sum * Rational(eps(i, j, k)));
              if (eps(l, j, k) != 0)
                s += u(k).diff(j).diff(i).scaled(half_dif * Rational(eps(l, j, k)));
            }
          r(i, l) = s;
        }
      return r;
    }
  }
  return PolyMat();
}

// ----- third-order hyperstress --------------------------------------------

enum class HsForm { IndexFormat, Compact };

inline PolyTen3 hyperstress_field(const PolyVec& u, const MaterialParams& p, HsForm form) {
  const Rational a1 = p.alpha1;
  const Rational quarter_dif = (p.alpha1 - p.alpha2) / Rational(4);
  switch (form) {
    case HsForm::IndexFormat: {
      // (a1/2)(u_i,jk - u_j,ik)
      //   + (a1-a2)/4 [u_p,ip d_jk - u_i,pp d_jk + u_j,pp d_ik - u_p,jp d_ik]
      PolyTen3 r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            Poly s = (u(i).diff(j).diff(k) - u(j).diff(i).diff(k)).scaled(a1 / Rational(2));
            if (j == k) {
              for (int q = 0; q < 3; ++q)
                s += (u(q).diff(i).diff(q) - u(i).diff(q).diff(q)).scaled(quarter_dif);
            }
            if (i == k) {
              for (int q = 0; q < 3; ++q)
                s += (u(j).diff(q).diff(q) - u(q).diff(j).diff(q)).scaled(quarter_dif);
            }
            r(i, j, k) = s;
          }
      return r;
    }
    case HsForm::Compact: {
      const PolyMat g = grad_vec(u);
      const PolyTen3 grad_skew = grad_mat(skew(g));
      const PolyTen3 gdiv = vec_outer_id(grad_scalar(div_vec(u)));  // grad(div u) (x) 1
      const PolyTen3 divg = vec_outer_id(div_mat(g));               // Div(grad u) (x) 1
      PolyTen3 r = rp(a1) * grad_skew;
      r = r + rp(quarter_dif) * (gdiv - divg + ten3_t12(divg) - ten3_t12(gdiv));
      return r;
    }
  }
  return PolyTen3();
}

// ----- skew nonlocal force stress -----------------------------------------

enum class TauForm { DivHyperstress, AntiDivM, LaplaceSkew };

inline PolyMat tau_field(const PolyVec& u, const MaterialParams& p, TauForm form) {
  switch (form) {
    case TauForm::DivHyperstress:
      return div_ten3(hyperstress_field(u, p, HsForm::IndexFormat));
    case TauForm::AntiDivM: {
      const PolyVec d = div_mat(mtilde_field(u, p, MtForm::HalfSum));
      return rp(Rational(1, 2)) * anti(d);
    }
    case TauForm::LaplaceSkew:
      return rp((p.alpha1 + p.alpha2) / Rational(2)) * laplacian_mat(skew(grad_vec(u)));
  }
  return PolyMat();
}

// ----- bulk equation --------------------------------------------------------

enum class BulkForm { SecondOrder, ThirdOrder };

// residual field of Div(sigma - tau) + f
inline PolyVec bulk_residual_field(const PolyVec& u, const MaterialParams& p,
                                   const PolyVec& f_ext, BulkForm form) {
  const PolyMat sig = sigma_field(u, p);
  const PolyMat tau = form == BulkForm::SecondOrder ? tau_field(u, p, TauForm::AntiDivM)
                                                    : tau_field(u, p, TauForm::DivHyperstress);
  return div_mat(sig - tau) + f_ext;
}

// manufactured body force: f := -Div(sigma - tau), so the bulk equation
// holds identically
inline PolyVec manufactured_force(const PolyVec& u, const MaterialParams& p) {
  const PolyMat sig = sigma_field(u, p);
  const PolyMat tau = tau_field(u, p, TauForm::AntiDivM);
  return -div_mat(sig - tau);
}

// ----- pointwise kinematic bundle ------------------------------------------

template <class K>
struct KinematicState {
  Mat3<K> grad_u;
  Ten3<K> d2u;          // u_i,jk (symmetric in j,k)
  Mat3<K> lap_grad_u;   // u_i,jpp — the third-derivative contraction Div hyper needs
  Vec3<K> curl_u;
  Mat3<K> grad_curl_u;
  Mat3<K> S;            // sym grad curl u (trace-free, so dev S = S)
  Mat3<K> A;            // skew grad curl u
};

template <class K>
KinematicState<K> kinematic_state(const PolyVec& u, const Vec3<K>& x) {
  KinematicState<K> st;
  st.grad_u = eval_mat(grad_vec(u), x);
  st.d2u = eval_ten3(grad_mat(grad_vec(u)), x);
  st.lap_grad_u = eval_mat(laplacian_mat(grad_vec(u)), x);
  const PolyVec c = curl_vec(u);
  st.curl_u = eval_vec(c, x);
  st.grad_curl_u = eval_mat(grad_vec(c), x);
  st.S = sym(st.grad_curl_u);
  st.A = skew(st.grad_curl_u);
  return st;
}

// ----- point-level variants ---------------------------------------------------
// Same formulas assembled in K tensor arithmetic from the kinematic state.
// In rational mode they must agree with the evaluated fields exactly; in
// float mode they are the fast value path.

template <class K>
K klift(const Rational& r) {
  return ScalarOps<K>::from_rational(r);
}

template <class K>
Mat3<K> sigma_point(const KinematicState<K>& st, const MaterialParams& p) {
  return klift<K>(Rational(2) * p.mu) * sym(st.grad_u) +
         (klift<K>(p.lambda) * tr(st.grad_u)) * Mat3<K>::identity();
}

template <class K>
K wlin_point(const KinematicState<K>& st, const MaterialParams& p, WlinForm form) {
  const K t = tr(st.grad_u);
  if (form == WlinForm::MuLambda)
    return klift<K>(p.mu) * frob2(sym(st.grad_u)) + klift<K>(p.lambda / Rational(2)) * t * t;
  return klift<K>(p.mu) * frob2(dev(sym(st.grad_u))) + klift<K>(p.kappa() / Rational(2)) * t * t;
}

template <class K>
K wcurv_point(const KinematicState<K>& st, const MaterialParams& p, WcurvForm form) {
  const K q4 = ScalarOps<K>::from_ratio(1, 4);
  switch (form) {
    case WcurvForm::SymSkew:
      return klift<K>(p.alpha1) * q4 * frob2(st.S) + klift<K>(p.alpha2) * q4 * frob2(st.A);
    case WcurvForm::AxlPicture: {
      // grad axl(skew grad u) = 1/2 grad curl u
      const Mat3<K> ga = ScalarOps<K>::from_ratio(1, 2) * st.grad_curl_u;
      return klift<K>(p.alpha1) * frob2(dev(sym(ga))) + klift<K>(p.alpha2) * frob2(skew(ga));
    }
    case WcurvForm::DevSymSkew:
      return klift<K>(p.alpha1) * q4 * frob2(dev(st.S)) + klift<K>(p.alpha2) * q4 * frob2(st.A);
  }
  return ScalarOps<K>::zero();
}

template <class K>
K wcurv_eta_point(const KinematicState<K>& st, const MaterialParams& p, EtaForm form) {
  if (!p.eta || !p.Lc) throw ConfigError("eta-form energy requires eta and Lc");
  const K pref = klift<K>(p.mu * (*p.Lc) * (*p.Lc) * p.alpha1 / Rational(4));
  const K eta = klift<K>(*p.eta);
  const Mat3<K>& gc = st.grad_curl_u;
  switch (form) {
    case EtaForm::TraceSquare:
      return pref * (frob2(gc) + eta * tr(mat_mul(gc, gc)));
    case EtaForm::AxlPicture: {
      const Mat3<K> ga = ScalarOps<K>::from_ratio(1, 2) * gc;
      return ScalarOps<K>::from_ratio(4, 1) * pref *
             (frob2(dev(sym(ga))) + frob2(skew(ga)) + eta * inner(ga, transpose(ga)));
    }
    case EtaForm::CrossTerm:
      return pref * (frob2(dev(sym(gc))) + frob2(skew(gc)) + eta * inner(gc, transpose(gc)));
    case EtaForm::Weighted:
      return pref * ((ScalarOps<K>::one() + eta) * frob2(dev(sym(gc))) +
                     (ScalarOps<K>::one() - eta) * frob2(skew(gc)));
  }
  return ScalarOps<K>::zero();
}

template <class K>
Mat3<K> mtilde_point(const KinematicState<K>& st, const MaterialParams& p, MtForm form) {
  const K half_sum = klift<K>((p.alpha1 + p.alpha2) / Rational(2));
  const K half_dif = klift<K>((p.alpha1 - p.alpha2) / Rational(2));
  switch (form) {
    case MtForm::HalfSum:
      return half_sum * st.grad_curl_u + half_dif * transpose(st.grad_curl_u);
    case MtForm::DevSymSkew:
      return klift<K>(p.alpha1) * dev(st.S) + klift<K>(p.alpha2) * st.A;
    case MtForm::AxlPicture: {
      const Mat3<K> ga = ScalarOps<K>::from_ratio(1, 2) * st.grad_curl_u;
      return klift<K>(Rational(2) * p.alpha1) * dev(sym(ga)) +
             klift<K>(Rational(2) * p.alpha2) * skew(ga);
    }
    case MtForm::IndexFormat: {
      // m_il = (a1+a2)/2 eps_ijk u_k,jl + (a1-a2)/2 eps_ljk u_k,ji, from d2u
      Mat3<K> r;
      for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) {
          K s = ScalarOps<K>::zero();
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
              if (eps(i, j, k) != 0)
                s += ScalarOps<K>::from_ratio(eps(i, j, k), 1) * half_sum * st.d2u(k, j, l);
              if (eps(l, j, k) != 0)
                s += ScalarOps<K>::from_ratio(eps(l, j, k), 1) * half_dif * st.d2u(k, j, i);
            }
          r(i, l) = s;
        }
      return r;
    }
  }
  return Mat3<K>();
}

template <class K>
Ten3<K> hyperstress_point(const KinematicState<K>& st, const MaterialParams& p, HsForm form) {
  const K half_a1 = klift<K>(p.alpha1 / Rational(2));
  const K quarter_dif = klift<K>((p.alpha1 - p.alpha2) / Rational(4));
  Ten3<K> r;
  if (form == HsForm::IndexFormat) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          K s = half_a1 * (st.d2u(i, j, k) - st.d2u(j, i, k));
          if (j == k)
            for (int q = 0; q < 3; ++q)
              s += quarter_dif * (st.d2u(q, i, q) - st.d2u(i, q, q));
          if (i == k)
            for (int q = 0; q < 3; ++q)
              s += quarter_dif * (st.d2u(j, q, q) - st.d2u(q, j, q));
          r(i, j, k) = s;
        }
    return r;
  }
  // compact route from the same second derivatives
  Vec3<K> grad_div, div_grad;
  for (int i = 0; i < 3; ++i) {
    K gd = ScalarOps<K>::zero(), dg = ScalarOps<K>::zero();
    for (int q = 0; q < 3; ++q) {
      gd += st.d2u(q, q, i);
      dg += st.d2u(i, q, q);
    }
    grad_div(i) = gd;
    div_grad(i) = dg;
  }
  Ten3<K> grad_skew;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        grad_skew(i, j, k) =
            ScalarOps<K>::from_ratio(1, 2) * (st.d2u(i, j, k) - st.d2u(j, i, k));
  const Ten3<K> gdiv = vec_outer_id(grad_div);
  const Ten3<K> divg = vec_outer_id(div_grad);
  r = klift<K>(p.alpha1) * grad_skew;
  r = r + quarter_dif * (gdiv - divg + ten3_t12(divg) - ten3_t12(gdiv));
  return r;
}

// tau from the third-derivative contraction in the state
template <class K>
Mat3<K> tau_point(const KinematicState<K>& st, const MaterialParams& p) {
  const Mat3<K> lap_skew =
      ScalarOps<K>::from_ratio(1, 2) * (st.lap_grad_u - transpose(st.lap_grad_u));
  return klift<K>((p.alpha1 + p.alpha2) / Rational(2)) * lap_skew;
}

// Precomputed constitutive fields for one displacement field; shared by the
// traction routines and the identity suite.
struct ConstitutiveFields {
  PolyVec u;
  MaterialParams params;
  PolyMat sigma;
  PolyMat mtilde;
  PolyTen3 hyper;
  PolyMat tau;

  ConstitutiveFields(const PolyVec& u_, const MaterialParams& p_)
      : u(u_),
        params(p_),
        sigma(sigma_field(u_, p_)),
        mtilde(mtilde_field(u_, p_, MtForm::HalfSum)),
        hyper(hyperstress_field(u_, p_, HsForm::IndexFormat)),
        tau(tau_field(u_, p_, TauForm::AntiDivM)) {}
};

}  // namespace ccs
