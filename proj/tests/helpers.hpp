#pragma once

#include <vector>

#include "ccs/constitutive.hpp"
#include "ccs/fields.hpp"
#include "ccs/prng.hpp"
#include "ccs/tensor.hpp"

namespace ccs::testing {

inline Vec3<Rational> random_vec(Prng& rng, long bound = 10) {
  return Vec3<Rational>(rng.next_rational(bound), rng.next_rational(bound),
                        rng.next_rational(bound));
}

inline Mat3<Rational> random_mat(Prng& rng, long bound = 10) {
  Mat3<Rational> m;
  for (int i = 0; i < 9; ++i) m.c[i] = rng.next_rational(bound);
  return m;
}

inline Ten3<Rational> random_ten3(Prng& rng, long bound = 10) {
  Ten3<Rational> t;
  for (int i = 0; i < 27; ++i) t.c[i] = rng.next_rational(bound);
  return t;
}

// ---- naive nested-loop oracles, independent of the library ops ----

inline Rational oracle_colon(const Mat3<Rational>& a, const Mat3<Rational>& b) {
  Rational s(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i, j) * b(j, i);
  return s;
}

inline Rational oracle_inner(const Mat3<Rational>& a, const Mat3<Rational>& b) {
  Rational s(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i, j) * b(i, j);
  return s;
}

inline Vec3<Rational> oracle_ten3_colon(const Ten3<Rational>& c, const Mat3<Rational>& b) {
  Vec3<Rational> r;
  for (int i = 0; i < 3; ++i) {
    Rational s(0);
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p) s += c(i, j, p) * b(p, j);
    r(i) = s;
  }
  return r;
}

inline Mat3<Rational> oracle_ten3_dot(const Ten3<Rational>& c, const Vec3<Rational>& n) {
  Mat3<Rational> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s(0);
      for (int k = 0; k < 3; ++k) s += c(i, j, k) * n(k);
      r(i, j) = s;
    }
  return r;
}

// Full eps-summation oracles for axl/anti/cross.
inline Mat3<Rational> oracle_anti(const Vec3<Rational>& v) {
  Mat3<Rational> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s(0);
      for (int k = 0; k < 3; ++k) s += Rational(-eps(i, j, k)) * v(k);
      m(i, j) = s;
    }
  return m;
}

inline Vec3<Rational> oracle_axl(const Mat3<Rational>& a) {
  Vec3<Rational> r;
  for (int k = 0; k < 3; ++k) {
    Rational s(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += Rational(-eps(i, j, k), 2) * a(i, j);
    r(k) = s;
  }
  return r;
}

inline Vec3<Rational> oracle_cross(const Vec3<Rational>& a, const Vec3<Rational>& b) {
  Vec3<Rational> r;
  for (int i = 0; i < 3; ++i) {
    Rational s(0);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += Rational(eps(i, j, k)) * a(j) * b(k);
    r(i) = s;
  }
  return r;
}

// Chain-rule oracle for the hyperstress: dW/du_{i,jk} assembled from the
// formal derivatives of S and A with respect to u_{i,jk}.
inline Ten3<Rational> oracle_hyperstress(const PolyVec& u, const MaterialParams& p,
                                         const Vec3<Rational>& x) {
  const KinematicState<Rational> st = kinematic_state(u, x);
  Ten3<Rational> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Rational acc(0);
        for (int pp = 0; pp < 3; ++pp)
          for (int q = 0; q < 3; ++q) {
            const Rational dS = Rational(eps(pp, j, i) * kron(q, k) + eps(q, j, i) * kron(pp, k), 2);
            const Rational dA = Rational(eps(pp, j, i) * kron(q, k) - eps(q, j, i) * kron(pp, k), 2);
            acc += (p.alpha1 / Rational(2)) * st.S(pp, q) * dS;
            acc += (p.alpha2 / Rational(2)) * st.A(pp, q) * dA;
          }
        r(i, j, k) = acc;
      }
  return r;
}

}  // namespace ccs::testing
