#pragma once

#include <string>
#include <vector>

#include "ccs/poly.hpp"
#include "ccs/prng.hpp"
#include "ccs/tensor.hpp"

namespace ccs {

// Polynomial fields over R^3: components are exact polynomials, so every
// derivative of any order is exact and identity residuals can be tested
// for the literal zero polynomial.
using PolyVec = Vec3<Poly>;
using PolyMat = Mat3<Poly>;
using PolyTen3 = Ten3<Poly>;

template <class K>
Vec3<K> eval_vec(const PolyVec& f, const Vec3<K>& x) {
  return Vec3<K>(f(0).eval(x), f(1).eval(x), f(2).eval(x));
}

template <class K>
Mat3<K> eval_mat(const PolyMat& f, const Vec3<K>& x) {
  Mat3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = f(i, j).eval(x);
  return r;
}

template <class K>
Ten3<K> eval_ten3(const PolyTen3& f, const Vec3<K>& x) {
  Ten3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j, k) = f(i, j, k).eval(x);
  return r;
}

// (grad u)_ij = d_j u_i  -- row convention, normative everywhere.
inline PolyMat grad_vec(const PolyVec& u) {
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = u(i).diff(j);
  return r;
}

inline PolyVec grad_scalar(const Poly& f) {
  return PolyVec(f.diff(0), f.diff(1), f.diff(2));
}

inline Poly div_vec(const PolyVec& u) {
  return u(0).diff(0) + u(1).diff(1) + u(2).diff(2);
}

// (curl u)_i = eps_ijk d_j u_k
inline PolyVec curl_vec(const PolyVec& u) {
  PolyVec r;
  for (int i = 0; i < 3; ++i) {
    Poly s;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (eps(i, j, k) != 0) s += u(k).diff(j).scaled(Rational(eps(i, j, k)));
    r(i) = s;
  }
  return r;
}

// Row-wise operators on second-order fields:
//   (Curl P)_ij = eps_jkl d_k P_il   (rows are curls of rows)
//   (Div P)_i   = d_j P_ij
inline PolyMat curl_mat(const PolyMat& p) {
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly s;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          if (eps(j, k, l) != 0) s += p(i, l).diff(k).scaled(Rational(eps(j, k, l)));
      r(i, j) = s;
    }
  return r;
}

inline PolyVec div_mat(const PolyMat& p) {
  PolyVec r;
  for (int i = 0; i < 3; ++i) r(i) = p(i, 0).diff(0) + p(i, 1).diff(1) + p(i, 2).diff(2);
  return r;
}

// (grad P)_ijk = d_k P_ij
inline PolyTen3 grad_mat(const PolyMat& p) {
  PolyTen3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j, k) = p(i, j).diff(k);
  return r;
}

inline PolyMat laplacian_mat(const PolyMat& p) {
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = p(i, j).diff(0).diff(0) + p(i, j).diff(1).diff(1) + p(i, j).diff(2).diff(2);
  return r;
}

// (Div C)_ij = d_k C_ijk
inline PolyMat div_ten3(const PolyTen3& c) {
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = c(i, j, 0).diff(0) + c(i, j, 1).diff(1) + c(i, j, 2).diff(2);
  return r;
}

// (C.n)_ij as a field, n a polynomial vector field
inline PolyMat ten3_field_dot_vec(const PolyTen3& c, const PolyVec& n) {
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly s;
      for (int k = 0; k < 3; ++k) s += c(i, j, k) * n(k);
      r(i, j) = s;
    }
  return r;
}

inline bool field_zero(const PolyVec& v) {
  return v(0).is_zero() && v(1).is_zero() && v(2).is_zero();
}
inline bool field_zero(const PolyMat& m) {
  for (int i = 0; i < 9; ++i)
    if (!m.c[i].is_zero()) return false;
  return true;
}
inline bool field_zero(const PolyTen3& t) {
  for (int i = 0; i < 27; ++i)
    if (!t.c[i].is_zero()) return false;
  return true;
}

// Dense random field: every monomial of total degree <= degree_max gets a
// nonzero rational coefficient with |num| <= coeff_bound, den <= coeff_bound.
// Deterministic for a given generator state.
inline Poly random_poly(Prng& rng, int degree_max, long coeff_bound) {
  Poly p;
  for (int d = 0; d <= degree_max; ++d)
    for (int e1 = d; e1 >= 0; --e1)
      for (int e2 = d - e1; e2 >= 0; --e2) {
        const int e3 = d - e1 - e2;
        p.add_term(Mono{{e1, e2, e3}}, rng.next_rational(coeff_bound));
      }
  return p;
}

inline PolyVec random_field(std::uint64_t seed, int degree_max, long coeff_bound) {
  Prng rng(seed);
  return PolyVec(random_poly(rng, degree_max, coeff_bound),
                 random_poly(rng, degree_max, coeff_bound),
                 random_poly(rng, degree_max, coeff_bound));
}

inline PolyVec parse_vec_field(const std::vector<std::string>& components) {
  if (components.size() != 3) throw ParseError("field literal needs exactly 3 components");
  return PolyVec(Poly::parse(components[0]), Poly::parse(components[1]),
                 Poly::parse(components[2]));
}

}  // namespace ccs
