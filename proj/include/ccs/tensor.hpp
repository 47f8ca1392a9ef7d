#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ccs/scalar.hpp"

namespace ccs {

struct SkewError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Levi-Civita symbol, eps(0,1,2) = 1 (indices are 0-based internally,
// 1-based in all user-facing output).
inline int eps(int i, int j, int k) {
  return (j - i) * (k - i) * (k - j) / 2 * ((i != j && j != k && i != k) ? 1 : 0);
}

inline int kron(int i, int j) { return i == j ? 1 : 0; }

template <class K>
struct Vec3 {
  std::array<K, 3> c{ScalarOps<K>::zero(), ScalarOps<K>::zero(), ScalarOps<K>::zero()};

  Vec3() = default;
  Vec3(const K& a, const K& b, const K& d) : c{a, b, d} {}

  K& operator()(int i) { return c[i]; }
  const K& operator()(int i) const { return c[i]; }

  Vec3 operator-() const { return Vec3(-c[0], -c[1], -c[2]); }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return Vec3(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]);
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return Vec3(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]);
  }
  friend Vec3 operator*(const K& s, const Vec3& a) {
    return Vec3(s * a.c[0], s * a.c[1], s * a.c[2]);
  }
};

template <class K>
struct Mat3 {
  std::array<K, 9> c;

  Mat3() { c.fill(ScalarOps<K>::zero()); }
  // Row-major literal: rows (r0, r1, r2).
  Mat3(const Vec3<K>& r0, const Vec3<K>& r1, const Vec3<K>& r2) {
    for (int j = 0; j < 3; ++j) {
      c[0 * 3 + j] = r0(j);
      c[1 * 3 + j] = r1(j);
      c[2 * 3 + j] = r2(j);
    }
  }

  K& operator()(int i, int j) { return c[i * 3 + j]; }
  const K& operator()(int i, int j) const { return c[i * 3 + j]; }

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m(i, i) = ScalarOps<K>::one();
    return m;
  }

  Mat3 operator-() const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.c[i] = -c[i];
    return r;
  }
  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Mat3 operator*(const K& s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.c[i] = s * a.c[i];
    return r;
  }
};

// Third-order tensor, components C(i,j,k).
template <class K>
struct Ten3 {
  std::array<K, 27> c;

  Ten3() { c.fill(ScalarOps<K>::zero()); }

  K& operator()(int i, int j, int k) { return c[(i * 3 + j) * 3 + k]; }
  const K& operator()(int i, int j, int k) const { return c[(i * 3 + j) * 3 + k]; }

  Ten3 operator-() const {
    Ten3 r;
    for (int i = 0; i < 27; ++i) r.c[i] = -c[i];
    return r;
  }
  friend Ten3 operator+(const Ten3& a, const Ten3& b) {
    Ten3 r;
    for (int i = 0; i < 27; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Ten3 operator-(const Ten3& a, const Ten3& b) {
    Ten3 r;
    for (int i = 0; i < 27; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Ten3 operator*(const K& s, const Ten3& a) {
    Ten3 r;
    for (int i = 0; i < 27; ++i) r.c[i] = s * a.c[i];
    return r;
  }
};

// -------------------------------------------------------------------------
// Contraction conventions, normative for the whole library:
//   dot(v,w)        = v_i w_i
//   (A.v)_i         = A_ij v_j
//   (A.B)_ik        = A_ij B_jk
//   colon(A,B)      = A_ij B_ji          (the ":" double contraction)
//   inner(A,B)      = A_ij B_ij          (the "<,>" scalar product)
//   (ten3_colon_mat(C,B))_i = C_ijp B_pj
//   (ten3_dot_vec(C,n))_ij  = C_ijk n_k
// ":" and "<,>" are distinct on purpose; they differ on non-symmetric
// arguments and several boundary terms depend on which one is used.
// -------------------------------------------------------------------------

template <class K>
K dot(const Vec3<K>& a, const Vec3<K>& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

template <class K>
Vec3<K> cross(const Vec3<K>& a, const Vec3<K>& b) {
  return Vec3<K>(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                 a(0) * b(1) - a(1) * b(0));
}

template <class K>
Mat3<K> outer(const Vec3<K>& a, const Vec3<K>& b) {
  Mat3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i) * b(j);
  return r;
}

template <class K>
Vec3<K> mat_vec(const Mat3<K>& a, const Vec3<K>& v) {
  Vec3<K> r;
  for (int i = 0; i < 3; ++i) {
    K s = ScalarOps<K>::zero();
    for (int j = 0; j < 3; ++j) s += a(i, j) * v(j);
    r(i) = s;
  }
  return r;
}

template <class K>
Mat3<K> mat_mul(const Mat3<K>& a, const Mat3<K>& b) {
  Mat3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      K s = ScalarOps<K>::zero();
      for (int j = 0; j < 3; ++j) s += a(i, j) * b(j, k);
      r(i, k) = s;
    }
  return r;
}

template <class K>
Mat3<K> transpose(const Mat3<K>& a) {
  Mat3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

template <class K>
K tr(const Mat3<K>& a) {
  return a(0, 0) + a(1, 1) + a(2, 2);
}

template <class K>
Mat3<K> sym(const Mat3<K>& a) {
  return ScalarOps<K>::from_ratio(1, 2) * (a + transpose(a));
}

template <class K>
Mat3<K> skew(const Mat3<K>& a) {
  return ScalarOps<K>::from_ratio(1, 2) * (a - transpose(a));
}

template <class K>
Mat3<K> dev(const Mat3<K>& a) {
  return a - (ScalarOps<K>::from_ratio(1, 3) * tr(a)) * Mat3<K>::identity();
}

template <class K>
K colon(const Mat3<K>& a, const Mat3<K>& b) {  // A:B = A_ij B_ji
  K s = ScalarOps<K>::zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i, j) * b(j, i);
  return s;
}

template <class K>
K inner(const Mat3<K>& a, const Mat3<K>& b) {  // <A,B> = A_ij B_ij
  K s = ScalarOps<K>::zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i, j) * b(i, j);
  return s;
}

template <class K>
K frob2(const Mat3<K>& a) {  // ||A||^2
  return inner(a, a);
}

template <class K>
K norm2(const Vec3<K>& v) {
  return dot(v, v);
}

// (anti(v))_ij = -eps_ijk v_k;  anti(v).w = v x w.
template <class K>
Mat3<K> anti(const Vec3<K>& v) {
  Mat3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K s = ScalarOps<K>::zero();
      for (int k = 0; k < 3; ++k)
        if (eps(i, j, k) != 0) s += ScalarOps<K>::from_ratio(-eps(i, j, k), 1) * v(k);
      r(i, j) = s;
    }
  return r;
}

// (axl A)_k = -1/2 eps_ijk A_ij, defined on so(3) only; a non-skew argument
// is a contract violation and is rejected.
template <class K>
Vec3<K> axl(const Mat3<K>& a, double tol = 1e-12) {
  const Mat3<K> s = a + transpose(a);
  for (int i = 0; i < 9; ++i)
    if (!ScalarOps<K>::is_zero(s.c[i], tol))
      throw SkewError(ScalarOps<K>::exact ? "axl: argument is not skew-symmetric"
                                          : "axl: argument not skew within tolerance");
  Vec3<K> r;
  for (int k = 0; k < 3; ++k) {
    K acc = ScalarOps<K>::zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (eps(i, j, k) != 0) acc += ScalarOps<K>::from_ratio(-eps(i, j, k), 2) * a(i, j);
    r(k) = acc;
  }
  return r;
}

template <class K>
Vec3<K> ten3_colon_mat(const Ten3<K>& c, const Mat3<K>& b) {  // (C:B)_i = C_ijp B_pj
  Vec3<K> r;
  for (int i = 0; i < 3; ++i) {
    K s = ScalarOps<K>::zero();
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p) s += c(i, j, p) * b(p, j);
    r(i) = s;
  }
  return r;
}

template <class K>
Mat3<K> ten3_dot_vec(const Ten3<K>& c, const Vec3<K>& n) {  // (C.n)_ij = C_ijk n_k
  Mat3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K s = ScalarOps<K>::zero();
      for (int k = 0; k < 3; ++k) s += c(i, j, k) * n(k);
      r(i, j) = s;
    }
  return r;
}

// Transposition over the first two indices, an involution.
template <class K>
Ten3<K> ten3_t12(const Ten3<K>& c) {
  Ten3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j, k) = c(j, i, k);
  return r;
}

// (a (x) 1)_ijk = a_i delta_jk
template <class K>
Ten3<K> vec_outer_id(const Vec3<K>& a) {
  Ten3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j, j) = a(i);
  return r;
}

template <class K>
bool all_zero(const Vec3<K>& v, double tol = 0.0) {
  for (int i = 0; i < 3; ++i)
    if (!ScalarOps<K>::is_zero(v(i), tol)) return false;
  return true;
}

template <class K>
bool all_zero(const Mat3<K>& m, double tol = 0.0) {
  for (int i = 0; i < 9; ++i)
    if (!ScalarOps<K>::is_zero(m.c[i], tol)) return false;
  return true;
}

template <class K>
bool all_zero(const Ten3<K>& t, double tol = 0.0) {
  for (int i = 0; i < 27; ++i)
    if (!ScalarOps<K>::is_zero(t.c[i], tol)) return false;
  return true;
}

template <class K>
double max_abs(const Vec3<K>& v) {
  double m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(ScalarOps<K>::to_double(v(i))));
  return m;
}

template <class K>
double max_abs(const Mat3<K>& a) {
  double m = 0;
  for (int i = 0; i < 9; ++i) m = std::max(m, std::abs(ScalarOps<K>::to_double(a.c[i])));
  return m;
}

template <class K>
double max_abs(const Ten3<K>& t) {
  double m = 0;
  for (int i = 0; i < 27; ++i) m = std::max(m, std::abs(ScalarOps<K>::to_double(t.c[i])));
  return m;
}

}  // namespace ccs
