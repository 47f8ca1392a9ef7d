#pragma once

#include <array>

#include "ccs/scalar.hpp"

namespace ccs {

// Forward-mode first-order jet: value plus the three partial derivatives
// with respect to the ambient coordinates. Used to differentiate surface
// composites (anything containing n or T) exactly over QuadExt, and as the
// float fast path over double.
template <class K>
struct Jet {
  K v{ScalarOps<K>::zero()};
  std::array<K, 3> d{ScalarOps<K>::zero(), ScalarOps<K>::zero(), ScalarOps<K>::zero()};

  Jet() = default;
  explicit Jet(const K& value) : v(value) {}
  Jet(const K& value, const std::array<K, 3>& grad) : v(value), d(grad) {}

  // Coordinate seed: d/dx_axis = 1.
  static Jet seed(const K& value, int axis) {
    Jet j(value);
    j.d[axis] = ScalarOps<K>::one();
    return j;
  }

  Jet operator-() const { return Jet(-v, {-d[0], -d[1], -d[2]}); }

  friend Jet operator+(const Jet& x, const Jet& y) {
    return Jet(x.v + y.v, {x.d[0] + y.d[0], x.d[1] + y.d[1], x.d[2] + y.d[2]});
  }
  friend Jet operator-(const Jet& x, const Jet& y) {
    return Jet(x.v - y.v, {x.d[0] - y.d[0], x.d[1] - y.d[1], x.d[2] - y.d[2]});
  }
  friend Jet operator*(const Jet& x, const Jet& y) {
    return Jet(x.v * y.v, {x.d[0] * y.v + x.v * y.d[0], x.d[1] * y.v + x.v * y.d[1],
                           x.d[2] * y.v + x.v * y.d[2]});
  }
  friend Jet operator/(const Jet& x, const Jet& y) {
    const K inv2 = ScalarOps<K>::one() / (y.v * y.v);
    return Jet(x.v / y.v, {(x.d[0] * y.v - x.v * y.d[0]) * inv2,
                           (x.d[1] * y.v - x.v * y.d[1]) * inv2,
                           (x.d[2] * y.v - x.v * y.d[2]) * inv2});
  }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }
};

template <class K>
Jet<K> jet_sqrt(const Jet<K>& x) {
  const K r = ScalarOps<K>::sqrt(x.v);
  const K half_inv = ScalarOps<K>::from_ratio(1, 2) / r;
  return Jet<K>(r, {x.d[0] * half_inv, x.d[1] * half_inv, x.d[2] * half_inv});
}

template <class K>
struct ScalarOps<Jet<K>> {
  static constexpr bool exact = ScalarOps<K>::exact;
  static Jet<K> zero() { return Jet<K>(ScalarOps<K>::zero()); }
  static Jet<K> one() { return Jet<K>(ScalarOps<K>::one()); }
  static Jet<K> from_ratio(long p, long q) { return Jet<K>(ScalarOps<K>::from_ratio(p, q)); }
  static Jet<K> from_rational(const Rational& r) {
    return Jet<K>(ScalarOps<K>::from_rational(r));
  }
  static bool is_zero(const Jet<K>& x, double tol = 0.0) {
    return ScalarOps<K>::is_zero(x.v, tol) && ScalarOps<K>::is_zero(x.d[0], tol) &&
           ScalarOps<K>::is_zero(x.d[1], tol) && ScalarOps<K>::is_zero(x.d[2], tol);
  }
  static double to_double(const Jet<K>& x) { return ScalarOps<K>::to_double(x.v); }
  static Jet<K> sqrt(const Jet<K>& x) { return jet_sqrt(x); }
};

}  // namespace ccs
