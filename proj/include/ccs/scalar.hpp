#pragma once

#include <cmath>
#include <cstdlib>

#include "ccs/quadext.hpp"
#include "ccs/rational.hpp"

namespace ccs {

// Scalar kinds the tensor/field layer is generic over:
//   Rational  — exact reference arithmetic
//   QuadExt   — exact arithmetic with one surface radical
//   double    — float fast path (comparisons by tolerance, never bitwise)
//   Jet<K>    — forward-mode first derivatives over any of the above
//   Poly      — polynomial ring (field-level identities); see poly.hpp
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_ratio(long p, long q) { return Rational(p, q); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x, double /*tol*/ = 0.0) { return x.is_zero(); }
  static double to_double(const Rational& x) { return x.to_double(); }
  static Rational sqrt(const Rational& x) {
    Rational r;
    if (!x.exact_sqrt(r)) throw std::domain_error("Rational sqrt is not exact; use QuadExt");
    return r;
  }
};

template <>
struct ScalarOps<QuadExt> {
  static constexpr bool exact = true;
  static QuadExt zero() { return QuadExt(Rational(0)); }
  static QuadExt one() { return QuadExt(Rational(1)); }
  static QuadExt from_ratio(long p, long q) { return QuadExt(Rational(p, q)); }
  static QuadExt from_rational(const Rational& r) { return QuadExt(r); }
  static bool is_zero(const QuadExt& x, double /*tol*/ = 0.0) { return x.is_zero(); }
  static double to_double(const QuadExt& x) { return x.to_double(); }
  static QuadExt sqrt(const QuadExt& x) {
    if (!x.is_rational()) throw std::domain_error("QuadExt: nested radical");
    return QuadExt::sqrt_of(x.rat());
  }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_ratio(long p, long q) { return double(p) / double(q); }
  static double from_rational(const Rational& r) { return r.to_double(); }
  static bool is_zero(double x, double tol = 1e-12) { return std::abs(x) <= tol; }
  static double to_double(double x) { return x; }
  static double sqrt(double x) { return std::sqrt(x); }
};

}  // namespace ccs
