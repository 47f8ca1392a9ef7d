#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "ccs/rational.hpp"

namespace ccs {

// Element of the quadratic extension Q(sqrt(s)): value = a + b*sqrt(s) with
// rational a, b, s >= 0. One radical per evaluation context is enough for
// every surface quantity in this library: at a rational surface point all
// composites of F-derivatives and n = grad F / ||grad F|| live in
// Q(sqrt(s)) with s = ||grad F(x)||^2. Exact zero means a == 0 and b == 0.
//
// Canonical form: b == 0 implies s == 0, and s is never a perfect square
// when b != 0 (perfect squares fold into the rational part on construction).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long n) : a_(n) {}
  QuadExt(const Rational& a) : a_(a) {}
  QuadExt(const Rational& a, const Rational& b, const Rational& s) : a_(a), b_(b), s_(s) {
    normalize();
  }

  // sqrt of a non-negative rational; the only way a radical enters.
  static QuadExt sqrt_of(const Rational& s) {
    if (s.sign() < 0) throw std::domain_error("QuadExt: sqrt of negative rational");
    Rational r;
    if (s.exact_sqrt(r)) return QuadExt(r);
    return QuadExt(Rational(0), Rational(1), s);
  }

  const Rational& rat() const { return a_; }
  const Rational& rad_coeff() const { return b_; }
  const Rational& radicand() const { return s_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, s_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    const Rational& s = join(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, s);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    const Rational& s = join(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, s);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Rational& s = join(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * s, x.a_ * y.b_ + x.b_ * y.a_, s);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    // conjugate inverse: 1/(a+b g) = (a-b g)/(a^2 - b^2 s)
    const Rational den = y.a_ * y.a_ - y.b_ * y.b_ * y.s_;
    if (den.is_zero()) throw std::domain_error("QuadExt: division by zero");
    QuadExt conj(y.a_ / den, -y.b_ / den, y.s_);
    return x * conj;
  }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).is_zero(); }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(s_.to_double());
  }

  std::string str() const {
    if (is_rational()) return a_.str();
    return a_.str() + " + (" + b_.str() + ")*sqrt(" + s_.str() + ")";
  }

 private:
  void normalize() {
    if (b_.is_zero()) {
      s_ = Rational(0);
      return;
    }
    Rational r;
    if (s_.exact_sqrt(r)) {
      a_ += b_ * r;
      b_ = Rational(0);
      s_ = Rational(0);
    }
    if (s_.sign() < 0) throw std::domain_error("QuadExt: negative radicand");
  }

  // Binary ops require a common radicand (pure rationals are compatible
  // with anything).
  static const Rational& join(const QuadExt& x, const QuadExt& y) {
    if (x.b_.is_zero()) return y.s_;
    if (y.b_.is_zero()) return x.s_;
    if (x.s_ != y.s_) throw std::domain_error("QuadExt: mixed radicands");
    return x.s_;
  }

  Rational a_{0}, b_{0}, s_{0};
};

}  // namespace ccs
