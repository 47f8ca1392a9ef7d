#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccs {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational scalar. Numerator/denominator are arbitrary-precision
// integers (GMP); every operation is closed and exact, there is no demotion
// to float anywhere in the rational pipeline.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "p/q" and a leading sign; used by the config/field parsers.
  static Rational parse(const std::string& s) {
    try {
      mpq_class q(s, 10);
      if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational literal: '" + s + "'");
    }
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }  // "p" or "p/q"

  // Exact square root when the value is a perfect square of a rational;
  // returns false otherwise. Requires a non-negative value.
  bool exact_sqrt(Rational& out) const {
    if (sgn(v_) < 0) return false;
    const mpz_class num = v_.get_num(), den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      out = Rational(mpq_class(rn) / mpq_class(rd));
      return true;
    }
    return false;
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace ccs
