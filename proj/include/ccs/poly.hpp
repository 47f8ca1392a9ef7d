#pragma once

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/rational.hpp"
#include "ccs/scalar.hpp"
#include "ccs/tensor.hpp"

namespace ccs {

// Exponent triple of a monomial x1^e0 x2^e1 x3^e2.
struct Mono {
  std::array<int, 3> e{0, 0, 0};
  int total() const { return e[0] + e[1] + e[2]; }
};

// Graded lexicographic order; fixes the canonical term order used by the
// serializer, so serialization is deterministic.
struct GradedLex {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.e < b.e;
  }
};

// Sparse multivariate polynomial over Q in the variables x1, x2, x3.
// Invariant: no zero coefficient is ever stored.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) { add_term(Mono{}, c); }
  Poly(long n) : Poly(Rational(n)) {}

  static Poly monomial(const Rational& c, int e1, int e2, int e3) {
    Poly p;
    p.add_term(Mono{{e1, e2, e3}}, c);
    return p;
  }
  static Poly var(int axis) {  // 0-based axis -> x{axis+1}
    Mono m;
    m.e[axis] = 1;
    return monomial(Rational(1), m.e[0], m.e[1], m.e[2]);
  }

  bool is_zero() const { return terms_.empty(); }
  int degree() const {  // total degree; -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
  }

  void add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(Mono{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}}, ca * cb);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& s) const {
    Poly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly diff(int axis) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      if (m.e[axis] == 0) continue;
      Mono d = m;
      d.e[axis] -= 1;
      r.add_term(d, c * Rational(m.e[axis]));
    }
    return r;
  }

  template <class K>
  K eval(const Vec3<K>& x) const {
    K acc = ScalarOps<K>::zero();
    for (const auto& [m, c] : terms_) {
      K t = ScalarOps<K>::from_rational(c);
      for (int a = 0; a < 3; ++a)
        for (int k = 0; k < m.e[a]; ++k) t *= x(a);
      acc += t;
    }
    return acc;
  }

  // Canonical form, round-trips through parse(). Terms in graded-lex order,
  // each "c * x1^a x2^b x3^c" with rational c as "p/q"; exponent 1 is
  // abbreviated, zero exponents are omitted, the zero polynomial is "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      if (m.total() > 0) {
        os << " *";
        for (int a = 0; a < 3; ++a) {
          if (m.e[a] == 0) continue;
          os << " x" << (a + 1);
          if (m.e[a] > 1) os << "^" << m.e[a];
        }
      }
    }
    return os.str();
  }

  // Parses the field literal format: terms joined by '+'/'-', each term
  // an optional rational coefficient, optional '*', and variable factors
  // "x1^a x2^b x3^c". Malformed input raises ParseError naming the term.
  static Poly parse(const std::string& s);

  const std::map<Mono, Rational, GradedLex>& terms() const { return terms_; }

 private:
  std::map<Mono, Rational, GradedLex> terms_;
};

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline bool parse_uint(const std::string& s, size_t& i, long& out) {
  size_t j = i;
  long v = 0;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
    v = v * 10 + (s[j] - '0');
    ++j;
  }
  if (j == i) return false;
  out = v;
  i = j;
  return true;
}

}  // namespace detail

inline Poly Poly::parse(const std::string& s) {
  using detail::parse_uint;
  using detail::skip_ws;
  Poly result;
  size_t i = 0;
  skip_ws(s, i);
  if (i == s.size()) throw ParseError("empty field literal");
  bool first_term = true;
  while (i < s.size()) {
    const size_t term_start = i;
    int sign = 1;
    skip_ws(s, i);
    if (!first_term) {
      if (s[i] == '+') {
        ++i;
      } else if (s[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw ParseError("expected '+' or '-' before term at \"" + s.substr(i) + "\"");
      }
      skip_ws(s, i);
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
      skip_ws(s, i);
    }
    first_term = false;
    // a negatively signed coefficient may follow the separator
    if (i < s.size() && s[i] == '-') {
      sign = -sign;
      ++i;
      skip_ws(s, i);
    }

    // coefficient (optional when a variable factor follows)
    Rational coeff(1);
    bool saw_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      long num = 0, den = 1;
      parse_uint(s, i, num);
      skip_ws(s, i);
      if (i < s.size() && s[i] == '/') {
        ++i;
        skip_ws(s, i);
        if (!parse_uint(s, i, den) || den == 0)
          throw ParseError("bad denominator in term \"" + s.substr(term_start) + "\"");
      }
      coeff = Rational(num, den);
      saw_coeff = true;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws(s, i);
      }
    }

    // variable factors
    Mono m;
    bool saw_var = false;
    while (i < s.size() && s[i] == 'x') {
      ++i;
      if (i >= s.size() || s[i] < '1' || s[i] > '3')
        throw ParseError("bad variable in term \"" + s.substr(term_start) + "\" (use x1,x2,x3)");
      const int axis = s[i] - '1';
      ++i;
      long expv = 1;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws(s, i);
        if (!parse_uint(s, i, expv) || expv < 0)
          throw ParseError("bad exponent in term \"" + s.substr(term_start) + "\"");
      }
      m.e[axis] += static_cast<int>(expv);
      saw_var = true;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {  // tolerate 'x1 * x2'
        size_t save = i + 1;
        skip_ws(s, save);
        if (save < s.size() && s[save] == 'x') i = save;
      }
    }

    if (!saw_coeff && !saw_var)
      throw ParseError("unreadable term \"" + s.substr(term_start) + "\"");
    result.add_term(m, sign == 1 ? coeff : -coeff);
    skip_ws(s, i);
  }
  return result;
}

template <>
struct ScalarOps<Poly> {
  static constexpr bool exact = true;
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }
  static Poly from_ratio(long p, long q) { return Poly(Rational(p, q)); }
  static Poly from_rational(const Rational& r) { return Poly(r); }
  static bool is_zero(const Poly& p, double /*tol*/ = 0.0) { return p.is_zero(); }
  static double to_double(const Poly& p) {
    // magnitude proxy for diagnostics only: sum of |coefficients|
    double s = 0;
    for (const auto& [m, c] : p.terms()) s += std::abs(c.to_double());
    return s;
  }
  static Poly sqrt(const Poly&) { throw std::domain_error("Poly has no sqrt"); }
};

}  // namespace ccs
