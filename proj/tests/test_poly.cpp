#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccs/fields.hpp"
#include "ccs/poly.hpp"
#include "helpers.hpp"

using namespace ccs;
using namespace ccs::testing;

TEST_CASE("field literal parser round-trips with the serializer") {
  Prng rng(3);
  for (int it = 0; it < 50; ++it) {
    const Poly p = random_poly(rng, 4, 10);
    CHECK(Poly::parse(p.str()) == p);
  }
  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly::parse("3/2 * x1^2 x3") == Poly::monomial(Rational(3, 2), 2, 0, 1));
  CHECK(Poly::parse("x2") == Poly::var(1));
  CHECK(Poly::parse("-x1 + x1") == Poly());
  CHECK(Poly::parse("2 x1 x2^3").str() == "2 * x1 x2^3");
  CHECK_THROWS_AS(Poly::parse("3/2 * x4"), ParseError);
  CHECK_THROWS_AS(Poly::parse("2 + + 3"), ParseError);
  CHECK_THROWS_AS(Poly::parse(""), ParseError);
  // the diagnostic names the offending term
  try {
    Poly::parse("1 + 5/0 * x1");
    CHECK(false);
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("5/0") != std::string::npos);
  }
}

TEST_CASE("gradient row convention and basic examples") {
  // u = (x1, 0, 0): grad u = e1 (x) e1
  PolyVec u(Poly::var(0), Poly(), Poly());
  PolyMat g = grad_vec(u);
  CHECK(g(0, 0) == Poly(1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(i == 0 && j == 0)) CHECK(g(i, j).is_zero());

  // u = (x2^2, 0, 0): (grad u)_12 = 2 x2
  PolyVec u2(Poly::monomial(Rational(1), 0, 2, 0), Poly(), Poly());
  CHECK(grad_vec(u2)(0, 1) == Poly::monomial(Rational(2), 0, 1, 0));

  // constant field
  PolyVec uc(Poly(4), Poly(Rational(1, 2)), Poly(-3));
  CHECK(field_zero(grad_vec(uc)));

  // curl(x2^2, 0, 0) = (0, 0, -2 x2)
  const PolyVec c = curl_vec(u2);
  CHECK(c(0).is_zero());
  CHECK(c(1).is_zero());
  CHECK(c(2) == Poly::monomial(Rational(-2), 0, 1, 0));
}

TEST_CASE("differential identities hold as exact polynomial identities") {
  Prng rng(5);
  for (int it = 0; it < 20; ++it) {
    const PolyVec u = PolyVec(random_poly(rng, 4, 10), random_poly(rng, 4, 10),
                              random_poly(rng, 4, 10));
    // div curl = 0
    CHECK(div_vec(curl_vec(u)).is_zero());
    // curl u = 2 axl(skew grad u)
    const PolyVec two_axl = Poly(2) * axl(skew(grad_vec(u)));
    CHECK(field_zero(curl_vec(u) - two_axl));
    // tr(grad curl u) = 0
    CHECK(tr(grad_vec(curl_vec(u))).is_zero());
    // mixed partials commute
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(u(i).diff(a).diff(b) == u(i).diff(b).diff(a));
    // gradient fields are curl-free
    const Poly phi = random_poly(rng, 4, 10);
    CHECK(field_zero(curl_vec(grad_scalar(phi))));
    // Div Curl P = 0 for any matrix field
    PolyMat P;
    for (int i = 0; i < 9; ++i) P.c[i] = random_poly(rng, 3, 10);
    CHECK(field_zero(div_mat(curl_mat(P))));
    // grad axl(skew grad u) = [Curl(sym grad u)]^T
    const PolyMat ga = grad_vec(axl(skew(grad_vec(u))));
    CHECK(field_zero(ga - transpose(curl_mat(sym(grad_vec(u))))));
    // Div{anti Div[Curl(sym grad u)]} = 0
    CHECK(field_zero(div_mat(anti(div_mat(curl_mat(sym(grad_vec(u))))))));
  }
  // constant matrix field
  PolyMat Pc;
  Pc(0, 1) = Poly(7);
  Pc(2, 2) = Poly(Rational(-1, 3));
  CHECK(field_zero(curl_mat(Pc)));
  CHECK(field_zero(div_mat(Pc)));
}

TEST_CASE("random fields are deterministic and dense") {
  const PolyVec a = random_field(42, 4, 10);
  const PolyVec b = random_field(42, 4, 10);
  for (int i = 0; i < 3; ++i) CHECK(a(i) == b(i));
  const PolyVec c = random_field(43, 4, 10);
  bool differs = false;
  for (int i = 0; i < 3; ++i)
    if (!(a(i) == c(i))) differs = true;
  CHECK(differs);

  // degree 0: constant
  const PolyVec k = random_field(7, 0, 10);
  CHECK(field_zero(grad_vec(k)));

  // degree 4: third partial derivatives are nonzero polynomials
  const PolyVec q = random_field(9, 4, 10);
  bool all_nonzero = true;
  for (int i = 0; i < 3; ++i)
    for (int a1 = 0; a1 < 3; ++a1)
      for (int a2 = 0; a2 < 3; ++a2)
        for (int a3 = 0; a3 < 3; ++a3)
          if (q(i).diff(a1).diff(a2).diff(a3).is_zero()) all_nonzero = false;
  CHECK(all_nonzero);

  // coefficients within bound
  for (int i = 0; i < 3; ++i)
    for (const auto& [m, coef] : q(i).terms()) {
      CHECK(coef.abs() <= Rational(10));
      CHECK(!coef.is_zero());
    }
}

TEST_CASE("evaluation commutes with differentiation (float spot check)") {
  const PolyVec u = random_field(21, 4, 10);
  const PolyMat g = grad_vec(u);
  const double h = 1e-5;
  const Vec3<double> x(0.37, -0.81, 0.56);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec3<double> xp = x, xm = x;
      xp(j) += h;
      xm(j) -= h;
      const double fd = (u(i).eval(xp) - u(i).eval(xm)) / (2 * h);
      const double exact = g(i, j).eval(x);
      CHECK(std::abs(fd - exact) <= 1e-6 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("representation invariants: degree drop, no stored zeros") {
  Prng rng(19);
  for (int it = 0; it < 20; ++it) {
    const Poly p = random_poly(rng, 4, 10);
    for (int a = 0; a < 3; ++a) {
      const Poly d = p.diff(a);
      CHECK(d.degree() <= p.degree() - 1);
      for (const auto& [m, c] : d.terms()) CHECK(!c.is_zero());
    }
    // cancellation never leaves a zero term behind
    const Poly z = p - p;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    const Poly sum = p + p.scaled(Rational(-1));
    CHECK(sum.terms().empty());
  }
  // constant derivative degree convention: zero polynomial has degree -1
  CHECK(Poly(Rational(3)).diff(0).degree() == -1);
}

TEST_CASE("polynomial evaluation is exact at rational points") {
  Prng rng(17);
  const Poly p = random_poly(rng, 4, 10);
  const Vec3<Rational> x(Rational(1, 3), Rational(-2, 7), Rational(5, 4));
  // evaluate the derivative polynomial vs. differentiate-then-evaluate on a
  // 1-D restriction through x
  const Poly dp = p.diff(0);
  const Rational direct = dp.eval(x);
  // restriction r(t) = p(t, x2, x3) has r'(x1) = direct
  Poly r = p;
  // substitute x2, x3 by constants via evaluation on a poly vector
  const Vec3<Poly> line(Poly::var(0), Poly(x(1)), Poly(x(2)));
  const Poly restricted = r.eval(line);
  CHECK(restricted.diff(0).eval(x) == direct);
}
