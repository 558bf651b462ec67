#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "topotutte/polynomial.hpp"
#include "topotutte/sampling.hpp"

using namespace topotutte;
using topotutte::testing::P;

namespace {

Poly random_poly(std::mt19937_64& rng) {
  const char* names[] = {"X", "Y", "A"};
  std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 4), count(0, 4), var(0, 2);
  Poly p;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int j = 0; j < 2; ++j) m = m * Monomial(Var(names[var(rng)]), exp(rng));
    p.add_term(m, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("products and half exponents") {
  CHECK(P("X+1") * P("Y+1") == P("X*Y + X + Y + 1"));
  CHECK(P("A^(1/2)") * P("A^(1/2)") == P("A"));
  CHECK(P("A^(1/2)").to_string() == "A^(1/2)");
  CHECK(P("Y^-1") * P("Y") == Poly(1));
  CHECK((P("X") - P("X")).is_zero());
  CHECK(Poly().to_string() == "0");
}

TEST_CASE("sum of two halves gives the example BR polynomial") {
  const Poly sum = P("Y+2+X") + P("Y^2*Z^2 + 2*Y*Z + X*Y*Z");
  CHECK(sum.to_string() == "X + X*Y*Z + Y + 2*Y*Z + Y^2*Z^2 + 2");
}

TEST_CASE("canonical printing") {
  CHECK(P("3 + B*X + A + 3*B").to_string() == "A + 3*B + B*X + 3");
  CHECK(P("-x + 1/2").to_string() == "-x + 1/2");
  CHECK(P("A^(-3/2)").to_string() == "A^(-3/2)");
  CHECK(Poly::variable(Var::arrow(Rational(1, 2)), 4).to_string() == "K{1/2}^2");
}

TEST_CASE("evaluate") {
  const Var x("X"), y("Y"), a("A"), b("B");
  CHECK(evaluate(P("X+2+Y"), {{x, 1}, {y, 1}}) == 4);
  CHECK(evaluate(P("A^(1/2)*B^(1/2)"), {{a, 4}, {b, 9}}) == 6);
  CHECK_THROWS_AS(evaluate(P("X+Y"), {{x, 1}}), std::domain_error);
  CHECK_THROWS_AS(evaluate(P("X^-1"), {{x, 0}}), std::domain_error);
  CHECK_THROWS_AS(evaluate(P("A^(1/2)"), {{a, 2}}), std::domain_error);
}

TEST_CASE("monomial substitution turns Krushkal into BR on the torus example") {
  const Poly k = P("X*B + A + 3*B + 3");
  const Poly br = P("Y") * substitute_monomial(k, {{Var("A"), P("Y*Z^2")}, {Var("B"), P("Y^-1")}});
  CHECK(br == P("X + 3*Y + 3 + Y^2*Z^2"));
  CHECK(substitute_monomial(k, {{Var("A"), P("A")}}) == k);
  CHECK_THROWS_AS(substitute_monomial(k, {{Var("A"), P("A+1")}}), std::invalid_argument);
}

TEST_CASE("general substitution") {
  CHECK(substitute(P("x^2 + y"), {{Var("x"), P("t+1")}}) == P("t^2 + 2*t + 1 + y"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Poly::parse("X +"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse("(X"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse("X^(1/3)"), std::invalid_argument);
}

TEST_CASE("ring laws, evaluation homomorphism and print round trip on random polynomials") {
  std::mt19937_64 rng(3);
  RationalSampler points(5);
  const Var x("X"), y("Y"), a("A");
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(Poly::parse(p.to_string()) == p);
    // Doubled exponents can be odd, so every point is a square.
    auto square = [&] {
      const Rational r = points.next();
      return Rational(r * r);
    };
    const Assignment at{{x, square()}, {y, square()}, {a, square()}};
    CHECK(evaluate(p * q, at) == evaluate(p, at) * evaluate(q, at));
  }
}
