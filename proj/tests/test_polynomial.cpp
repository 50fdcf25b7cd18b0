#include "compsum/polynomial.hpp"

#include "doctest.h"

#include "compsum/rational.hpp"

using compsum::Polynomial;
using compsum::Rational;

TEST_SUITE("polynomial") {

TEST_CASE("construction trims trailing zeros") {
  const Polynomial p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK(p.is_constant());
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
  CHECK(Polynomial(Rational(0)).is_zero());
  CHECK(Polynomial({Rational(0), Rational(0)}) == Polynomial());
}

TEST_CASE("str uses ascending powers and elides units") {
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial(1).str() == "1");
  CHECK(Polynomial(-3).str() == "-3");
  CHECK(Polynomial::variable().str() == "x");
  CHECK(Polynomial::monomial(Rational(1), 2).str() == "x^2");
  CHECK(Polynomial::monomial(Rational(-1, 2), 3).str() == "-1/2 x^3");
  const Polynomial b2({Rational(1, 6), Rational(-1), Rational(1)});
  CHECK(b2.str() == "1/6 - x + x^2");
}

TEST_CASE("arithmetic") {
  const Polynomial x = Polynomial::variable();
  const Polynomial p = x * x - Polynomial(2) * x + Polynomial(1);  // (x-1)^2
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(-2));
  CHECK(p.coeff(2) == Rational(1));
  CHECK(p.coeff(5) == Rational(0));
  CHECK(p == (x - Polynomial(1)) * (x - Polynomial(1)));
  CHECK((p - p).is_zero());
  CHECK((-p).coeff(1) == Rational(2));
  CHECK((p * Rational(1, 2)).coeff(2) == Rational(1, 2));

  // Cancellation of the leading term drops the degree.
  const Polynomial q = x * x - p;
  CHECK(q.degree() == 1);
}

TEST_CASE("eval, substitute, pow") {
  const Polynomial x = Polynomial::variable();
  const Polynomial p = x * x + Polynomial(1);
  CHECK(p.eval(Rational(2)) == Rational(5));
  CHECK(p.eval(Rational(-1, 2)) == Rational(5, 4));
  CHECK(Polynomial().eval(Rational(3)) == Rational(0));

  // p(x - 1) = x^2 - 2x + 2
  const Polynomial shifted = p.substitute(x - Polynomial(1));
  CHECK(shifted.coeffs() == std::vector<Rational>{Rational(2), Rational(-2), Rational(1)});

  CHECK((x + Polynomial(1)).pow(3).coeffs() ==
        std::vector<Rational>{Rational(1), Rational(3), Rational(3), Rational(1)});
  CHECK(p.pow(0) == Polynomial(1));
}

}  // TEST_SUITE
