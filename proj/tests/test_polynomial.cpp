#include <doctest.h>

#include "darboux/polynomial.hpp"

#include "test_support.hpp"

using darboux::Rational;
using darboux::RationalPoly;
using testsupport::Rng;

namespace {
const RationalPoly x = RationalPoly::variable();
RationalPoly C(long n, long d = 1) { return RationalPoly::constant(Rational(n, d)); }
}  // namespace

TEST_CASE("addition cancels and normalizes") {
  CHECK((x - C(5, 2)) + C(5, 2) == x);
  RationalPoly p{Rational(4), Rational(-5), Rational(1)};  // x^2 - 5x + 4
  CHECK(RationalPoly() + p == p);
  CHECK(p + RationalPoly::constant(Rational(8, 5)) * (x - C(5, 2)) ==
        RationalPoly{Rational(0), Rational(-17, 5), Rational(1)});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
}

TEST_CASE("multiplication expands exactly") {
  CHECK((x - C(1)) * (x - C(4)) == RationalPoly{Rational(4), Rational(-5), Rational(1)});
  RationalPoly p{Rational(1, 3), Rational(2)};
  CHECK(p * RationalPoly::one() == p);
  CHECK((p * RationalPoly()).is_zero());
}

TEST_CASE("evaluation is exact Horner") {
  RationalPoly p{Rational(4), Rational(-5), Rational(1)};
  CHECK(p(Rational(0)) == Rational(4));
  CHECK(p(Rational(1, 4)) == Rational(45, 16));
  CHECK(RationalPoly::one()(Rational(123, 7)) == Rational(1));
}

TEST_CASE("exact division and the nonzero-remainder error") {
  RationalPoly p{Rational(0), Rational(-17, 5), Rational(1)};  // x^2 - 17/5 x
  CHECK(div_exact(p, x) == x - C(17, 5));
  RationalPoly diff_sq{Rational(-1, 4), Rational(0), Rational(1)};
  CHECK(div_exact(diff_sq, x - C(1, 2)) == x + C(1, 2));
  CHECK_THROWS_AS(div_exact(x - C(1), x - C(2)), darboux::NonzeroRemainder&);
  CHECK_THROWS_AS(div_exact(x, RationalPoly()), darboux::NonzeroRemainder&);
}

TEST_CASE("compose_square interleaves coefficients") {
  CHECK(compose_square(x - C(5, 2)) == RationalPoly{Rational(-5, 2), Rational(0), Rational(1)});
  CHECK(compose_square(RationalPoly::one()) == RationalPoly::one());
  CHECK(compose_square(x * x) == RationalPoly{0, 0, 0, 0, Rational(1)});
  CHECK(compose_square(RationalPoly()).is_zero());
}

TEST_CASE("ring axioms and div round trip on random polynomials") {
  Rng rng(0x5eed01);
  for (int iter = 0; iter < 60; ++iter) {
    RationalPoly p = rng.poly(), q = rng.poly(), r = rng.poly();
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK(p + q == testsupport::add_oracle(p, q));
    CHECK(p * q == testsupport::mul_oracle(p, q));
    if (!q.is_zero()) CHECK(div_exact(p * q, q) == p);
    Rational v = rng.rational();
    CHECK(compose_square(p)(v) == p(v * v));
  }
}

TEST_CASE("complex polynomial division by a gaussian-rational linear factor") {
  using darboux::ComplexPoly;
  using darboux::ComplexRational;
  ComplexRational i = darboux::imaginary(Rational(1));
  // λ² + 1 = (λ − i)(λ + i)
  ComplexPoly p{ComplexRational(Rational(1)), ComplexRational(), ComplexRational(Rational(1))};
  ComplexPoly lin{-i, ComplexRational(Rational(1))};
  CHECK(div_exact(p, lin) == ComplexPoly{i, ComplexRational(Rational(1))});
}
