#include <doctest.h>

#include "darboux/jacobi.hpp"

#include "darboux/opoly.hpp"
#include "test_support.hpp"

using namespace darboux;
using testsupport::Rng;

namespace {
MomentSequence two_atom(int count) { return measure_moments(testsupport::two_atom_spec(), count); }
}  // namespace

TEST_CASE("recurrence coefficients from moments") {
  MonicJacobi J = jacobi_from_moments(two_atom(5), 2);
  CHECK(J.b == std::vector<Rational>{Rational(5, 2), Rational(5, 2)});
  CHECK(J.c == std::vector<Rational>{Rational(9, 4)});

  MomentSequence lag = measure_moments(LaguerreMeasure{Rational(-1, 2)}, 6);
  MonicJacobi JL = jacobi_from_moments(lag, 3);
  CHECK(JL.b == std::vector<Rational>{Rational(1, 2), Rational(5, 2), Rational(9, 2)});
  CHECK(JL.c == std::vector<Rational>{Rational(1, 2), Rational(3)});

  MomentSequence ones{Rational(1), Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(jacobi_from_moments(ones, 2), DegenerateMoments&);
  try {
    jacobi_from_moments(ones, 2);
  } catch (const DegenerateMoments& e) {
    CHECK(e.rank == 1);
  }
  CHECK_THROWS_AS(jacobi_from_moments(two_atom(3), 2), InsufficientMoments&);
}

TEST_CASE("laguerre coefficients match the closed form at larger orders") {
  const Rational alpha(-1, 2);
  MomentSequence lag = measure_moments(LaguerreMeasure{alpha}, 20);
  MonicJacobi J = jacobi_from_moments(lag, 10);
  for (int j = 0; j < 10; ++j)
    CHECK(J.b[static_cast<std::size_t>(j)] == Rational(2 * j) + alpha + Rational(1));
  for (int j = 1; j < 10; ++j)
    CHECK(J.c[static_cast<std::size_t>(j - 1)] == Rational(j) * (Rational(j) + alpha));
}

TEST_CASE("block expansion of the generalized matrix") {
  MonicJacobi J = jacobi_from_moments(two_atom(5), 2);
  GeneralizedJacobi G = generalized_from(J);
  CHECK(G.b == J.b);
  CHECK(G.c == J.c);

  RationalMatrix m2 = truncate(G, 2);
  CHECK(m2.at(0, 0) == Rational(0));
  CHECK(m2.at(0, 1) == Rational(1));
  CHECK(m2.at(1, 0) == Rational(5, 2));
  CHECK(m2.at(1, 1) == Rational(0));

  RationalMatrix m4 = truncate(G, 4);
  const Rational want[4][4] = {{Rational(0), Rational(1), Rational(0), Rational(0)},
                               {Rational(5, 2), Rational(0), Rational(1), Rational(0)},
                               {Rational(0), Rational(0), Rational(0), Rational(1)},
                               {Rational(9, 4), Rational(0), Rational(5, 2), Rational(0)}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m4.at(i, j) == want[i][j]);

  CHECK_THROWS_AS(truncate(G, 3), OddGeneralizedTruncation&);
  CHECK_THROWS_AS(truncate(G, 6), DepthExceeded&);

  MonicJacobi single{{Rational(7)}, {}};
  RationalMatrix s2 = truncate(generalized_from(single), 2);
  CHECK(s2.at(1, 0) == Rational(7));

  MomentSequence lag = measure_moments(LaguerreMeasure{Rational(-1, 2)}, 6);
  RationalMatrix l4 = truncate(generalized_from(jacobi_from_moments(lag, 3)), 4);
  CHECK(l4.at(3, 2) == Rational(5, 2));  // second block carries b_1
  CHECK(l4.at(2, 3) == Rational(1));
}

TEST_CASE("classical truncation") {
  MonicJacobi J = jacobi_from_moments(two_atom(5), 2);
  RationalMatrix m = truncate(J, 2);
  CHECK(m.at(0, 0) == Rational(5, 2));
  CHECK(m.at(0, 1) == Rational(1));
  CHECK(m.at(1, 0) == Rational(9, 4));
  CHECK(m.at(1, 1) == Rational(5, 2));
}

TEST_CASE("characteristic polynomials, exactly") {
  MonicJacobi J = jacobi_from_moments(two_atom(5), 2);
  CHECK(char_poly(truncate(generalized_from(J), 2)) ==
        RationalPoly{Rational(-5, 2), Rational(0), Rational(1)});
  CHECK(char_poly(truncate(J, 2)) == RationalPoly{Rational(4), Rational(-5), Rational(1)});
  RationalMatrix zero1(1);
  CHECK(char_poly(zero1) == RationalPoly::variable());

  // dense cross-check: char_poly of a full matrix equals the cofactor
  // expansion of det(λI − A) computed over polynomial entries
  RationalMatrix a(3);
  Rng rng(0x44);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = rng.rational();
  RationalPoly cp = char_poly(a);
  // λ³ − tr λ² + (sum of principal 2-minors) λ − det
  Rational tr = a.at(0, 0) + a.at(1, 1) + a.at(2, 2);
  Rational det = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
                 a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
                 a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
  Rational minors = (a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0)) +
                    (a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(2, 0)) +
                    (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1));
  CHECK(cp == RationalPoly{-det, minors, -tr, Rational(1)});
}

TEST_CASE("spectrum mapping: char poly of the block truncation is P_N in λ²") {
  Rng rng(0xfeed);
  const std::vector<long> points{1, 2, 3, 4, 5, 8, 12};
  for (int iter = 0; iter < 8; ++iter) {
    DiscreteMeasure m = rng.discrete(points, 5);
    const int n = static_cast<int>(m.atoms.size());
    MomentSequence s = measure_moments(m, 2 * n + 1);
    MonicJacobi J = jacobi_from_moments(s, n);
    OrthoSequence ops = ortho_polys(J, n);
    GeneralizedJacobi G = generalized_from(J);
    for (int N = 1; N <= n; ++N) {
      CHECK(char_poly(truncate(J, N)) == ops.polys[static_cast<std::size_t>(N)]);
      CHECK(char_poly(truncate(G, 2 * N)) ==
            compose_square(ops.polys[static_cast<std::size_t>(N)]));
    }
  }
}

TEST_CASE("gram matrix is a symmetric involution") {
  for (int N = 2; N <= 8; N += 2) {
    RationalMatrix g = gram(N);
    CHECK(g * g == RationalMatrix::identity(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) CHECK(g.at(i, j) == g.at(j, i));
  }
  CHECK_THROWS_AS(gram(3), OddGeneralizedTruncation&);
}

TEST_CASE("indefinite inner product") {
  std::vector<Rational> e0{Rational(1), Rational(0), Rational(0), Rational(0)};
  std::vector<Rational> e1{Rational(0), Rational(1), Rational(0), Rational(0)};
  CHECK(indefinite_inner(e0, e0) == Rational(0));  // neutral vector
  CHECK(indefinite_inner(e0, e1) == Rational(1));
  std::vector<Rational> x{Rational(1), Rational(2), Rational(3), Rational(4)};
  std::vector<Rational> y{Rational(1), Rational(0), Rational(0), Rational(1)};
  CHECK(indefinite_inner(x, y) == Rational(5));
  CHECK_THROWS_AS(indefinite_inner(e0, std::vector<Rational>{Rational(1)}), LengthMismatch&);
  std::vector<Rational> odd{Rational(1), Rational(0), Rational(0)};
  CHECK_THROWS_AS(indefinite_inner(odd, odd), LengthMismatch&);
}

TEST_CASE("definitizability sign test") {
  CHECK(definitizable_check(two_atom(5), 2));
  MomentSequence sym{Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)};
  CHECK(!definitizable_check(sym, 2));
  CHECK(definitizable_check(two_atom(5), 0));

  // agrees with the Stieltjes classification on discrete positive-support specs
  Rng rng(0x1234);
  const std::vector<long> points{1, 2, 5, 7, 10, 30};
  for (int iter = 0; iter < 12; ++iter) {
    DiscreteMeasure m = rng.discrete(points, 4);
    const int n = static_cast<int>(m.atoms.size());
    MomentSequence s = measure_moments(m, 2 * n + 2);
    CHECK(definitizable_check(s, n));
    CHECK(classify(s).kind == MomentClassification::Kind::stieltjes);
  }
}
