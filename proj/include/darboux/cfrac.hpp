#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "darboux/darboux.hpp"
#include "darboux/errors.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/moments.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// J-, S- or P-fraction prefix. J and P share coefficient data (P is the
/// J-fraction read in λ²); S carries the chain d_1, d_2, ... The leading
/// partial numerator is −mass: coefficients are invariant under scaling the
/// measure, so the total mass s_0 must ride along for the approximants to
/// match non-normalized moment data.
struct ContinuedFraction {
  enum class Kind { J, S, P };

  Kind kind = Kind::J;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<Rational> d;
  Rational mass = Rational(1);

  /// Number of approximant levels the prefix supports.
  int levels() const {
    return kind == Kind::S ? static_cast<int>(d.size()) + 1 : static_cast<int>(b.size());
  }
};

struct RationalApproximant {
  RationalPoly num;
  RationalPoly den;
};

/// J-fraction coefficients of the moment prefix, to the deepest order the
/// data (moment count and Hankel rank) supports.
inline ContinuedFraction jfraction(const MomentSequence& s) {
  const int n = usable_order(s);
  if (n < 1) throw InsufficientMoments("no J-fraction level is determined by the data");
  const MonicJacobi J = jacobi_from_moments(s, n);
  return {ContinuedFraction::Kind::J, J.b, J.c, {}, s[0]};
}

/// P-fraction of S(λ²): same coefficients as the J-fraction of S.
inline ContinuedFraction pfraction(const MomentSequence& s) {
  ContinuedFraction cf = jfraction(s);
  cf.kind = ContinuedFraction::Kind::P;
  return cf;
}

/// S-fraction chain d_{k+1} = γ_k where (γ_0, γ_1, ...) = (u_0, l_1, u_1, ...)
/// from the LU factorization of the Jacobi matrix: the derivation path of
/// dividing the symmetric J-fraction by λ and substituting λ² → λ. A zero
/// final pivot is the chain terminating (measure with an atom at 0) and is
/// dropped; a zero interior pivot does not occur for Stieltjes data.
inline ContinuedFraction sfraction(const MomentSequence& s) {
  const MomentClassification cls = classify(s);
  if (cls.kind != MomentClassification::Kind::stieltjes)
    throw NotStieltjes("S-fractions require Stieltjes moment data");
  const int n = usable_order(s);
  if (n < 1) throw InsufficientMoments("no S-fraction level is determined by the data");
  const MonicJacobi J = jacobi_from_moments(s, n);
  const std::vector<Rational> p = detail::pivot_values(J, Rational(0));
  for (std::size_t j = 1; j + 1 < p.size(); ++j)
    if (p[j].is_zero()) throw SingularPivot(static_cast<int>(j));
  std::vector<Rational> u;
  u.reserve(p.size() - 1);
  for (std::size_t j = 0; j + 1 < p.size(); ++j)
    u.push_back(p[j + 1].is_zero() ? Rational(0) : -p[j + 1] / p[j]);
  ContinuedFraction cf;
  cf.kind = ContinuedFraction::Kind::S;
  cf.mass = s[0];
  for (std::size_t j = 0; j < u.size(); ++j) {
    cf.d.push_back(u[j]);
    if (j < J.c.size()) cf.d.push_back(J.c[j] / u[j]);
  }
  while (!cf.d.empty() && cf.d.back().is_zero()) cf.d.pop_back();
  return cf;
}

/// k-th convergent by the standard numerator/denominator recurrences.
/// J: denominator P_k; P: the same in λ²; S: Wallis recurrence over the
/// alternating partial denominators λ, 1, λ, ...
inline RationalApproximant approximant(const ContinuedFraction& cf, int k) {
  if (k < 1 || k > cf.levels())
    throw DepthExceeded("level " + std::to_string(k) + " of a depth-" +
                        std::to_string(cf.levels()) + " fraction");
  const RationalPoly lambda = RationalPoly::variable();
  if (cf.kind == ContinuedFraction::Kind::S) {
    RationalPoly a_prev = RationalPoly::one(), a_cur;                 // A_{-1}, A_0
    RationalPoly b_prev, b_cur = RationalPoly::one();                 // B_{-1}, B_0
    for (int i = 1; i <= k; ++i) {
      const bool odd = i % 2 == 1;
      const RationalPoly t = odd ? lambda : RationalPoly::one();
      const Rational partial = i == 1 ? -cf.mass : -cf.d[static_cast<std::size_t>(i - 2)];
      RationalPoly a_next = t * a_cur + RationalPoly::constant(partial) * a_prev;
      RationalPoly b_next = t * b_cur + RationalPoly::constant(partial) * b_prev;
      a_prev = std::exchange(a_cur, std::move(a_next));
      b_prev = std::exchange(b_cur, std::move(b_next));
    }
    return {a_cur, b_cur};
  }
  RationalPoly a_prev, a_cur = -RationalPoly::constant(cf.mass);      // A_0, A_1
  RationalPoly b_prev = RationalPoly::one();
  RationalPoly b_cur = lambda - RationalPoly::constant(cf.b[0]);      // B_0, B_1
  for (int i = 1; i < k; ++i) {
    const RationalPoly t = lambda - RationalPoly::constant(cf.b[static_cast<std::size_t>(i)]);
    const RationalPoly g = RationalPoly::constant(cf.c[static_cast<std::size_t>(i - 1)]);
    RationalPoly a_next = t * a_cur - g * a_prev;
    RationalPoly b_next = t * b_cur - g * b_prev;
    a_prev = std::exchange(a_cur, std::move(a_next));
    b_prev = std::exchange(b_cur, std::move(b_next));
  }
  if (cf.kind == ContinuedFraction::Kind::P)
    return {compose_square(a_cur), compose_square(b_cur)};
  return {a_cur, b_cur};
}

/// Largest m ≤ len(s) such that the Laurent expansion of the approximant at
/// infinity equals −Σ_{j<m} s_j/λ^{j+1}, by exact long division of the power
/// series in 1/λ.
inline int laurent_match(const RationalApproximant& appr, const MomentSequence& s) {
  if (!appr.num.is_zero() && appr.num.degree() >= appr.den.degree())
    throw LengthMismatch("approximant must be strictly proper");
  if (appr.den.is_zero()) throw LengthMismatch("zero denominator");
  const int d = appr.den.degree();
  const int M = static_cast<int>(s.size());
  const Rational lead = appr.den.coeff(static_cast<std::size_t>(d));
  // den = lead·λ^d·E(1/λ), num = lead·λ^{d-1}·N(1/λ); num/den = x·N(x)/E(x), x = 1/λ.
  std::vector<Rational> e(static_cast<std::size_t>(M) + 1, Rational(0));
  for (int i = 0; i <= std::min(d, M); ++i)
    e[static_cast<std::size_t>(i)] = appr.den.coeff(static_cast<std::size_t>(d - i)) / lead;
  std::vector<Rational> nn(static_cast<std::size_t>(M) + 1, Rational(0));
  for (int i = 0; i < std::min(d, M + 1); ++i)
    nn[static_cast<std::size_t>(i)] = appr.num.coeff(static_cast<std::size_t>(d - 1 - i)) / lead;
  // Power-series inverse of E (E(0) = 1), then q_{t+1} = [x^t](N·E^{-1}).
  std::vector<Rational> inv(static_cast<std::size_t>(M) + 1, Rational(0));
  inv[0] = Rational(1);
  for (int t = 1; t <= M; ++t) {
    Rational acc(0);
    for (int j = 1; j <= t; ++j) acc += e[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(t - j)];
    inv[static_cast<std::size_t>(t)] = -acc;
  }
  int match = 0;
  for (int m = 0; m < M; ++m) {
    Rational q(0);
    for (int j = 0; j <= m; ++j)
      q += nn[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(m - j)];
    if (q != -s[static_cast<std::size_t>(m)]) break;
    match = m + 1;
  }
  return match;
}

}  // namespace darboux
