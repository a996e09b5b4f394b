#pragma once

// Shared test machinery: a deterministic generator for random rational data
// and independent oracles (naive cofactor determinants, naive polynomial
// arithmetic) that the fast implementation paths are checked against.

#include <cstdint>
#include <vector>

#include "darboux/moments.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace testsupport {

using darboux::Atom;
using darboux::DiscreteMeasure;
using darboux::Rational;
using darboux::RationalPoly;

// splitmix64: tiny, seedable, reproducible across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 9, long max_den = 9) {
    long num = range(-max_num, max_num);
    long den = range(1, max_den);
    return Rational(num, den);
  }

  Rational positive_rational(long max_num = 20, long max_den = 20) {
    return Rational(range(1, max_num), range(1, max_den));
  }

  RationalPoly poly(int max_degree = 5) {
    int deg = static_cast<int>(range(0, max_degree));
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(rational());
    return RationalPoly(std::move(coeffs));
  }

  // Random positive measure: up to max_atoms distinct points drawn from the
  // given support list, positive rational weights.
  DiscreteMeasure discrete(const std::vector<long>& support, int max_atoms) {
    std::vector<long> points = support;
    for (std::size_t i = points.size(); i-- > 1;) {
      std::size_t j = static_cast<std::size_t>(next() % (i + 1));
      std::swap(points[i], points[j]);
    }
    const int k = static_cast<int>(range(1, std::min<long>(max_atoms, static_cast<long>(points.size()))));
    DiscreteMeasure m;
    for (int i = 0; i < k; ++i) m.atoms.push_back({Rational(points[static_cast<std::size_t>(i)]), positive_rational()});
    return m;
  }

  // Random positive measure with rational points in (0, 100], distinct,
  // positive rational weights. When square_points is set, each point is the
  // square of a rational, so the measure admits exact unwrapping.
  DiscreteMeasure discrete_rational(int max_atoms, bool square_points = false) {
    const int k = static_cast<int>(range(1, max_atoms));
    DiscreteMeasure m;
    while (static_cast<int>(m.atoms.size()) < k) {
      Rational p(range(1, square_points ? 10 : 100), range(1, 10));
      if (square_points) p = p * p;
      if (p > Rational(100)) continue;
      bool dup = false;
      for (const Atom& a : m.atoms) dup = dup || a.point == p;
      if (dup) continue;
      m.atoms.push_back({p, positive_rational()});
    }
    return m;
  }

private:
  std::uint64_t state_;
};

// Determinant by cofactor expansion along the first row; exponential and
// deliberately dumb, the reference for hankel_det.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  if (n == 1) return a[0][0];
  Rational acc(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(std::move(row));
    }
    Rational term = a[0][c] * cofactor_det(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

inline Rational hankel_oracle(const darboux::MomentSequence& s, int j) {
  const std::size_t n = static_cast<std::size_t>(j) + 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = s[r + c];
  return cofactor_det(a);
}

// Naive coefficient loops, the reference for the Polynomial operators.
inline RationalPoly add_oracle(const RationalPoly& p, const RationalPoly& q) {
  std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(p.coeff(i) + q.coeff(i));
  return RationalPoly(std::move(out));
}

inline RationalPoly mul_oracle(const RationalPoly& p, const RationalPoly& q) {
  if (p.is_zero() || q.is_zero()) return RationalPoly();
  std::vector<Rational> out(p.coeffs().size() + q.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t a = 0; a <= i; ++a) out[i] += p.coeff(a) * q.coeff(i - a);
  return RationalPoly(std::move(out));
}

inline darboux::MeasureSpec two_atom_spec() {
  return DiscreteMeasure{{{Rational(1), Rational(1, 2)}, {Rational(4), Rational(1, 2)}}};
}

}  // namespace testsupport
