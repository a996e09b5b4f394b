#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/opoly.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Factorization shift: J − σI = LU with σ = 0, α² (real) or −α² (imaginary).
struct Shift {
  enum class Kind { none, real, imaginary };

  Kind kind = Kind::none;
  Rational alpha;

  static Shift none() { return {}; }

  static Shift real(Rational a) {
    if (a.is_zero()) throw InvalidShift("real shift needs alpha != 0; use the unshifted path");
    return {Kind::real, std::move(a)};
  }

  static Shift imaginary(Rational a) {
    if (a.is_zero())
      throw InvalidShift("imaginary shift needs alpha != 0; use the unshifted path");
    return {Kind::imaginary, std::move(a)};
  }

  Rational pivot() const {
    switch (kind) {
      case Kind::none: return Rational(0);
      case Kind::real: return alpha * alpha;
      case Kind::imaginary: return -(alpha * alpha);
    }
    return Rational(0);
  }

  std::string str() const {
    switch (kind) {
      case Kind::none: return "none";
      case Kind::real: return alpha.str();
      case Kind::imaginary: return "i:" + alpha.str();
    }
    return "none";
  }

  friend bool operator==(const Shift&, const Shift&) = default;
};

/// Pivot chain u_0..u_{n-1} and multiplier chain l_1..l_{n-1} of the
/// triangular factorization J − σI = LU (l[i] stores l_{i+1}).
struct LUFactors {
  std::vector<Rational> u;
  std::vector<Rational> l;
  Shift shift;
};

namespace detail {

/// P_0(σ)..P_n(σ) by the three-term recurrence evaluated at the pivot.
inline std::vector<Rational> pivot_values(const MonicJacobi& J, const Rational& sigma) {
  std::vector<Rational> p;
  p.reserve(static_cast<std::size_t>(J.order()) + 1);
  p.push_back(Rational(1));
  for (int j = 0; j < J.order(); ++j) {
    Rational next = (sigma - J.b[static_cast<std::size_t>(j)]) * p[static_cast<std::size_t>(j)];
    if (j > 0)
      next -= J.c[static_cast<std::size_t>(j - 1)] * p[static_cast<std::size_t>(j - 1)];
    p.push_back(std::move(next));
  }
  return p;
}

}  // namespace detail

/// LU factorization of J − σI: u_j = −P_{j+1}(σ)/P_j(σ), l_{j+1} = c_j/u_j.
/// A vanishing pivot value means the factorization does not exist; a real
/// shift additionally demands the sign condition (−1)^j P_j(α²) > 0 (the
/// testable content of the spectral-gap hypothesis).
inline LUFactors lu(const MonicJacobi& J, const Shift& shift = Shift::none()) {
  if (J.order() < 1) throw LengthMismatch("matrix must have at least one diagonal entry");
  const Rational sigma = shift.pivot();
  const std::vector<Rational> p = detail::pivot_values(J, sigma);
  bool negate = false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) throw SingularPivot(static_cast<int>(j));
    if (shift.kind == Shift::Kind::real && (negate ? -p[j] : p[j]).sign() < 0)
      throw SignConditionViolated(static_cast<int>(j),
                                  "(-1)^j P_j(" + sigma.str() + ") is negative");
    negate = !negate;
  }
  LUFactors f;
  f.shift = shift;
  f.u.reserve(p.size() - 1);
  for (std::size_t j = 0; j + 1 < p.size(); ++j) f.u.push_back(-p[j + 1] / p[j]);
  f.l.reserve(J.c.size());
  for (std::size_t j = 0; j < J.c.size(); ++j) f.l.push_back(J.c[j] / f.u[j]);
  return f;
}

/// L·U + σI expanded back to a monic Jacobi matrix (round-trip companion of
/// lu): b_j − σ = u_j + l_j with l_0 = 0, and c_j = l_{j+1}·u_j.
inline MonicJacobi lu_product(const LUFactors& f) {
  const Rational sigma = f.shift.pivot();
  MonicJacobi J;
  J.b.reserve(f.u.size());
  for (std::size_t j = 0; j < f.u.size(); ++j) {
    Rational bj = f.u[j] + sigma;
    if (j >= 1) bj += f.l[j - 1];
    J.b.push_back(std::move(bj));
  }
  J.c.reserve(f.l.size());
  for (std::size_t j = 0; j < f.l.size(); ++j) J.c.push_back(f.l[j] * f.u[j]);
  return J;
}

/// Darboux transform U·L + σI: the monic Jacobi matrix of (t−σ)dμ.
/// ̃b_j = u_j + l_{j+1} + σ and ̃c_j = u_{j+1}·l_{j+1}, taken over the finite
/// factor window, so the last diagonal entry lacks its l term: it is exact
/// for measures whose coefficient chain terminates at this order and a
/// truncation otherwise.
inline MonicJacobi ul(const LUFactors& f) {
  const Rational sigma = f.shift.pivot();
  MonicJacobi J;
  J.b.reserve(f.u.size());
  for (std::size_t j = 0; j < f.u.size(); ++j) {
    Rational bj = f.u[j] + sigma;
    if (j < f.l.size()) bj += f.l[j];
    J.b.push_back(std::move(bj));
  }
  J.c.reserve(f.l.size());
  for (std::size_t j = 0; j < f.l.size(); ++j) J.c.push_back(f.u[j + 1] * f.l[j]);
  return J;
}

/// The interleaved chain (u_0, l_1, u_1, l_2, ...): the subdiagonal of the
/// transformed generalized Jacobi matrix.
inline std::vector<Rational> interleave(const LUFactors& f) {
  std::vector<Rational> chain;
  chain.reserve(f.u.size() + f.l.size());
  for (std::size_t j = 0; j < f.u.size(); ++j) {
    chain.push_back(f.u[j]);
    if (j < f.l.size()) chain.push_back(f.l[j]);
  }
  return chain;
}

/// Dense 2n×2n expansion of the block triangular factors of 𝔍 − αI = 𝔏𝔘:
/// 𝔏 has unit diagonal blocks (carrying −α below the unit diagonal when
/// shifted) and multiplier blocks [[0,0],[0,l_j]]; 𝔘 has pivot blocks
/// [[−α,1],[u_j,0]] and the superdiagonal blocks [[0,0],[1,0]].
template <typename S>
struct BlockFactors {
  DenseMatrix<S> lower;
  DenseMatrix<S> upper;
};

namespace detail {

template <typename S>
BlockFactors<S> expand_block_factors(const LUFactors& f, const S& alpha) {
  const int n = static_cast<int>(f.u.size());
  BlockFactors<S> out{DenseMatrix<S>(2 * n), DenseMatrix<S>(2 * n)};
  for (int j = 0; j < n; ++j) {
    out.lower.at(2 * j, 2 * j) = S(1);
    out.lower.at(2 * j + 1, 2 * j + 1) = S(1);
    out.lower.at(2 * j + 1, 2 * j) = -alpha;
    if (j >= 1) out.lower.at(2 * j + 1, 2 * j - 1) = S(f.l[static_cast<std::size_t>(j - 1)]);
    out.upper.at(2 * j, 2 * j) = -alpha;
    out.upper.at(2 * j, 2 * j + 1) = S(1);
    out.upper.at(2 * j + 1, 2 * j) = S(f.u[static_cast<std::size_t>(j)]);
    if (j + 1 < n) out.upper.at(2 * j + 1, 2 * j + 2) = S(1);
  }
  return out;
}

}  // namespace detail

/// Real block factors for the unshifted and real-shifted factorizations.
inline BlockFactors<Rational> block_factors(const LUFactors& f) {
  if (f.shift.kind == Shift::Kind::imaginary)
    throw InvalidShift("imaginary-shift factors are complex; use block_factors_complex");
  const Rational alpha = f.shift.kind == Shift::Kind::real ? f.shift.alpha : Rational(0);
  return detail::expand_block_factors<Rational>(f, alpha);
}

/// Complex block factors; the imaginary shift puts ∓iα where the real case
/// has ∓α, over the same real chains.
inline BlockFactors<ComplexRational> block_factors_complex(const LUFactors& f) {
  ComplexRational alpha;
  switch (f.shift.kind) {
    case Shift::Kind::none: break;
    case Shift::Kind::real: alpha = ComplexRational(f.shift.alpha); break;
    case Shift::Kind::imaginary: alpha = imaginary(f.shift.alpha); break;
  }
  return detail::expand_block_factors<ComplexRational>(f, alpha);
}

enum class Provenance { extended, chihara_real, chihara_imag };

inline std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::extended: return "extended";
    case Provenance::chihara_real: return "chihara-real";
    case Provenance::chihara_imag: return "chihara-imag";
  }
  return "extended";
}

/// Output of an extended or shifted Darboux transformation: the transformed
/// monic Jacobi matrix of order 2n together with its orthogonal polynomials
/// ̃𝔗_0..̃𝔗_{2n}. The polynomials satisfy the three-term recurrence of the
/// matrix, which is the exact sense in which the pair belongs together.
struct DarbouxResult {
  MonicJacobi matrix;
  std::vector<RationalPoly> polys;
  Provenance provenance;
};

/// Imaginary-shift variant: purely imaginary alternating diagonal ∓iα over a
/// real positive chain, with complex-coefficient polynomials.
struct ComplexDarbouxResult {
  std::vector<ComplexRational> diag;
  std::vector<Rational> chain;
  std::vector<ComplexPoly> polys;
  Provenance provenance = Provenance::chihara_imag;
};

namespace detail {

/// (P_{j+1}(λ²) − (P_{j+1}(σ)/P_j(σ))·P_j(λ²)) for each j; the numerators of
/// the odd transformed polynomials. Division by the appropriate linear factor
/// is exact because ±√σ are roots by construction.
inline std::vector<RationalPoly> odd_numerators(const OrthoSequence& ops, const Rational& sigma) {
  std::vector<RationalPoly> out;
  if (ops.polys.empty()) return out;
  out.reserve(ops.polys.size() - 1);
  for (std::size_t j = 0; j + 1 < ops.polys.size(); ++j) {
    const Rational ratio = ops.polys[j + 1](sigma) / ops.polys[j](sigma);
    out.push_back(compose_square(ops.polys[j + 1]) -
                  RationalPoly::constant(ratio) * compose_square(ops.polys[j]));
  }
  return out;
}

}  // namespace detail

/// The unwrapping map realized on matrices: LU-factor the generalized Jacobi
/// matrix of S(λ²) and recombine. The result has zero diagonal, chain
/// (u_0, l_1, u_1, ...), and polynomials ̃𝔗_{2j} = P_j(λ²),
/// ̃𝔗_{2j+1} = λ·̃P_j(λ²) with the division by λ exact.
inline DarbouxResult extended_darboux(const MonicJacobi& J) {
  const LUFactors f = lu(J, Shift::none());
  const int n = J.order();
  DarbouxResult out;
  out.provenance = Provenance::extended;
  out.matrix.b.assign(static_cast<std::size_t>(2 * n), Rational(0));
  out.matrix.c = interleave(f);
  const OrthoSequence ops = ortho_polys(J, n);
  const RationalPoly lambda = RationalPoly::variable();
  const std::vector<RationalPoly> nums = detail::odd_numerators(ops, Rational(0));
  out.polys.reserve(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    out.polys.push_back(compose_square(ops.polys[static_cast<std::size_t>(j)]));
    if (j < n) out.polys.push_back(div_exact(nums[static_cast<std::size_t>(j)], lambda));
  }
  return out;
}

/// Shifted Darboux transformation UL + αI: the monic Jacobi matrix of
/// (λ−α)S(λ²), with alternating diagonal (−α, +α, ...) over the interleaved
/// chain, and ̃𝔗^{(α)}_{2j+1} = (P_{j+1}(λ²) − (P_{j+1}(α²)/P_j(α²))P_j(λ²))/(λ−α).
inline DarbouxResult chihara(const MonicJacobi& J, const Rational& alpha) {
  const Shift shift = Shift::real(alpha);
  const LUFactors f = lu(J, shift);
  const int n = J.order();
  DarbouxResult out;
  out.provenance = Provenance::chihara_real;
  out.matrix.b.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 2 * n; ++k) out.matrix.b.push_back(k % 2 == 0 ? -alpha : alpha);
  out.matrix.c = interleave(f);
  const OrthoSequence ops = ortho_polys(J, n);
  const RationalPoly divisor{-alpha, Rational(1)};
  const std::vector<RationalPoly> nums = detail::odd_numerators(ops, shift.pivot());
  out.polys.reserve(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    out.polys.push_back(compose_square(ops.polys[static_cast<std::size_t>(j)]));
    if (j < n) out.polys.push_back(div_exact(nums[static_cast<std::size_t>(j)], divisor));
  }
  return out;
}

/// The imaginary-shift Chihara construction: diagonal ∓iα, real positive
/// chain, division by (λ − iα) exact over the complex rationals.
inline ComplexDarbouxResult chihara_imaginary(const MonicJacobi& J, const Rational& alpha) {
  const Shift shift = Shift::imaginary(alpha);
  const LUFactors f = lu(J, shift);
  const int n = J.order();
  ComplexDarbouxResult out;
  const ComplexRational ia = imaginary(alpha);
  out.diag.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 2 * n; ++k) out.diag.push_back(k % 2 == 0 ? -ia : ia);
  out.chain = interleave(f);
  const OrthoSequence ops = ortho_polys(J, n);
  const ComplexPoly divisor{-ia, ComplexRational(1)};
  const std::vector<RationalPoly> nums = detail::odd_numerators(ops, shift.pivot());
  out.polys.reserve(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    out.polys.push_back(complexify(compose_square(ops.polys[static_cast<std::size_t>(j)])));
    if (j < n) out.polys.push_back(div_exact(complexify(nums[static_cast<std::size_t>(j)]), divisor));
  }
  return out;
}

}  // namespace darboux
