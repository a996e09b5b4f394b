#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/moments.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Monic orthogonal polynomials P_0..P_n with their Gram norms
/// 𝔖(P_j²) = D_j/D_{j−1}. norms[j] requires c_0..c_{j−1}, so when n equals
/// the full matrix order the norms stop one entry short of the polynomials.
struct OrthoSequence {
  std::vector<RationalPoly> polys;
  std::vector<Rational> norms;
};

/// Runs the three-term recurrence P_{j+1} = (λ−b_j)P_j − c_{j−1}P_{j−1} up to
/// P_n. `mass` is s_0, the norm of P_0 (the matrix alone cannot know it).
inline OrthoSequence ortho_polys(const MonicJacobi& J, int n, const Rational& mass = Rational(1)) {
  if (n < 0) throw LengthMismatch("polynomial count must be nonnegative");
  if (n > J.order())
    throw DepthExceeded("P_" + std::to_string(n) + " needs b_0..b_" + std::to_string(n - 1) +
                        ", matrix order is " + std::to_string(J.order()));
  OrthoSequence out;
  out.polys.reserve(static_cast<std::size_t>(n) + 1);
  out.polys.push_back(RationalPoly::one());
  const RationalPoly lambda = RationalPoly::variable();
  for (int j = 0; j < n; ++j) {
    RationalPoly next = (lambda - RationalPoly::constant(J.b[static_cast<std::size_t>(j)])) *
                        out.polys[static_cast<std::size_t>(j)];
    if (j > 0)
      next = next - RationalPoly::constant(J.c[static_cast<std::size_t>(j - 1)]) *
                        out.polys[static_cast<std::size_t>(j - 1)];
    out.polys.push_back(std::move(next));
  }
  const int norm_count = std::min(n, static_cast<int>(J.c.size()));
  out.norms.reserve(static_cast<std::size_t>(norm_count) + 1);
  Rational acc = mass;
  out.norms.push_back(acc);
  for (int j = 0; j < norm_count; ++j) {
    acc *= J.c[static_cast<std::size_t>(j)];
    out.norms.push_back(acc);
  }
  return out;
}

/// Determinant-formula route to P_j (the oracle counterpart of the
/// recurrence): expansion of the bordered Hankel determinant over D_{j-1}.
inline RationalPoly ortho_poly_determinant(const MomentSequence& s, int j) {
  if (j < 0) throw LengthMismatch("index must be nonnegative");
  if (j == 0) return RationalPoly::one();
  if (static_cast<int>(s.size()) < 2 * j)
    throw InsufficientMoments("P_" + std::to_string(j) + " needs " + std::to_string(2 * j) +
                              " moments, have " + std::to_string(s.size()));
  const Rational scale = hankel_det(s, j - 1);
  if (scale.is_zero()) throw SingularHankel("D_" + std::to_string(j - 1) + " = 0");
  std::vector<Rational> coeffs(static_cast<std::size_t>(j) + 1);
  // Cofactor expansion along the bordering row (1, λ, ..., λ^j).
  for (int k = 0; k <= j; ++k) {
    std::vector<std::vector<Rational>> minor(static_cast<std::size_t>(j),
                                             std::vector<Rational>(static_cast<std::size_t>(j)));
    for (int r = 0; r < j; ++r) {
      int cc = 0;
      for (int c = 0; c <= j; ++c) {
        if (c == k) continue;
        minor[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc++)] =
            s[static_cast<std::size_t>(r + c)];
      }
    }
    Rational m = detail::dense_det(std::move(minor));
    if ((j + k) % 2 != 0) m = -m;
    coeffs[static_cast<std::size_t>(k)] = m / scale;
  }
  return RationalPoly(std::move(coeffs));
}

/// Kernel polynomials at the pivot:
/// ̃P_j = (P_{j+1} − (P_{j+1}(σ)/P_j(σ))·P_j) / (λ − σ), each monic of degree j.
/// Every P_j must be nonzero at the pivot, including the last numerator term.
inline std::vector<RationalPoly> kernel_polys(const OrthoSequence& ops, const Rational& pivot) {
  std::vector<Rational> values;
  values.reserve(ops.polys.size());
  for (std::size_t j = 0; j < ops.polys.size(); ++j) {
    values.push_back(ops.polys[j](pivot));
    if (values.back().is_zero())
      throw PivotOnSpectrum("P_" + std::to_string(j) + "(" + pivot.str() + ") = 0");
  }
  const RationalPoly divisor{-pivot, Rational(1)};
  std::vector<RationalPoly> out;
  if (ops.polys.empty()) return out;
  out.reserve(ops.polys.size() - 1);
  for (std::size_t j = 0; j + 1 < ops.polys.size(); ++j) {
    RationalPoly num =
        ops.polys[j + 1] - RationalPoly::constant(values[j + 1] / values[j]) * ops.polys[j];
    out.push_back(div_exact(num, divisor));
  }
  return out;
}

/// OrthoSequence with every polynomial composed with λ² (the 𝔓_j family).
inline OrthoSequence compose_square(const OrthoSequence& ops) {
  OrthoSequence out;
  out.norms = ops.norms;
  out.polys.reserve(ops.polys.size());
  for (const RationalPoly& p : ops.polys) out.polys.push_back(compose_square(p));
  return out;
}

/// Linearized family 𝔗_0..𝔗_{2n+1} of the λ²-recurrence:
/// 𝔗_{2j} = 𝔓_j and 𝔗_{2j+1} = λ·𝔓_j, where gops holds 𝔓_j = P_j(λ²).
inline std::vector<RationalPoly> linearized_polys(const OrthoSequence& gops, int n) {
  if (n < 0) throw LengthMismatch("index must be nonnegative");
  if (static_cast<std::size_t>(n) >= gops.polys.size())
    throw DepthExceeded("need squared polynomials through index " + std::to_string(n) +
                        ", have " + std::to_string(gops.polys.size()));
  const RationalPoly lambda = RationalPoly::variable();
  std::vector<RationalPoly> out;
  out.reserve(2 * static_cast<std::size_t>(n) + 2);
  for (int j = 0; j <= n; ++j) {
    out.push_back(gops.polys[static_cast<std::size_t>(j)]);
    out.push_back(lambda * gops.polys[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace darboux
