#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/moments.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Monic Jacobi matrix: diagonal b, subdiagonal c, superdiagonal all ones.
/// order() is the number of diagonal entries; c holds order()−1 entries.
struct MonicJacobi {
  std::vector<Rational> b;
  std::vector<Rational> c;

  int order() const { return static_cast<int>(b.size()); }

  friend bool operator==(const MonicJacobi&, const MonicJacobi&) = default;
};

/// Monic generalized Jacobi matrix of the λ²-recurrence: stored as the same
/// coefficient chains, expanded on demand to the 2×2-block tridiagonal form
/// with blocks B_j = [[0,1],[b_j,0]], D_j = [[0,0],[1,0]], C_j = [[0,0],[c_j,0]].
struct GeneralizedJacobi {
  std::vector<Rational> b;
  std::vector<Rational> c;

  int block_count() const { return static_cast<int>(b.size()); }

  friend bool operator==(const GeneralizedJacobi&, const GeneralizedJacobi&) = default;
};

template <typename S>
class DenseMatrix {
public:
  explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, S(0)) {
    if (n < 0) throw LengthMismatch("matrix order must be nonnegative");
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }

  int order() const { return n_; }

  S& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const S& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<S>& entries() const { return a_; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_ != y.n_) throw LengthMismatch("matrix orders differ");
    DenseMatrix out(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        if (x.at(i, k) == S(0)) continue;
        for (int j = 0; j < x.n_; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return out;
  }

  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

private:
  int n_;
  std::vector<S> a_;
};

using RationalMatrix = DenseMatrix<Rational>;

/// Recurrence coefficients b_j = 𝔖(λP_j²)/𝔖(P_j²), c_{j-1} = 𝔖(P_j²)/𝔖(P_{j-1}²)
/// by the interleaved Gram–Schmidt recursion over the moment functional.
/// Needs s_0..s_{2n-1}; throws DegenerateMoments at the exhausted Hankel rank.
inline MonicJacobi jacobi_from_moments(const MomentSequence& s, int n) {
  if (n < 0) throw LengthMismatch("matrix order must be nonnegative");
  MonicJacobi J;
  if (n == 0) return J;
  if (static_cast<int>(s.size()) < 2 * n)
    throw InsufficientMoments("order " + std::to_string(n) + " needs " + std::to_string(2 * n) +
                              " moments, have " + std::to_string(s.size()));
  MomentFunctional S{s};
  const RationalPoly lambda = RationalPoly::variable();
  std::vector<RationalPoly> p{RationalPoly::one()};
  Rational prev_norm(1);
  Rational norm = S(p[0] * p[0]);
  J.b.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (norm.is_zero()) throw DegenerateMoments(j);
    J.b.push_back(S(lambda * p[j] * p[j]) / norm);
    RationalPoly next = (lambda - RationalPoly::constant(J.b.back())) * p[j];
    if (j > 0) next = next - RationalPoly::constant(norm / prev_norm) * p[j - 1];
    p.push_back(std::move(next));
    if (j + 1 < n) {
      Rational next_norm = S(p[j + 1] * p[j + 1]);
      if (next_norm.is_zero()) throw DegenerateMoments(j + 1);
      J.c.push_back(next_norm / norm);
      prev_norm = std::exchange(norm, std::move(next_norm));
    }
  }
  return J;
}

/// The block linearization carries the same coefficient chains.
inline GeneralizedJacobi generalized_from(const MonicJacobi& J) { return {J.b, J.c}; }

/// Leading principal N×N section of the scalar tridiagonal matrix.
inline RationalMatrix truncate(const MonicJacobi& J, int N) {
  if (N > J.order())
    throw DepthExceeded("truncation order " + std::to_string(N) + " exceeds matrix order " +
                        std::to_string(J.order()));
  RationalMatrix m(N);
  for (int i = 0; i < N; ++i) {
    m.at(i, i) = J.b[static_cast<std::size_t>(i)];
    if (i + 1 < N) {
      m.at(i, i + 1) = Rational(1);
      m.at(i + 1, i) = J.c[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

/// Leading principal N×N section of the block expansion; N must cover whole
/// 2×2 blocks.
inline RationalMatrix truncate(const GeneralizedJacobi& G, int N) {
  if (N % 2 != 0) throw OddGeneralizedTruncation("generalized truncation order must be even");
  const int blocks = N / 2;
  if (blocks > G.block_count())
    throw DepthExceeded("truncation needs " + std::to_string(blocks) + " blocks, have " +
                        std::to_string(G.block_count()));
  RationalMatrix m(N);
  for (int j = 0; j < blocks; ++j) {
    m.at(2 * j, 2 * j + 1) = Rational(1);                        // B_j upper
    m.at(2 * j + 1, 2 * j) = G.b[static_cast<std::size_t>(j)];   // B_j lower
    if (j + 1 < blocks) {
      m.at(2 * j + 1, 2 * j + 2) = Rational(1);                  // D_j
      m.at(2 * j + 3, 2 * j) = G.c[static_cast<std::size_t>(j)]; // C_j
    }
  }
  return m;
}

/// det(λI − m), exact, by fraction-free (Bareiss) elimination over the
/// polynomial ring. The pivots are characteristic polynomials of leading
/// sections, hence monic and nonzero, so no pivoting is ever needed and
/// every two-step division is exact.
template <typename S>
Polynomial<S> char_poly(const DenseMatrix<S>& m) {
  using P = Polynomial<S>;
  const int n = m.order();
  if (n == 0) return P::one();
  std::vector<std::vector<P>> a(static_cast<std::size_t>(n), std::vector<P>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = -P::constant(m.at(i, j));
      if (i == j) a[i][j] = a[i][j] + P::variable();
    }
  P prev = P::one();
  for (int k = 0; k + 1 < n; ++k) {
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return a[n - 1][n - 1];
}

/// Gram matrix of the indefinite inner product: block diagonal with 2×2 swap
/// blocks. Symmetric and involutive at every even order.
inline RationalMatrix gram(int N) {
  if (N % 2 != 0) throw OddGeneralizedTruncation("gram matrix order must be even");
  RationalMatrix g(N);
  for (int j = 0; 2 * j < N; ++j) {
    g.at(2 * j, 2 * j + 1) = Rational(1);
    g.at(2 * j + 1, 2 * j) = Rational(1);
  }
  return g;
}

/// [x, y] = (Gx, y), the exact bilinear form of the Krein-space surrogate.
inline Rational indefinite_inner(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw LengthMismatch("vectors of unequal length");
  if (x.size() % 2 != 0) throw LengthMismatch("vectors must have even length");
  Rational acc(0);
  for (std::size_t j = 0; 2 * j < x.size(); ++j)
    acc += x[2 * j + 1] * y[2 * j] + x[2 * j] * y[2 * j + 1];
  return acc;
}

/// Sign test (−1)^j P_j(0) > 0 for j ≤ n: the exact finite surrogate for
/// non-negativity of the generalized Jacobi matrix in ℓ²(G).
inline bool definitizable_check(const MomentSequence& s, int n) {
  MomentFunctional S{s};
  auto chain = detail::monic_chain(S, n, /*stop_at_rank=*/true);
  bool negate = false;
  for (const RationalPoly& p : chain) {
    Rational v = p(Rational(0));
    if ((negate ? -v : v).sign() <= 0) return false;
    negate = !negate;
  }
  return true;
}

}  // namespace darboux
