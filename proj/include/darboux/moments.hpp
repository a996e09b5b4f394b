#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Finite prefix s_0..s_m of a real moment sequence, exact.
using MomentSequence = std::vector<Rational>;

struct Atom {
  Rational point;
  Rational weight;
};

/// Finitely supported positive measure, Σ w_i δ_{t_i}.
struct DiscreteMeasure {
  std::vector<Atom> atoms;
};

/// Normalized Laguerre weight t^alpha e^{-t} / Γ(alpha+1) on [0,∞);
/// its moments are the rising factorials (alpha+1)_j.
struct LaguerreMeasure {
  Rational alpha;
};

/// A measure known only through a finite moment prefix.
struct RawMoments {
  MomentSequence values;
};

using MeasureSpec = std::variant<DiscreteMeasure, LaguerreMeasure, RawMoments>;

namespace detail {

inline void validate(const DiscreteMeasure& m) {
  if (m.atoms.empty()) throw UnsupportedSpec("discrete measure needs at least one atom");
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (m.atoms[i].weight.sign() <= 0) throw UnsupportedSpec("atom weights must be positive");
    for (std::size_t j = i + 1; j < m.atoms.size(); ++j)
      if (m.atoms[i].point == m.atoms[j].point)
        throw UnsupportedSpec("atom points must be pairwise distinct");
  }
}

inline void validate(const LaguerreMeasure& m) {
  if (m.alpha <= Rational(-1)) throw UnsupportedSpec("laguerre alpha must exceed -1");
}

inline void validate(const RawMoments& m) {
  if (m.values.empty()) throw UnsupportedSpec("moment sequence must be nonempty");
  if (m.values.front().sign() <= 0) throw UnsupportedSpec("total mass s_0 must be positive");
}

}  // namespace detail

/// Exact moments s_0..s_{count-1} of the given measure.
inline MomentSequence measure_moments(const MeasureSpec& spec, int count) {
  if (count < 1) throw InsufficientMoments("requested moment count must be >= 1");
  MomentSequence s;
  s.reserve(static_cast<std::size_t>(count));
  if (const auto* d = std::get_if<DiscreteMeasure>(&spec)) {
    detail::validate(*d);
    std::vector<Rational> powers(d->atoms.size(), Rational(1));
    for (int j = 0; j < count; ++j) {
      Rational sum(0);
      for (std::size_t i = 0; i < d->atoms.size(); ++i) {
        sum += d->atoms[i].weight * powers[i];
        powers[i] *= d->atoms[i].point;
      }
      s.push_back(std::move(sum));
    }
    return s;
  }
  if (const auto* lag = std::get_if<LaguerreMeasure>(&spec)) {
    detail::validate(*lag);
    Rational acc(1);
    for (int j = 0; j < count; ++j) {
      s.push_back(acc);
      acc *= lag->alpha + Rational(j + 1);
    }
    return s;
  }
  const auto& raw = std::get<RawMoments>(spec);
  detail::validate(raw);
  if (static_cast<std::size_t>(count) > raw.values.size())
    throw InsufficientMoments("raw sequence holds " + std::to_string(raw.values.size()) +
                              " moments, " + std::to_string(count) + " requested");
  s.assign(raw.values.begin(), raw.values.begin() + count);
  return s;
}

/// The linear functional 𝔖 determined by a moment assignment, optionally
/// precomposed with multiplication by a fixed polynomial (λ or λ−α in the
/// shifted variants): apply(p) = Σ_k coeff_k(mult·p)·s_k.
class MomentFunctional {
public:
  explicit MomentFunctional(MomentSequence moments,
                            RationalPoly multiplier = RationalPoly::one())
      : moments_(std::move(moments)), multiplier_(std::move(multiplier)) {}

  static MomentFunctional shifted(MomentSequence moments) {
    return MomentFunctional(std::move(moments), RationalPoly::variable());
  }

  static MomentFunctional shifted(MomentSequence moments, const Rational& alpha) {
    return MomentFunctional(std::move(moments),
                            RationalPoly{-alpha, Rational(1)});
  }

  /// Largest polynomial degree this functional can absorb.
  int max_degree() const {
    return static_cast<int>(moments_.size()) - 1 - std::max(multiplier_.degree(), 0);
  }

  Rational operator()(const RationalPoly& p) const {
    RationalPoly q = multiplier_ * p;
    if (q.degree() >= static_cast<int>(moments_.size()))
      throw InsufficientMoments("degree " + std::to_string(q.degree()) + " needs " +
                                std::to_string(q.degree() + 1) + " moments, have " +
                                std::to_string(moments_.size()));
    Rational acc(0);
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) acc += q.coeffs()[k] * moments_[k];
    return acc;
  }

  const MomentSequence& moments() const { return moments_; }

private:
  MomentSequence moments_;
  RationalPoly multiplier_;
};

namespace detail {

/// Exact determinant by Gaussian elimination with partial pivoting over ℚ.
inline Rational dense_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace detail

/// Hankel determinant D_j = det(s_{i+k})_{i,k=0..j}; D_{-1} = 1 by convention.
inline Rational hankel_det(const MomentSequence& s, int j) {
  if (j == -1) return Rational(1);
  if (j < -1) throw InsufficientMoments("hankel order must be >= -1");
  if (static_cast<std::size_t>(2 * j + 1) > s.size())
    throw InsufficientMoments("order " + std::to_string(j) + " needs " +
                              std::to_string(2 * j + 1) + " moments, have " +
                              std::to_string(s.size()));
  const std::size_t n = static_cast<std::size_t>(j) + 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = s[r + c];
  return detail::dense_det(std::move(m));
}

struct MomentClassification {
  enum class Kind { stieltjes, positive_definite, degenerate };
  Kind kind;
  /// degenerate: first Hankel order failing positivity. Otherwise the finite
  /// Hankel rank detected inside the data window, or -1 when no rank cap is
  /// visible.
  int order;

  friend bool operator==(const MomentClassification&, const MomentClassification&) = default;
};

namespace detail {

/// Monic orthogonal polynomial chain by Gram–Schmidt recurrence over the
/// moment functional. Stops early (without error) at rank exhaustion when
/// stop_at_rank is set; otherwise throws DegenerateMoments.
inline std::vector<RationalPoly> monic_chain(const MomentFunctional& S, int count,
                                             bool stop_at_rank) {
  std::vector<RationalPoly> polys;
  polys.push_back(RationalPoly::one());
  if (count <= 0) return polys;
  const RationalPoly lambda = RationalPoly::variable();
  Rational prev_norm(1);
  Rational norm = S(polys[0] * polys[0]);
  for (int j = 0; j < count; ++j) {
    if (norm.is_zero()) {
      if (stop_at_rank) return polys;
      throw DegenerateMoments(j);
    }
    Rational b = S(lambda * polys[j] * polys[j]) / norm;
    RationalPoly next = (lambda - RationalPoly::constant(b)) * polys[j];
    if (j > 0) next = next - RationalPoly::constant(norm / prev_norm) * polys[j - 1];
    polys.push_back(std::move(next));
    if (j + 1 < count) {
      prev_norm = norm;
      norm = S(polys[j + 1] * polys[j + 1]);
    }
  }
  return polys;
}

/// True when the data window is consistent with Hankel rank exactly r: all
/// prior determinants positive (checked by caller), and the remaining moments
/// obey the linear recurrence annihilated by the rank-r orthogonal polynomial.
inline bool rank_consistent(const MomentSequence& s, int r) {
  const int m = static_cast<int>(s.size()) - 1;
  if (r == 0) {
    return std::all_of(s.begin(), s.end(), [](const Rational& x) { return x.is_zero(); });
  }
  MomentFunctional S{s};
  std::vector<RationalPoly> chain = monic_chain(S, r, /*stop_at_rank=*/false);
  const RationalPoly& p = chain.back();
  for (int k = 0; k + r <= m; ++k) {
    Rational acc(0);
    for (int i = 0; i <= r; ++i) acc += p.coeff(static_cast<std::size_t>(i)) * s[k + i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

struct FamilyScan {
  bool positive;  // consistent with a positive (semi)definite sequence
  int fail_at;    // first failing order when !positive
  int rank;       // detected finite rank, or -1
};

inline FamilyScan scan_family(const MomentSequence& s) {
  const int m = static_cast<int>(s.size()) - 1;
  for (int j = 0; 2 * j <= m; ++j) {
    Rational d = hankel_det(s, j);
    if (d.sign() > 0) continue;
    if (d.sign() < 0) return {false, j, -1};
    if (rank_consistent(s, j)) return {true, -1, j};
    return {false, j, -1};
  }
  return {true, -1, -1};
}

}  // namespace detail

/// Classifies a moment prefix by Hankel positivity. Zero determinants whose
/// tail is consistent with a finite-rank (finitely supported) measure count
/// as positive; Stieltjes additionally requires the shifted family
/// det(s_{1+i+k}) to pass the same test.
inline MomentClassification classify(const MomentSequence& s) {
  using Kind = MomentClassification::Kind;
  if (s.empty()) throw InsufficientMoments("empty moment sequence");
  detail::FamilyScan plain = detail::scan_family(s);
  if (!plain.positive) return {Kind::degenerate, plain.fail_at};
  MomentSequence shifted(s.begin() + 1, s.end());
  if (shifted.empty()) return {Kind::stieltjes, plain.rank};
  detail::FamilyScan sh = detail::scan_family(shifted);
  return {sh.positive ? Kind::stieltjes : Kind::positive_definite, plain.rank};
}

/// Largest order n for which the data supports a monic Jacobi matrix:
/// bounded by the moment count (need s_0..s_{2n-1}) and by the first zero
/// Gram norm (Hankel rank exhaustion).
inline int usable_order(const MomentSequence& s) {
  if (s.empty()) throw InsufficientMoments("empty moment sequence");
  const int n = static_cast<int>(s.size()) / 2;
  MomentFunctional S{s};
  auto chain = detail::monic_chain(S, n, /*stop_at_rank=*/true);
  return static_cast<int>(chain.size()) - 1;
}

/// Moment sequence 𝔰 of the definitizable function S(λ²):
/// 𝔰_{2j} = 0 and 𝔰_{2j+1} = s_j. Output has twice the input length.
inline MomentSequence unwrap_moments(const MomentSequence& s) {
  MomentSequence out(2 * s.size(), Rational(0));
  for (std::size_t j = 0; j < s.size(); ++j) out[2 * j + 1] = s[j];
  return out;
}

/// Drops s_0: the moments of the shifted functional f ↦ 𝔖(λ f).
inline MomentSequence shifted_moments(const MomentSequence& s) {
  if (s.empty()) throw InsufficientMoments("cannot shift an empty sequence");
  return MomentSequence(s.begin() + 1, s.end());
}

/// Symmetrizes a measure on (0,∞): each atom (t, w) splits into half-weight
/// atoms at ±√t. Only defined when every √t is rational.
inline DiscreteMeasure unwrap_measure(const DiscreteMeasure& spec) {
  detail::validate(spec);
  DiscreteMeasure out;
  out.atoms.reserve(2 * spec.atoms.size());
  const Rational half(1, 2);
  for (const Atom& a : spec.atoms) {
    if (a.point.sign() <= 0)
      throw NonpositiveSupport("atom at " + a.point.str() + " not in (0,inf)");
    std::optional<Rational> root = rational_sqrt(a.point);
    if (!root) throw IrrationalSupport("sqrt(" + a.point.str() + ") is irrational");
    out.atoms.push_back({*root, a.weight * half});
    out.atoms.push_back({-*root, a.weight * half});
  }
  return out;
}

/// The measure of (λ−α)S(λ²): atom (t, w) contributes weight w·(x−α)/(2x)
/// at each x = ±√t. Requires α² below the support so all weights stay
/// positive; α = 0 reduces to unwrap_measure.
inline DiscreteMeasure chihara_measure(const DiscreteMeasure& spec, const Rational& alpha) {
  detail::validate(spec);
  const Rational alpha2 = alpha * alpha;
  for (const Atom& a : spec.atoms) {
    if (a.point.sign() <= 0)
      throw NonpositiveSupport("atom at " + a.point.str() + " not in (0,inf)");
    if (alpha2 >= a.point)
      throw InvalidShift("alpha^2 = " + alpha2.str() + " is not below the support");
  }
  DiscreteMeasure out;
  out.atoms.reserve(2 * spec.atoms.size());
  for (const Atom& a : spec.atoms) {
    std::optional<Rational> root = rational_sqrt(a.point);
    if (!root) throw IrrationalSupport("sqrt(" + a.point.str() + ") is irrational");
    const Rational two_x = Rational(2) * *root;
    out.atoms.push_back({*root, a.weight * (*root - alpha) / two_x});
    out.atoms.push_back({-*root, a.weight * (*root + alpha) / two_x});
  }
  return out;
}

}  // namespace darboux
