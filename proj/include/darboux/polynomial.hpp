#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Dense exact polynomial in one variable; coeffs_[k] is the coefficient of
/// λ^k. Invariant: no trailing zero coefficient, so degree() == size − 1 and
/// the zero polynomial has an empty coefficient vector (degree −1).
template <typename S>
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<S> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(S c) { return Polynomial(std::vector<S>{std::move(c)}); }
  static Polynomial one() { return constant(S(1)); }
  static Polynomial variable() { return Polynomial(std::vector<S>{S(0), S(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == S(1); }

  const std::vector<S>& coeffs() const { return coeffs_; }

  /// Coefficient of λ^k; zero beyond the stored degree.
  S coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S(0); }

  const S& leading() const { return coeffs_.back(); }

  /// Exact Horner evaluation.
  S operator()(const S& x) const {
    S acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Polynomial operator-() const {
    std::vector<S> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<S> out(std::max(p.coeffs_.size(), q.coeffs_.size()), S(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<S> out(p.coeffs_.size() + q.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
        out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const S& c, const Polynomial& p) {
    std::vector<S> out(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (i) os << ", ";
      os << p.coeffs_[i];
    }
    return os << ']';
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

/// Exact quotient p / d. Throws NonzeroRemainder unless d divides p in the
/// polynomial ring; a violation here normally signals a broken invariant
/// upstream (the pipeline only divides where divisibility is guaranteed).
template <typename S>
Polynomial<S> div_exact(const Polynomial<S>& p, const Polynomial<S>& d) {
  if (d.is_zero()) throw NonzeroRemainder("division by the zero polynomial");
  if (p.is_zero()) return Polynomial<S>();
  if (p.degree() < d.degree()) throw NonzeroRemainder("degree of divisor exceeds dividend");

  std::vector<S> rem = p.coeffs();
  std::vector<S> quot(static_cast<std::size_t>(p.degree() - d.degree()) + 1, S(0));
  const auto& dc = d.coeffs();
  for (std::size_t k = quot.size(); k-- > 0;) {
    S q = rem[k + dc.size() - 1] / dc.back();
    quot[k] = q;
    if (q == S(0)) continue;
    for (std::size_t i = 0; i < dc.size(); ++i) rem[k + i] -= q * dc[i];
  }
  for (const S& r : rem)
    if (!(r == S(0))) throw NonzeroRemainder("remainder is nonzero");
  return Polynomial<S>(std::move(quot));
}

/// p(λ) ↦ p(λ²): even coefficients carry p, odd coefficients are zero.
template <typename S>
Polynomial<S> compose_square(const Polynomial<S>& p) {
  if (p.is_zero()) return Polynomial<S>();
  std::vector<S> out(2 * p.coeffs().size() - 1, S(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[2 * i] = p.coeffs()[i];
  return Polynomial<S>(std::move(out));
}

/// Real polynomial reinterpreted over the complex rationals.
inline Polynomial<ComplexRational> complexify(const Polynomial<Rational>& p) {
  std::vector<ComplexRational> out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) out.emplace_back(c);
  return Polynomial<ComplexRational>(std::move(out));
}

using RationalPoly = Polynomial<Rational>;
using ComplexPoly = Polynomial<ComplexRational>;

}  // namespace darboux
