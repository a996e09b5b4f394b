#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

/// Exact rational scalar. Stored in lowest terms with a positive denominator;
/// equality is value equality. Serializes as "p/q", or just "p" when q == 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) {
    if (d == 0) throw ParseFailure("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(mpz_class n, mpz_class d) {
    if (d == 0) throw ParseFailure("zero denominator");
    v_ = mpq_class(std::move(n), std::move(d));
    v_.canonicalize();
  }

  static Rational parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw ParseFailure("empty rational");
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        mpz_class n(s);
        return Rational(std::move(n), mpz_class(1));
      }
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den <= 0) throw ParseFailure("denominator must be positive in \"" + s + "\"");
      return Rational(std::move(num), std::move(den));
    } catch (const std::invalid_argument&) {
      throw ParseFailure("not a rational: \"" + s + "\"");
    }
  }

  std::string str() const { return v_.get_str(); }

  const mpz_class num() const { return v_.get_num(); }
  const mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseFailure("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact square root when it exists in the rationals, nullopt otherwise.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(std::move(rn), std::move(rd));
}

/// Exact complex rational: the scalar type of the imaginary-shift
/// constructions. The real pipeline never touches it.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(int n) : re(n) {}
  ComplexRational(long n) : re(n) {}
  ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ComplexRational operator-() const { return {-re, -im}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n.is_zero()) throw ParseFailure("division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

  // "a+bi" display form; pure-imaginary values print as "bi".
  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string i = im.str() + "i";
    if (im.is_one()) i = "i";
    if (im == Rational(-1)) i = "-i";
    if (re.is_zero()) return i;
    return re.str() + (im.sign() > 0 ? "+" : "") + i;
  }

  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    return os << z.str();
  }
};

inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

/// ±i·alpha as a ComplexRational.
inline ComplexRational imaginary(Rational alpha) { return {Rational(0), std::move(alpha)}; }

}  // namespace darboux
