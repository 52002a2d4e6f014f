#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace glsv {

// Exact rational scalar, the base field of every ring in this project.
// Canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1. No floating
// point is used anywhere.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  Rational(mpz_class n, mpz_class d);
  explicit Rational(mpq_class v);

  // Accepts "p/q" or "p", optional leading '-'. Throws std::invalid_argument.
  static Rational from_string(std::string_view s);

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const;      // throws std::domain_error on zero
  Rational pow(long e) const;    // e < 0 requires a nonzero value
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Canonical text form: "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

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

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

// Generalized binomial coefficient binom(alpha, m) = alpha(alpha-1)...(alpha-m+1)/m!.
Rational rational_binomial(const Rational& alpha, unsigned long m);

mpz_class integer_factorial(unsigned long n);
mpz_class integer_binomial(unsigned long n, unsigned long k);
// Product n(n-2)(n-4)...; (-1)!! = 0!! = 1 by the usual empty-product convention.
mpz_class double_factorial(long n);

}  // namespace glsv
