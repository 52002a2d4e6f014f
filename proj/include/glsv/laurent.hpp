#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glsv/rational.hpp"

namespace glsv {

// Sparse Laurent polynomial in u: finitely many terms c_i * u^i with i in Z.
// Invariant: no stored zero coefficients, so equality is structural.
class LaurentPoly {
public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) { add_term(0, c); }
  explicit LaurentPoly(long c) { add_term(0, Rational(c)); }

  static LaurentPoly monomial(const Rational& c, Exponent e);
  static LaurentPoly u() { return monomial(Rational(1), 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(Exponent e) const;
  Exponent min_exponent() const;  // throws std::domain_error on the zero polynomial
  Exponent max_exponent() const;

  void add_term(Exponent e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(Exponent e) const;  // multiply by u^e
  LaurentPoly pow(unsigned e) const;

  // Defined only for monomials c*u^i; throws std::domain_error otherwise.
  // That is the only inversion the series pipelines ever need.
  LaurentPoly inverse() const;

  // Evaluation at a rational point; x must be nonzero if negative exponents occur.
  Rational eval(const Rational& x) const;

  bool operator==(const LaurentPoly&) const = default;

  // "-2*u^-1 + 6 - 6*u + 2*u^2"
  std::string str() const;

private:
  TermMap terms_;
};

// u -> -u: each term c*u^i becomes (-1)^i c*u^i.
LaurentPoly substitute_neg_u(const LaurentPoly& a);

// Exponents i < 0, i even, with nonzero coefficient. Empty means the parity
// property holds for this polynomial.
std::vector<LaurentPoly::Exponent> negative_even_exponents(const LaurentPoly& a);

// Even/odd part under u -> -u.
LaurentPoly even_u_part(const LaurentPoly& a);
LaurentPoly odd_u_part(const LaurentPoly& a);

// Exact division by (1-u)^k of a polynomial part (min exponent >= 0 required).
// Returns false if any of the k division steps leaves a remainder.
bool divide_by_one_minus_u(const LaurentPoly& p, unsigned k, LaurentPoly* quotient);

// Laurent polynomial in an auxiliary variable X whose coefficients are Laurent
// polynomials in u. Element of the truncated model of R((X)).
class XLaurent {
public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, LaurentPoly>;

  XLaurent() = default;
  explicit XLaurent(const LaurentPoly& c) { add_term(0, c); }

  static XLaurent monomial(const LaurentPoly& c, Exponent e);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  LaurentPoly coeff(Exponent e) const;

  void add_term(Exponent e, const LaurentPoly& c);

  XLaurent operator-() const;
  XLaurent& operator+=(const XLaurent& o);
  XLaurent& operator-=(const XLaurent& o);
  friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
  friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
  friend XLaurent operator*(const XLaurent& a, const XLaurent& b);

  XLaurent scaled(const LaurentPoly& c) const;
  XLaurent inverse() const;  // monomial with monomial coefficient only

  // Drop every term with X-exponent >= lo or > hi outside [lo, hi].
  XLaurent window(Exponent lo, Exponent hi) const;

  bool operator==(const XLaurent&) const = default;

private:
  TermMap terms_;
};

// Sub-sum over X-exponents < 0; empty result certifies the R[[X]] membership
// the factorization lemma asserts.
XLaurent negative_x_part(const XLaurent& a);

}  // namespace glsv
