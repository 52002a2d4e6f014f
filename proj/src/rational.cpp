#include "glsv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace glsv {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(std::move(n), std::move(d));
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpq_class(mpz_class(std::string(s)), 1));
    }
    mpz_class num{std::string(s.substr(0, slash))};
    mpz_class den{std::string(s.substr(slash + 1))};
    if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    return Rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e > 0 ? *this : inverse();
  mpq_class acc(1);
  for (long i = 0; i < (e > 0 ? e : -e); ++i) acc *= base.v_;
  return Rational(std::move(acc));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_binomial(const Rational& alpha, unsigned long m) {
  Rational acc(1);
  for (unsigned long a = 0; a < m; ++a) {
    acc *= (alpha - Rational(static_cast<long>(a))) / Rational(static_cast<long>(a) + 1);
  }
  return acc;
}

mpz_class integer_factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class integer_binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class double_factorial(long n) {
  if (n <= 0) return 1;
  mpz_class r(1);
  for (long v = n; v > 1; v -= 2) r *= v;
  return r;
}

}  // namespace glsv
