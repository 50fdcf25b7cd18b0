#include "compsum/rational.hpp"

#include <ostream>

#include "compsum/errors.hpp"

namespace compsum {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational::Rational(long num, long den) {
  if (den == 0) throw RangeError("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw RangeError("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const std::string s(text);
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw RangeError("Rational: cannot parse '" + s + "'");
  if (sgn(mpq_class(v.get_den())) == 0)
    throw RangeError("Rational: zero denominator in '" + s + "'");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw RangeError("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw RangeError("Rational: reciprocal of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r(1);
  Rational term = a;
  for (unsigned long i = 0; i < n; ++i) {
    r *= term;
    term += Rational(1);
  }
  return r;
}

}  // namespace compsum
