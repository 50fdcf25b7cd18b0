#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace compsum {

/// Arbitrary-precision signed integer, used wherever counts or table entries
/// can outgrow machine words (restricted-composition counts, Stirling rows).
using Integer = mpz_class;

Integer factorial(unsigned long n);

/// binomial(n, k) with the convention 0 for k > n.
Integer binomial(unsigned long n, unsigned long k);

/// Exact fraction over Integer, kept in lowest terms with positive
/// denominator; zero is 0/1. Equal values always have identical
/// representations, so operator== is value equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p"; normalizes. Throws RangeError on malformed input
  /// or zero denominator.
  static Rational from_string(std::string_view text);

  const Integer numerator() const { return v_.get_num(); }
  const Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Canonical form: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  Rational reciprocal() const;

 private:
  mpq_class v_;  // invariant: canonical (lowest terms, positive denominator)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned long n);

}  // namespace compsum
