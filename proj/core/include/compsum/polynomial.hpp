#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "compsum/rational.hpp"

namespace compsum {

/// Dense univariate polynomial over Rational, trailing zeros trimmed.
/// The zero polynomial has the distinguished degree marker kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(Rational c);                          // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial variable() { return monomial(Rational(1), 1); }
  static Polynomial monomial(const Rational& c, int power);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of x^k; zero past the degree.
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  Polynomial substitute(const Polynomial& inner) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Ascending form "c0 + c1 x + c2 x^2" with rational-string coefficients;
  /// zero terms skipped, unit coefficients elided, "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[k] is the coefficient of x^k; empty = zero
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace compsum
