#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "compsum/errors.hpp"
#include "compsum/polynomial.hpp"
#include "compsum/rational.hpp"

namespace compsum {

/// Bridge used by Series to stay generic over its coefficient ring.
/// Both supported rings are Q-algebras, so scaling by a Rational is exact.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static bool is_unit(const Rational& r) { return !r.is_zero(); }
  static Rational invert(const Rational& r) { return r.reciprocal(); }
  static Rational scale(const Rational& r, const Rational& q) { return r * q; }
  static std::string str(const Rational& r) { return r.str(); }
};

template <>
struct RingTraits<Polynomial> {
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static bool is_zero(const Polynomial& p) { return p.is_zero(); }
  // Units are the nonzero constants; x-divisible constant terms are rejected.
  static bool is_unit(const Polynomial& p) { return p.degree() == 0; }
  static Polynomial invert(const Polynomial& p) { return Polynomial(p.coeff(0).reciprocal()); }
  static Polynomial scale(const Polynomial& p, const Rational& q) { return p * q; }
  static std::string str(const Polynomial& p) { return p.str(); }
};

/// Truncated formal power series: the coefficients of z^0..z^order are
/// retained and every operation is exact modulo z^(order+1). Mixed-order
/// binary operations truncate to the smaller order. Instances are immutable
/// after construction.
template <typename R>
class Series {
  using T = RingTraits<R>;

 public:
  explicit Series(int order) : coeffs_(checked_size(order), T::zero()) {}

  explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw RangeError("Series: a series has at least the z^0 coefficient");
  }

  Series(int order, const std::function<R(int)>& coefficient)
      : coeffs_(checked_size(order)) {
    for (int k = 0; k <= order; ++k) coeffs_[static_cast<size_t>(k)] = coefficient(k);
  }

  static Series constant(const R& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const R& operator[](int k) const {
    if (k < 0 || k > order()) throw RangeError("Series: coefficient index out of range");
    return coeffs_[static_cast<size_t>(k)];
  }

  const std::vector<R>& coeffs() const { return coeffs_; }

  Series truncated(int new_order) const {
    if (new_order >= order()) return *this;
    return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  friend Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series out(n);
    for (int k = 0; k <= n; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series out(n);
    for (int k = 0; k <= n; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
  }

  Series operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = T::zero() - c;
    return out;
  }

  /// Cauchy product truncated at the smaller order.
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series out(n);
    for (int i = 0; i <= n; ++i) {
      if (T::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

 private:
  static size_t checked_size(int order) {
    if (order < 0) throw RangeError("Series: negative truncation order");
    return static_cast<size_t>(order) + 1;
  }

  std::vector<R> coeffs_;
};

using SeriesQ = Series<Rational>;
using SeriesP = Series<Polynomial>;

/// b with a * b = 1 mod z^(order+1); the constant term must be a unit.
template <typename R>
Series<R> reciprocal(const Series<R>& a) {
  using T = RingTraits<R>;
  if (!T::is_unit(a[0]))
    throw NonUnitConstantTerm("reciprocal: constant term is not invertible");
  const int n = a.order();
  std::vector<R> b(static_cast<size_t>(n) + 1, T::zero());
  b[0] = T::invert(a[0]);
  for (int k = 1; k <= n; ++k) {
    R acc = T::zero();
    for (int j = 1; j <= k; ++j) acc += a[j] * b[static_cast<size_t>(k - j)];
    b[static_cast<size_t>(k)] = T::zero() - b[0] * acc;
  }
  return Series<R>(std::move(b));
}

/// Coefficients of f(g(z)) mod z^(order+1), Horner-style; g(0) must vanish.
template <typename R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
  using T = RingTraits<R>;
  if (!T::is_zero(g[0]))
    throw CompositionAtNonzeroPoint("compose: inner series has nonzero constant term");
  const int n = std::min(f.order(), g.order());
  const Series<R> gt = g.truncated(n);
  Series<R> acc = Series<R>::constant(f[n], n);
  for (int k = n - 1; k >= 0; --k) acc = acc * gt + Series<R>::constant(f[k], n);
  return acc;
}

/// Termwise derivative; drops the truncation order by one (a constant-only
/// series differentiates to the zero series of order 0).
template <typename R>
Series<R> derivative(const Series<R>& a) {
  using T = RingTraits<R>;
  const int n = std::max(a.order() - 1, 0);
  Series<R> out(n);
  std::vector<R> c(static_cast<size_t>(n) + 1, T::zero());
  for (int k = 1; k <= a.order(); ++k)
    if (k - 1 <= n) c[static_cast<size_t>(k - 1)] = T::scale(a[k], Rational(k));
  return Series<R>(std::move(c));
}

/// Formal exponential; requires a(0) = 0. Uses b' = a' b.
template <typename R>
Series<R> exp(const Series<R>& a) {
  using T = RingTraits<R>;
  if (!T::is_zero(a[0])) throw ConstantTermError("exp: constant term must be zero");
  const int n = a.order();
  std::vector<R> b(static_cast<size_t>(n) + 1, T::zero());
  b[0] = T::one();
  for (int k = 1; k <= n; ++k) {
    R acc = T::zero();
    for (int j = 1; j <= k; ++j) acc += T::scale(a[j], Rational(j)) * b[static_cast<size_t>(k - j)];
    b[static_cast<size_t>(k)] = T::scale(acc, Rational(1, k));
  }
  return Series<R>(std::move(b));
}

/// Formal logarithm; requires a(0) = 1. Inverse of exp on its domain.
template <typename R>
Series<R> log(const Series<R>& a) {
  using T = RingTraits<R>;
  if (!(T::is_zero(a[0] - T::one()))) throw ConstantTermError("log: constant term must be one");
  const int n = a.order();
  std::vector<R> l(static_cast<size_t>(n) + 1, T::zero());
  for (int k = 1; k <= n; ++k) {
    R acc = T::zero();
    for (int j = 1; j < k; ++j) acc += T::scale(l[static_cast<size_t>(j)], Rational(j)) * a[k - j];
    l[static_cast<size_t>(k)] = a[k] - T::scale(acc, Rational(1, k));
  }
  return Series<R>(std::move(l));
}

/// Integer power by repeated squaring; negative exponents go through
/// reciprocal and therefore need a unit constant term.
template <typename R>
Series<R> pow(const Series<R>& a, long exponent) {
  using T = RingTraits<R>;
  if (exponent < 0) return pow(reciprocal(a), -exponent);
  Series<R> result = Series<R>::constant(T::one(), a.order());
  Series<R> base = a;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1ul) result = result * base;
    base = base * base;
    e >>= 1ul;
  }
  return result;
}

/// JSON array of coefficient strings, index = degree.
template <typename R>
std::string to_json(const Series<R>& a) {
  std::string out = "[";
  for (int k = 0; k <= a.order(); ++k) {
    if (k) out += ",";
    out += "\"" + RingTraits<R>::str(a[k]) + "\"";
  }
  out += "]";
  return out;
}

/// Lifts rational coefficients to constant polynomials.
SeriesP to_polynomial_series(const SeriesQ& a);

// Named constructors. All are exact; the square root in the Catalan
// generating function is realized by an integer recurrence, so no
// non-rational intermediate ever appears.
SeriesQ identity_series(int order);                      // z
SeriesQ geometric_series(int order);                     // z/(1-z)
SeriesQ exp_minus_one_series(int order);                 // e^z - 1
SeriesQ expm1_over_z_series(int order);                  // (e^z - 1)/z
SeriesQ z_over_expm1_series(int order);                  // z/(e^z - 1)
SeriesQ log1p_series(int order);                         // log(1+z)
SeriesQ catalan_shifted_series(int order);               // (1 - sqrt(1-4z))/2
SeriesQ negative_binomial_series(int order, int q);      // (1-z)^(-q) - 1
SeriesP exp_zx_series(int order);                        // e^{zx}

}  // namespace compsum
