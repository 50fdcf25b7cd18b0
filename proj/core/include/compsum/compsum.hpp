#pragma once

#include <functional>
#include <string>
#include <vector>

#include "compsum/compositions.hpp"
#include "compsum/errors.hpp"
#include "compsum/pitree.hpp"
#include "compsum/series.hpp"

namespace compsum {

/// Brute-force paths enumerate all 2^(n-1) compositions per n, so they stop
/// well before the lazy enumeration guard does.
inline constexpr int kMaxBruteN = 14;

/// Weights f_0, f_1, f_2, ... applied by part count in weighted sums.
template <typename R = Rational>
struct WeightSequence {
  std::string name;
  R f0;
  std::function<R(int)> gen;

  Series<R> series(int order) const {
    return Series<R>(order, [this](int k) { return k == 0 ? f0 : gen(k); });
  }
};

/// g as a series with zero constant term.
template <typename R>
Series<R> input_series(const InputSequence<R>& g, int order) {
  return Series<R>(order, [&g](int k) { return k == 0 ? RingTraits<R>::zero() : g.gen(k); });
}

namespace detail {

template <typename R>
R scaled(const R& value, const Integer& factor) {
  return RingTraits<R>::scale(value, Rational(factor));
}

inline void check_brute(int max_n, const char* who) {
  if (max_n > kMaxBruteN) throw SizeGuardError(std::string(who) + ": n above brute-force guard", kMaxBruteN);
}

}  // namespace detail

/// x_n = sum over all compositions of n of g_pi, computed through the
/// generating function x = g/(1-g). Entry [0] is 0 (the sum is empty there;
/// the tree row convention x_0 = 1 belongs to row_sums).
template <typename R>
std::vector<R> comp_sum(const InputSequence<R>& g, int max_n) {
  if (max_n < 0) throw RangeError("comp_sum: negative n");
  Series<R> gs = input_series(g, max_n);
  Series<R> one = Series<R>::constant(RingTraits<R>::one(), max_n);
  return (gs * reciprocal(one - gs)).coeffs();
}

/// Same values by direct enumeration of every composition.
template <typename R>
std::vector<R> comp_sum_brute(const InputSequence<R>& g, int max_n) {
  if (max_n < 0) throw RangeError("comp_sum_brute: negative n");
  detail::check_brute(max_n, "comp_sum_brute");
  std::vector<R> x(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  for (int n = 1; n <= max_n; ++n)
    for (const auto& c : enumerate(n)) {
      R term = RingTraits<R>::one();
      for (int k : c.parts()) term = term * g.gen(k);
      x[n] = x[n] + term;
    }
  return x;
}

/// x_n as the weighted sum over complete convolutions
/// x_n = sum_p binom(n+1, p+1) [z^n] (g_0 + g(z))^p.
/// The rewrite is an identity only for g_0 = -1.
template <typename R>
std::vector<R> comp_sum_convolution(const InputSequence<R>& g, int max_n, const R& g0) {
  if (max_n < 0) throw RangeError("comp_sum_convolution: negative n");
  std::vector<R> x(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  Series<R> G(max_n, [&](int k) { return k == 0 ? g0 : g.gen(k); });
  Series<R> Gp = Series<R>::constant(RingTraits<R>::one(), max_n);
  for (int p = 1; p <= max_n; ++p) {
    Gp = Gp * G;
    for (int n = p; n <= max_n; ++n)
      x[n] = x[n] + detail::scaled(Gp[n], binomial(static_cast<unsigned long>(n) + 1,
                                                   static_cast<unsigned long>(p) + 1));
  }
  return x;
}

inline std::vector<Rational> comp_sum_convolution(const InputSequence<Rational>& g, int max_n) {
  return comp_sum_convolution(g, max_n, Rational(-1));
}

/// Recovers the input from the sums: g_n = sum over compositions of
/// (-1)^(|pi|+1) x_pi, through the generating function g = x/(1+x).
template <typename R>
std::vector<R> comp_sum_inverse(const InputSequence<R>& x, int max_n) {
  if (max_n < 0) throw RangeError("comp_sum_inverse: negative n");
  Series<R> xs = input_series(x, max_n);
  Series<R> one = Series<R>::constant(RingTraits<R>::one(), max_n);
  return (xs * reciprocal(one + xs)).coeffs();
}

template <typename R>
std::vector<R> comp_sum_inverse_brute(const InputSequence<R>& x, int max_n) {
  if (max_n < 0) throw RangeError("comp_sum_inverse_brute: negative n");
  detail::check_brute(max_n, "comp_sum_inverse_brute");
  std::vector<R> g(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  for (int n = 1; n <= max_n; ++n)
    for (const auto& c : enumerate(n)) {
      R term = RingTraits<R>::one();
      for (int k : c.parts()) term = term * x.gen(k);
      if (c.length() % 2 == 0) g[n] = g[n] - term;
      else g[n] = g[n] + term;
    }
  return g;
}

/// g_n = sum_p (-1)^(p+1) binom(n+1, p+1) [z^n] (x_0 + x(z))^p; an identity
/// for x_0 = 1, mirroring comp_sum_convolution under the exchange
/// (g, x) -> (-x, -g).
template <typename R>
std::vector<R> comp_sum_inverse_convolution(const InputSequence<R>& x, int max_n, const R& x0) {
  if (max_n < 0) throw RangeError("comp_sum_inverse_convolution: negative n");
  std::vector<R> g(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  Series<R> X(max_n, [&](int k) { return k == 0 ? x0 : x.gen(k); });
  Series<R> Xp = Series<R>::constant(RingTraits<R>::one(), max_n);
  for (int p = 1; p <= max_n; ++p) {
    Xp = Xp * X;
    for (int n = p; n <= max_n; ++n) {
      R term = detail::scaled(Xp[n], binomial(static_cast<unsigned long>(n) + 1,
                                              static_cast<unsigned long>(p) + 1));
      if (p % 2 == 0) g[n] = g[n] - term;
      else g[n] = g[n] + term;
    }
  }
  return g;
}

inline std::vector<Rational> comp_sum_inverse_convolution(const InputSequence<Rational>& x, int max_n) {
  return comp_sum_inverse_convolution(x, max_n, Rational(1));
}

/// a_n = sum over compositions of f_|pi| g_pi, via the composition f(g(z)).
/// Entry [0] is f_0.
template <typename R>
std::vector<R> weighted_comp_sum(const WeightSequence<R>& f, const InputSequence<R>& g, int max_n) {
  if (max_n < 0) throw RangeError("weighted_comp_sum: negative n");
  return compose(f.series(max_n), input_series(g, max_n)).coeffs();
}

template <typename R>
std::vector<R> weighted_comp_sum_brute(const WeightSequence<R>& f, const InputSequence<R>& g,
                                       int max_n) {
  if (max_n < 0) throw RangeError("weighted_comp_sum_brute: negative n");
  detail::check_brute(max_n, "weighted_comp_sum_brute");
  std::vector<R> a(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  a[0] = f.f0;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& c : enumerate(n)) {
      R term = f.gen(c.length());
      for (int k : c.parts()) term = term * g.gen(k);
      a[n] = a[n] + term;
    }
  return a;
}

/// The same weighted sums through complete convolutions:
/// a_n = sum_p (sum_{m=p}^n f_m binom(m, p)) [z^n] (g_0 + g(z))^p,
/// an identity for g_0 = -1. Entry [0] is f_0.
template <typename R>
std::vector<R> weighted_convolution(const WeightSequence<R>& f, const InputSequence<R>& g,
                                    int max_n, const R& g0) {
  if (max_n < 0) throw RangeError("weighted_convolution: negative n");
  std::vector<R> a(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  a[0] = f.f0;
  std::vector<R> fv(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  for (int m = 1; m <= max_n; ++m) fv[m] = f.gen(m);

  Series<R> G(max_n, [&](int k) { return k == 0 ? g0 : g.gen(k); });
  Series<R> Gp = Series<R>::constant(RingTraits<R>::one(), max_n);
  for (int p = 1; p <= max_n; ++p) {
    Gp = Gp * G;
    for (int n = p; n <= max_n; ++n) {
      R weight = RingTraits<R>::zero();
      for (int m = p; m <= n; ++m)
        weight = weight + detail::scaled(fv[m], binomial(static_cast<unsigned long>(m),
                                                         static_cast<unsigned long>(p)));
      a[n] = a[n] + weight * Gp[n];
    }
  }
  return a;
}

inline std::vector<Rational> weighted_convolution(const WeightSequence<Rational>& f,
                                                  const InputSequence<Rational>& g, int max_n) {
  return weighted_convolution(f, g, max_n, Rational(-1));
}

/// Sums over all parts of all compositions,
/// b_n = sum_pi f_|pi| sum_{k in pi} g_k, via the generating function
/// f'(z/(1-z)) g(z). Entry [0] is 0.
template <typename R>
std::vector<R> parts_sum(const WeightSequence<R>& f, const InputSequence<R>& g, int max_n) {
  if (max_n < 0) throw RangeError("parts_sum: negative n");
  Series<R> fprime = derivative(f.series(max_n + 1));
  Series<R> geo(max_n, [](int k) { return k == 0 ? RingTraits<R>::zero() : RingTraits<R>::one(); });
  return (compose(fprime, geo) * input_series(g, max_n)).coeffs();
}

template <typename R>
std::vector<R> parts_sum_brute(const WeightSequence<R>& f, const InputSequence<R>& g, int max_n) {
  if (max_n < 0) throw RangeError("parts_sum_brute: negative n");
  detail::check_brute(max_n, "parts_sum_brute");
  std::vector<R> b(static_cast<std::size_t>(max_n) + 1, RingTraits<R>::zero());
  for (int n = 1; n <= max_n; ++n)
    for (const auto& c : enumerate(n)) {
      R parts = RingTraits<R>::zero();
      for (int k : c.parts()) parts = parts + g.gen(k);
      b[n] = b[n] + f.gen(c.length()) * parts;
    }
  return b;
}

/// Moment list mu_0..mu_N (mu_0 must be 1) to cumulant list kappa_0..kappa_N
/// (kappa_0 = 0), through log of the exponential generating function.
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments);

/// Same by the composition sum kappa_n/n! = sum_pi (-1)^(|pi|+1)/|pi| mu_pi/pi!.
std::vector<Rational> moments_to_cumulants_brute(const std::vector<Rational>& moments);

/// Cumulant list kappa_0..kappa_N (kappa_0 must be 0) back to moments, via exp.
std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants);

/// Same by mu_n/n! = sum_pi 1/|pi|! kappa_pi/pi!.
std::vector<Rational> cumulants_to_moments_brute(const std::vector<Rational>& cumulants);

/// Digit-sum identity sum_{k=0}^{2^(n-1)-1} f_(s2(k)+1), three ways.
template <typename R>
R digit_sum_brute(const WeightSequence<R>& f, int n) {
  if (n < 1 || n > kMaxTreeRowN)
    throw SizeGuardError("digit_sum_brute: n outside [1, 24]", kMaxTreeRowN);
  R acc = RingTraits<R>::zero();
  const std::uint64_t count = std::uint64_t(1) << (n - 1);
  for (std::uint64_t k = 0; k < count; ++k) acc = acc + f.gen(digit_sum_s2(k) + 1);
  return acc;
}

template <typename R>
R digit_sum_series(const WeightSequence<R>& f, int n) {
  if (n < 1) throw RangeError("digit_sum_series: n must be positive");
  Series<R> geo(n, [](int k) { return k == 0 ? RingTraits<R>::zero() : RingTraits<R>::one(); });
  return compose(f.series(n), geo)[n];
}

template <typename R>
R digit_sum_binomial(const WeightSequence<R>& f, int n) {
  if (n < 1) throw RangeError("digit_sum_binomial: n must be positive");
  R acc = RingTraits<R>::zero();
  for (int k = 1; k <= n; ++k)
    acc = acc + detail::scaled(f.gen(k), binomial(static_cast<unsigned long>(n) - 1,
                                                  static_cast<unsigned long>(n - k)));
  return acc;
}

/// Multinomial-weighted sums from the convolution identity's proof, kept as
/// independently enumerated oracles. Both take w through gen (w_n = -n! g_n).
inline constexpr int kMaxMultinomialN = 16;

/// S~_{m,n} = sum over k_1+..+k_m = n, k_i >= 1, of multinomial(n; k) w_k1..w_km.
Rational incomplete_sum(const InputSequence<Rational>& w, int m, int n);

/// S_{p,n} = the same with k_i >= 0 and the supplied w_0.
Rational complete_sum(const InputSequence<Rational>& w, const Rational& w0, int p, int n);

/// Weight factories.
WeightSequence<Rational> geometric_weights();                 // z/(1-z)
WeightSequence<Rational> log1p_weights();                     // log(1+z)
WeightSequence<Rational> exp_minus_one_weights();             // e^z - 1
WeightSequence<Rational> negative_binomial_weights(long q);   // (1-z)^(-q) - 1
WeightSequence<Rational> monomial_weights(int j);             // z^j

}  // namespace compsum
