#include "compsum/series.hpp"

namespace compsum {

SeriesP to_polynomial_series(const SeriesQ& a) {
  return SeriesP(a.order(), [&](int k) { return Polynomial(a[k]); });
}

SeriesQ identity_series(int order) {
  return SeriesQ(order, [](int k) { return Rational(k == 1 ? 1 : 0); });
}

SeriesQ geometric_series(int order) {
  return SeriesQ(order, [](int k) { return Rational(k >= 1 ? 1 : 0); });
}

SeriesQ exp_minus_one_series(int order) {
  return SeriesQ(order, [](int k) {
    return k == 0 ? Rational(0) : Rational(Integer(1), factorial(static_cast<unsigned long>(k)));
  });
}

SeriesQ expm1_over_z_series(int order) {
  return SeriesQ(order, [](int k) {
    return Rational(Integer(1), factorial(static_cast<unsigned long>(k) + 1));
  });
}

SeriesQ z_over_expm1_series(int order) { return reciprocal(expm1_over_z_series(order)); }

SeriesQ log1p_series(int order) {
  return SeriesQ(order, [](int k) {
    if (k == 0) return Rational(0);
    return Rational(k % 2 == 0 ? -1 : 1, k);
  });
}

SeriesQ catalan_shifted_series(int order) {
  // Coefficient of z^n is C_{n-1}; C_n = sum_{k} C_k C_{n-1-k}.
  std::vector<Integer> c(static_cast<size_t>(order) + 1);
  if (order >= 0) c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integer acc = 0;
    for (int k = 0; k <= n - 1; ++k) acc += c[static_cast<size_t>(k)] * c[static_cast<size_t>(n - 1 - k)];
    c[static_cast<size_t>(n)] = acc;
  }
  return SeriesQ(order, [&](int k) {
    return k == 0 ? Rational(0) : Rational(c[static_cast<size_t>(k - 1)]);
  });
}

SeriesQ negative_binomial_series(int order, int q) {
  if (q < 1) throw RangeError("negative_binomial_series: q must be >= 1");
  return SeriesQ(order, [q](int k) {
    if (k == 0) return Rational(0);
    return Rational(binomial(static_cast<unsigned long>(k + q - 1), static_cast<unsigned long>(q - 1)));
  });
}

SeriesP exp_zx_series(int order) {
  return SeriesP(order, [](int k) {
    const Rational c(Integer(1), factorial(static_cast<unsigned long>(k)));
    return Polynomial::monomial(c, k);
  });
}

}  // namespace compsum
