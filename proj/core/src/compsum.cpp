#include "compsum/compsum.hpp"

namespace compsum {

namespace {

std::vector<Rational> egf(const std::vector<Rational>& ordinary) {
  std::vector<Rational> c(ordinary.size());
  Integer nfac = 1;
  for (std::size_t n = 0; n < ordinary.size(); ++n) {
    if (n > 0) nfac *= static_cast<unsigned long>(n);
    c[n] = ordinary[n] / Rational(nfac);
  }
  return c;
}

std::vector<Rational> from_egf(const SeriesQ& s) {
  std::vector<Rational> out(static_cast<std::size_t>(s.order()) + 1);
  Integer nfac = 1;
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) nfac *= static_cast<unsigned long>(n);
    out[static_cast<std::size_t>(n)] = s[n] * Rational(nfac);
  }
  return out;
}

}  // namespace

std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments) {
  if (moments.empty() || moments[0] != Rational(1))
    throw ConstantTermError("moments_to_cumulants: mu_0 must be 1");
  return from_egf(log(SeriesQ(egf(moments))));
}

std::vector<Rational> moments_to_cumulants_brute(const std::vector<Rational>& moments) {
  if (moments.empty() || moments[0] != Rational(1))
    throw ConstantTermError("moments_to_cumulants_brute: mu_0 must be 1");
  const int max_n = static_cast<int>(moments.size()) - 1;
  detail::check_brute(max_n, "moments_to_cumulants_brute");
  std::vector<Rational> kappa(moments.size(), Rational(0));
  for (int n = 1; n <= max_n; ++n) {
    Rational acc(0);
    for (const auto& c : enumerate(n)) {
      Rational term(Integer(1), c.parts_factorial());
      for (int k : c.parts()) term *= moments[static_cast<std::size_t>(k)];
      term /= Rational(c.length());
      if (c.length() % 2 == 0) acc -= term;
      else acc += term;
    }
    kappa[static_cast<std::size_t>(n)] = acc * Rational(factorial(static_cast<unsigned long>(n)));
  }
  return kappa;
}

std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants) {
  if (cumulants.empty() || !cumulants[0].is_zero())
    throw ConstantTermError("cumulants_to_moments: kappa_0 must be 0");
  return from_egf(exp(SeriesQ(egf(cumulants))));
}

std::vector<Rational> cumulants_to_moments_brute(const std::vector<Rational>& cumulants) {
  if (cumulants.empty() || !cumulants[0].is_zero())
    throw ConstantTermError("cumulants_to_moments_brute: kappa_0 must be 0");
  const int max_n = static_cast<int>(cumulants.size()) - 1;
  detail::check_brute(max_n, "cumulants_to_moments_brute");
  std::vector<Rational> mu(cumulants.size(), Rational(0));
  mu[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    Rational acc(0);
    for (const auto& c : enumerate(n)) {
      Rational term(Integer(1), c.parts_factorial() * factorial(static_cast<unsigned long>(c.length())));
      for (int k : c.parts()) term *= cumulants[static_cast<std::size_t>(k)];
      acc += term;
    }
    mu[static_cast<std::size_t>(n)] = acc * Rational(factorial(static_cast<unsigned long>(n)));
  }
  return mu;
}

namespace {

// Runs fn over all (k_1,...,k_m) with k_i >= lo summing to n. The empty
// tuple sums to 0, so m = 0 yields exactly one call when n = 0.
template <typename Fn>
void each_tuple(int m, int n, int lo, std::vector<int>& k, Fn&& fn) {
  if (m == 0) {
    if (n == 0) fn(k);
    return;
  }
  if (m == 1) {
    if (n >= lo) {
      k.push_back(n);
      fn(k);
      k.pop_back();
    }
    return;
  }
  for (int first = lo; first <= n - lo * (m - 1); ++first) {
    k.push_back(first);
    each_tuple(m - 1, n - first, lo, k, fn);
    k.pop_back();
  }
}

void check_multinomial(int m, int n, const char* who) {
  if (m < 0 || n < 0) throw RangeError(std::string(who) + ": bad arguments");
  if (m > kMaxMultinomialN || n > kMaxMultinomialN)
    throw SizeGuardError(std::string(who) + ": arguments above enumeration guard", kMaxMultinomialN);
}

}  // namespace

Rational incomplete_sum(const InputSequence<Rational>& w, int m, int n) {
  check_multinomial(m, n, "incomplete_sum");
  Rational acc(0);
  std::vector<int> k;
  each_tuple(m, n, 1, k, [&](const std::vector<int>& tuple) {
    Rational term(factorial(static_cast<unsigned long>(n)));
    for (int ki : tuple) {
      term /= Rational(factorial(static_cast<unsigned long>(ki)));
      term *= w.gen(ki);
    }
    acc += term;
  });
  return acc;
}

Rational complete_sum(const InputSequence<Rational>& w, const Rational& w0, int p, int n) {
  check_multinomial(p, n, "complete_sum");
  Rational acc(0);
  std::vector<int> k;
  each_tuple(p, n, 0, k, [&](const std::vector<int>& tuple) {
    Rational term(factorial(static_cast<unsigned long>(n)));
    for (int ki : tuple) {
      term /= Rational(factorial(static_cast<unsigned long>(ki)));
      term *= ki == 0 ? w0 : w.gen(ki);
    }
    acc += term;
  });
  return acc;
}

WeightSequence<Rational> geometric_weights() {
  return {"geometric", Rational(0), [](int) { return Rational(1); }};
}

WeightSequence<Rational> log1p_weights() {
  return {"log1p", Rational(0), [](int m) {
            Rational f(Integer(1), Integer(m));
            return m % 2 == 0 ? -f : f;
          }};
}

WeightSequence<Rational> exp_minus_one_weights() {
  return {"exp_minus_one", Rational(0),
          [](int m) { return Rational(Integer(1), factorial(static_cast<unsigned long>(m))); }};
}

WeightSequence<Rational> negative_binomial_weights(long q) {
  if (q < 1) throw RangeError("negative_binomial_weights: q must be >= 1");
  return {"negative_binomial(" + std::to_string(q) + ")", Rational(0), [q](int m) {
            return Rational(binomial(static_cast<unsigned long>(q) + m - 1,
                                     static_cast<unsigned long>(m)));
          }};
}

WeightSequence<Rational> monomial_weights(int j) {
  if (j < 1) throw RangeError("monomial_weights: j must be >= 1");
  return {"z^" + std::to_string(j), Rational(0),
          [j](int m) { return m == j ? Rational(1) : Rational(0); }};
}

}  // namespace compsum
