#include "compsum/sequences.hpp"

#include <sstream>

#include "compsum/errors.hpp"
#include "compsum/series.hpp"

namespace compsum {

namespace {

unsigned long ul(int n) { return static_cast<unsigned long>(n); }

Rational nfac(int n) { return Rational(factorial(ul(n))); }

}  // namespace

Stirling2Table::Stirling2Table(int max_n) {
  if (max_n < 0) throw RangeError("Stirling2Table: negative size");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  rows_[0] = {Integer(1)};
  for (int n = 1; n <= max_n; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    const auto& prev = rows_[static_cast<std::size_t>(n) - 1];
    row.assign(static_cast<std::size_t>(n) + 1, Integer(0));
    for (int k = 1; k <= n; ++k) {
      row[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k) - 1];
      if (k < n) row[static_cast<std::size_t>(k)] += Integer(k) * prev[static_cast<std::size_t>(k)];
    }
  }
}

const Integer& Stirling2Table::at(int n, int k) const {
  if (n < 0 || n > max_n() || k < 0 || k > n)
    throw RangeError("Stirling2Table: index outside 0 <= k <= n <= max_n");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw RangeError("stirling2: need 0 <= k <= n");
  return Stirling2Table(n).at(n, k);
}

std::vector<Rational> bernoulli_numbers(int max_n) {
  if (max_n < 0) throw RangeError("bernoulli_numbers: negative n");
  SeriesQ s = z_over_expm1_series(max_n);
  std::vector<Rational> b(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) b[static_cast<std::size_t>(n)] = s[n] * nfac(n);
  return b;
}

std::vector<Rational> bernoulli_via_compositions(int max_n, BernoulliForm form) {
  if (max_n < 0) throw RangeError("bernoulli_via_compositions: negative n");
  std::vector<Rational> x;
  if (form == BernoulliForm::kInverseFactorial) {
    InputSequence<Rational> g{"-1/(n+1)!",
                              [](int n) { return -Rational(Integer(1), factorial(ul(n) + 1)); }};
    x = comp_sum(g, max_n);
  } else {
    WeightSequence<Rational> f{"(-1)^m/(m+1)", Rational(0), [](int m) {
                                 Rational v(Integer(1), Integer(m + 1));
                                 return m % 2 == 0 ? v : -v;
                               }};
    InputSequence<Rational> g{"1/n!", [](int n) { return Rational(Integer(1), factorial(ul(n))); }};
    x = weighted_comp_sum(f, g, max_n);
  }
  x[0] = Rational(1);
  for (int n = 1; n <= max_n; ++n) x[static_cast<std::size_t>(n)] *= nfac(n);
  return x;
}

std::vector<Rational> bernoulli_via_stirling(int max_n) {
  if (max_n < 0) throw RangeError("bernoulli_via_stirling: negative n");
  Stirling2Table table(2 * max_n);
  std::vector<Rational> b(static_cast<std::size_t>(max_n) + 1, Rational(0));
  for (int n = 0; n <= max_n; ++n) {
    Rational acc(0);
    for (int p = 0; p <= n; ++p) {
      Rational term(table.at(n + p, p), binomial(ul(n + p), ul(p)));
      term *= Rational(binomial(ul(n) + 1, ul(p) + 1));
      if (p % 2 == 0) acc += term;
      else acc -= term;
    }
    b[static_cast<std::size_t>(n)] = acc;
  }
  return b;
}

std::vector<Polynomial> bernoulli_polynomials(int max_n) {
  if (max_n < 0) throw RangeError("bernoulli_polynomials: negative n");
  SeriesP s = exp_zx_series(max_n) * to_polynomial_series(z_over_expm1_series(max_n));
  std::vector<Polynomial> b(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) b[static_cast<std::size_t>(n)] = s[n] * nfac(n);
  return b;
}

InputSequence<Polynomial> bernoulli_poly_input() {
  return {"bernoulli_poly", [](int n) {
            Polynomial diff = Polynomial::monomial(Rational(1), n + 1) -
                              (Polynomial::variable() - Polynomial(Rational(1))).pow(ul(n) + 1);
            Rational c(Integer(1), factorial(ul(n) + 1));
            if (n % 2 == 0) c = -c;
            return diff * c;
          }};
}

std::vector<Polynomial> bernoulli_polynomials_tree(int max_n) {
  std::vector<Polynomial> b = row_sums(bernoulli_poly_input(), max_n);
  for (int n = 0; n <= max_n; ++n) b[static_cast<std::size_t>(n)] *= nfac(n);
  return b;
}

CheckResult bernoulli_poly_expansion(int n) {
  if (n < 1) throw RangeError("bernoulli_poly_expansion: n must be positive");
  const Polynomial lhs = bernoulli_polynomials(n).back();
  Polynomial rhs;
  for (int p = 1; p <= n; ++p) {
    Polynomial term = norlund_polynomials(n, -p).back();
    term = term.substitute(Polynomial::monomial(Rational(-p), 1));
    term *= Rational(binomial(ul(n) + 1, ul(p) + 1));
    if (p % 2 == 0) rhs += term;
    else rhs -= term;
  }
  const std::string id = "bernoulli_poly_expansion";
  if (lhs == rhs) return CheckResult::pass(id, n, n);
  std::ostringstream w;
  w << "n=" << n << ": B_n(x) = " << lhs.str() << " but expansion = " << rhs.str();
  return CheckResult::fail(id, n, n, w.str());
}

std::vector<Rational> norlund_numbers(int max_n, long order) {
  if (max_n < 0) throw RangeError("norlund_numbers: negative n");
  SeriesQ base = order >= 0 ? z_over_expm1_series(max_n) : expm1_over_z_series(max_n);
  SeriesQ s = pow(base, order >= 0 ? order : -order);
  std::vector<Rational> b(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) b[static_cast<std::size_t>(n)] = s[n] * nfac(n);
  return b;
}

std::vector<Polynomial> norlund_polynomials(int max_n, long order) {
  if (max_n < 0) throw RangeError("norlund_polynomials: negative n");
  SeriesQ base = order >= 0 ? z_over_expm1_series(max_n) : expm1_over_z_series(max_n);
  SeriesP s = exp_zx_series(max_n) * to_polynomial_series(pow(base, order >= 0 ? order : -order));
  std::vector<Polynomial> b(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) b[static_cast<std::size_t>(n)] = s[n] * nfac(n);
  return b;
}

InputSequence<Rational> norlund_input(long order) {
  if (order < 1) throw RangeError("norlund_input: order must be >= 1");
  return {"norlund(" + std::to_string(order) + ")", [order](int n) {
            int q = static_cast<int>(order);
            Rational v(factorial(ul(q)), factorial(ul(q + n)));
            v *= Rational(stirling2(n + q, q));
            return -v;
          }};
}

std::vector<Rational> norlund_via_stirling(int max_n, long q) {
  if (max_n < 0) throw RangeError("norlund_via_stirling: negative n");
  if (q < 1) throw RangeError("norlund_via_stirling: q must be >= 1");
  Stirling2Table table(2 * max_n);
  const unsigned long qu = static_cast<unsigned long>(q);
  std::vector<Rational> b(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    Rational acc(0);
    for (int p = 0; p <= n; ++p) {
      Rational term(table.at(n + p, p), binomial(ul(n + p), ul(p)));
      term *= Rational(Integer(n + 1), Integer(p) + Integer(q));
      term *= Rational(binomial(ul(n), ul(p)));
      if (p % 2 == 0) acc += term;
      else acc -= term;
    }
    b[static_cast<std::size_t>(n)] = acc * Rational(binomial(ul(n) + qu, qu - 1));
  }
  return b;
}

std::vector<Rational> hypergeometric_bernoulli(int max_n, const Rational& a, const Rational& b) {
  if (max_n < 0) throw RangeError("hypergeometric_bernoulli: negative n");
  if (a.sign() <= 0 || b.sign() <= 0)
    throw RangeError("hypergeometric_bernoulli: a and b must be positive");
  SeriesQ f1(max_n, [&](int n) {
    return pochhammer(a, ul(n)) / (pochhammer(a + b, ul(n)) * nfac(n));
  });
  SeriesQ inv = reciprocal(f1);
  std::vector<Rational> out(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out[static_cast<std::size_t>(n)] = inv[n] * nfac(n);
  return out;
}

InputSequence<Rational> hypergeometric_input(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw RangeError("hypergeometric_input: a and b must be positive");
  return {"hypergeometric(" + a.str() + "," + b.str() + ")", [a, b](int n) {
            Rational v = pochhammer(a, ul(n)) / (pochhammer(a + b, ul(n)) * nfac(n));
            return -v;
          }};
}

std::vector<Integer> catalan(int max_n) {
  if (max_n < 0) throw RangeError("catalan: negative n");
  std::vector<Integer> c(static_cast<std::size_t>(max_n) + 1, Integer(0));
  c[0] = 1;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n - 1; ++k)
      c[static_cast<std::size_t>(n)] +=
          c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - 1 - k)];
  return c;
}

InputSequence<Rational> catalan_input() {
  return {"catalan", [](int n) {
            unsigned long m = ul(n) - 1;
            return Rational(binomial(2 * m, m), Integer(m + 1));
          }};
}

CheckResult catalan_invariance(int max_n) {
  if (max_n < 1) throw RangeError("catalan_invariance: n must be positive");
  const std::string id = "catalan_invariance";
  auto c = catalan(max_n);
  auto fail = [&](int n, const char* path, const Rational& got, const Integer& want) {
    std::ostringstream w;
    w << "n=" << n << " " << path << ": got " << got.str() << ", expected " << want.get_str();
    return CheckResult::fail(id, 1, max_n, w.str());
  };

  auto direct = comp_sum(catalan_input(), max_n);
  for (int n = 1; n <= max_n; ++n)
    if (direct[static_cast<std::size_t>(n)] != Rational(c[static_cast<std::size_t>(n)]))
      return fail(n, "comp_sum(C_{n-1})", direct[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n)]);

  InputSequence<Rational> xs{"C_n", [c](int n) { return Rational(c.at(static_cast<std::size_t>(n))); }};
  auto inverse = comp_sum_inverse(xs, max_n);
  for (int n = 1; n <= max_n; ++n)
    if (inverse[static_cast<std::size_t>(n)] != Rational(c[static_cast<std::size_t>(n) - 1]))
      return fail(n, "comp_sum_inverse(C_n)", inverse[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n) - 1]);

  const int brute_n = std::min(max_n, 12);
  auto direct_b = comp_sum_brute(catalan_input(), brute_n);
  auto inverse_b = comp_sum_inverse_brute(xs, brute_n);
  for (int n = 1; n <= brute_n; ++n) {
    if (direct_b[static_cast<std::size_t>(n)] != direct[static_cast<std::size_t>(n)])
      return fail(n, "brute comp_sum", direct_b[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n)]);
    if (inverse_b[static_cast<std::size_t>(n)] != inverse[static_cast<std::size_t>(n)])
      return fail(n, "brute comp_sum_inverse", inverse_b[static_cast<std::size_t>(n)],
                  c[static_cast<std::size_t>(n) - 1]);
  }
  return CheckResult::pass(id, 1, max_n);
}

std::vector<Polynomial> hermite_polynomials(int max_n) {
  if (max_n < 0) throw RangeError("hermite_polynomials: negative n");
  std::vector<Polynomial> h(static_cast<std::size_t>(max_n) + 1);
  h[0] = Polynomial(Rational(1));
  if (max_n >= 1) h[1] = Polynomial::monomial(Rational(2), 1);
  const Polynomial two_x = Polynomial::monomial(Rational(2), 1);
  for (int n = 2; n <= max_n; ++n)
    h[static_cast<std::size_t>(n)] =
        two_x * h[static_cast<std::size_t>(n) - 1] -
        h[static_cast<std::size_t>(n) - 2] * Rational(2 * (n - 1));
  return h;
}

std::vector<Polynomial> hermite_g_polynomials(int max_n) {
  if (max_n < 0) throw RangeError("hermite_g_polynomials: negative n");
  std::vector<Polynomial> g(static_cast<std::size_t>(max_n) + 1);
  g[0] = Polynomial(Rational(1));
  if (max_n >= 1) g[1] = Polynomial::monomial(Rational(-2), 1);
  const Polynomial minus_two_x = Polynomial::monomial(Rational(-2), 1);
  for (int n = 2; n <= max_n; ++n)
    g[static_cast<std::size_t>(n)] =
        minus_two_x * g[static_cast<std::size_t>(n) - 1] +
        g[static_cast<std::size_t>(n) - 2] * Rational(2 * (n - 1));
  return g;
}

InputSequence<Polynomial> hermite_input() {
  return {"hermite", [](int n) {
            return hermite_g_polynomials(n).back() * -Rational(Integer(1), factorial(ul(n)));
          }};
}

CheckResult hermite_invariance(int max_n) {
  if (max_n < 1) throw RangeError("hermite_invariance: n must be positive");
  const std::string id = "hermite_invariance";
  auto h = hermite_polynomials(max_n);
  auto x = comp_sum(hermite_input(), max_n);
  const int brute_n = std::min(max_n, 10);
  auto xb = comp_sum_brute(hermite_input(), brute_n);
  for (int n = 1; n <= max_n; ++n) {
    Polynomial want = h[static_cast<std::size_t>(n)] * Rational(Integer(1), factorial(ul(n)));
    const Polynomial& got = x[static_cast<std::size_t>(n)];
    if (got != want) {
      std::ostringstream w;
      w << "n=" << n << " comp_sum: got " << got.str() << ", expected H_n/n! = " << want.str();
      return CheckResult::fail(id, 1, max_n, w.str());
    }
    if (n <= brute_n && xb[static_cast<std::size_t>(n)] != want) {
      std::ostringstream w;
      w << "n=" << n << " brute: got " << xb[static_cast<std::size_t>(n)].str()
        << ", expected H_n/n! = " << want.str();
      return CheckResult::fail(id, 1, max_n, w.str());
    }
  }
  return CheckResult::pass(id, 1, max_n);
}

std::vector<Integer> linear_recurrence(const PartSet& parts, int max_n) {
  return count_restricted_upto(max_n, parts);
}

CheckResult linear_recurrence_check(const PartSet& parts, int max_n) {
  if (max_n < 1) throw RangeError("linear_recurrence_check: n must be positive");
  const std::string id = "linear_recurrence" + parts.str();
  auto rec = count_restricted_upto(max_n, parts);
  auto gf = comp_sum(indicator_input(parts), max_n);
  for (int n = 1; n <= max_n; ++n) {
    if (gf[static_cast<std::size_t>(n)] != Rational(rec[static_cast<std::size_t>(n)])) {
      std::ostringstream w;
      w << "n=" << n << " generating function: got " << gf[static_cast<std::size_t>(n)].str()
        << ", recurrence " << rec[static_cast<std::size_t>(n)].get_str();
      return CheckResult::fail(id, 1, max_n, w.str());
    }
    if (n <= 16) {
      Integer count(0);
      for (const auto& c : enumerate_restricted(n, parts)) {
        (void)c;
        ++count;
      }
      if (count != rec[static_cast<std::size_t>(n)]) {
        std::ostringstream w;
        w << "n=" << n << " enumeration: counted " << count.get_str() << ", recurrence "
          << rec[static_cast<std::size_t>(n)].get_str();
        return CheckResult::fail(id, 1, max_n, w.str());
      }
    }
  }
  return CheckResult::pass(id, 1, max_n);
}

namespace {

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::vector<std::string> strs(const std::vector<Polynomial>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

std::vector<std::string> strs(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.get_str());
  return out;
}

long param_long(const ParamMap& params, const std::string& key, long dflt) {
  auto it = params.find(key);
  if (it == params.end()) return dflt;
  try {
    std::size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw RangeError("");
    return v;
  } catch (const std::exception&) {
    throw RangeError("parameter " + key + ": expected an integer, got \"" + it->second + "\"");
  }
}

Rational param_rational(const ParamMap& params, const std::string& key, const Rational& dflt) {
  auto it = params.find(key);
  if (it == params.end()) return dflt;
  try {
    return Rational::from_string(it->second);
  } catch (const std::exception&) {
    throw RangeError("parameter " + key + ": expected a rational, got \"" + it->second + "\"");
  }
}

PartSet param_parts(const ParamMap& params, const std::string& key, std::vector<int> dflt) {
  auto it = params.find(key);
  if (it == params.end()) return PartSet(std::move(dflt));
  std::vector<int> parts;
  std::istringstream is(it->second);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(piece, &pos);
      if (pos != piece.size()) throw RangeError("");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw RangeError("parameter " + key + ": expected comma-separated parts, got \"" +
                       it->second + "\"");
    }
  }
  return PartSet(std::move(parts));
}

std::vector<std::string> norlund_comp_path(int max_n, long order) {
  auto x = comp_sum(norlund_input(order), max_n);
  x[0] = Rational(1);
  for (int n = 1; n <= max_n; ++n) x[static_cast<std::size_t>(n)] *= nfac(n);
  return strs(x);
}

std::vector<std::string> norlund_poly_comp_path(int max_n, long order) {
  // e^{zx} (z/(e^z-1))^q = exp(zx + q log(z/(e^z-1))), so the Norlund
  // polynomials are also the exp-weighted composition sums of that log input.
  InputSequence<Polynomial> g{"zx+q*log", [order](int n) {
                                SeriesQ l = log(z_over_expm1_series(n));
                                Polynomial c(l[n] * Rational(Integer(order)));
                                if (n == 1) c += Polynomial::variable();
                                return c;
                              }};
  WeightSequence<Polynomial> expw{"exp", Polynomial(Rational(1)), [](int m) {
                                    return Polynomial(Rational(Integer(1), factorial(ul(m))));
                                  }};
  auto a = weighted_comp_sum(expw, g, max_n);
  for (int n = 0; n <= max_n; ++n) a[static_cast<std::size_t>(n)] *= nfac(n);
  return strs(a);
}

std::vector<std::string> scaled_hermite(int max_n) {
  auto h = hermite_polynomials(max_n);
  for (int n = 0; n <= max_n; ++n)
    h[static_cast<std::size_t>(n)] *= Rational(Integer(1), factorial(ul(n)));
  return strs(h);
}

std::vector<SequenceRecipe> make_registry() {
  std::vector<SequenceRecipe> r;
  r.push_back({"bernoulli", "Bernoulli numbers B_n", "",
               [](int n, const ParamMap&) { return strs(bernoulli_numbers(n)); },
               [](int n, const ParamMap&) {
                 return strs(bernoulli_via_compositions(n, BernoulliForm::kInverseFactorial));
               }});
  r.push_back({"bernoulli_poly", "Bernoulli polynomials B_n(x)", "",
               [](int n, const ParamMap&) { return strs(bernoulli_polynomials(n)); },
               [](int n, const ParamMap&) { return strs(bernoulli_polynomials_tree(n)); }});
  r.push_back({"norlund", "Norlund numbers B_n^(p)", "p: integer order (default 2)",
               [](int n, const ParamMap& params) {
                 return strs(norlund_numbers(n, param_long(params, "p", 2)));
               },
               [](int n, const ParamMap& params) {
                 return norlund_comp_path(n, param_long(params, "p", 2));
               }});
  r.push_back({"norlund_poly", "Norlund polynomials B_n^(p)(x)", "p: integer order (default 2)",
               [](int n, const ParamMap& params) {
                 return strs(norlund_polynomials(n, param_long(params, "p", 2)));
               },
               [](int n, const ParamMap& params) {
                 return norlund_poly_comp_path(n, param_long(params, "p", 2));
               }});
  r.push_back({"hypergeometric_bernoulli", "Hypergeometric Bernoulli numbers",
               "a, b: positive rationals (default 1, 1)",
               [](int n, const ParamMap& params) {
                 return strs(hypergeometric_bernoulli(n, param_rational(params, "a", Rational(1)),
                                                      param_rational(params, "b", Rational(1))));
               },
               [](int n, const ParamMap& params) {
                 auto x = comp_sum(hypergeometric_input(param_rational(params, "a", Rational(1)),
                                                        param_rational(params, "b", Rational(1))),
                                   n);
                 x[0] = Rational(1);
                 for (int k = 1; k <= n; ++k) x[static_cast<std::size_t>(k)] *= nfac(k);
                 return strs(x);
               }});
  r.push_back({"catalan", "Catalan numbers C_n", "",
               [](int n, const ParamMap&) { return strs(catalan(n)); },
               [](int n, const ParamMap&) { return strs(row_sums(catalan_input(), n)); }});
  r.push_back({"restricted", "Counts of compositions into parts from a set",
               "parts: comma-separated allowed parts (default 1,2)",
               [](int n, const ParamMap& params) {
                 return strs(count_restricted_upto(n, param_parts(params, "parts", {1, 2})));
               },
               [](int n, const ParamMap& params) {
                 return strs(row_sums(indicator_input(param_parts(params, "parts", {1, 2})), n));
               }});
  r.push_back({"fibonacci", "Fibonacci counts (compositions into parts 1 and 2)", "",
               [](int n, const ParamMap&) {
                 return strs(count_restricted_upto(n, PartSet({1, 2})));
               },
               [](int n, const ParamMap&) {
                 return strs(row_sums(indicator_input(PartSet({1, 2})), n));
               }});
  r.push_back({"hermite", "Hermite tree invariants H_n(x)/n!", "",
               [](int n, const ParamMap&) { return scaled_hermite(n); },
               [](int n, const ParamMap&) { return strs(row_sums(hermite_input(), n)); }});
  return r;
}

}  // namespace

const std::vector<SequenceRecipe>& sequence_registry() {
  static const std::vector<SequenceRecipe> registry = make_registry();
  return registry;
}

const SequenceRecipe* find_recipe(std::string_view name) {
  for (const auto& recipe : sequence_registry())
    if (recipe.name == name) return &recipe;
  return nullptr;
}

}  // namespace compsum
