#include "compsum/verify.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "compsum/compositions.hpp"
#include "compsum/compsum.hpp"
#include "compsum/errors.hpp"
#include "compsum/iterated.hpp"
#include "compsum/pitree.hpp"
#include "compsum/sequences.hpp"
#include "compsum/series.hpp"

namespace compsum {
namespace {

using VecQ = std::vector<Rational>;

/// Inputs with different coefficient shapes: alternating factorial decay,
/// superexponential growth, a 0/1 indicator, and a plain sign-mixing table.
std::vector<InputSequence<Rational>> input_battery(int max_n) {
  std::vector<Rational> table;
  for (int n = 1; n <= std::max(max_n, 1); ++n)
    table.emplace_back(Integer(n % 2 == 0 ? -(n + 1) : n + 1), Integer(2 * n + 1));
  return {woon_input(), catalan_input(), indicator_input(PartSet({1, 2})),
          table_input("mixed", std::move(table))};
}

std::vector<WeightSequence<Rational>> weight_battery() {
  return {geometric_weights(), log1p_weights(), exp_minus_one_weights(),
          negative_binomial_weights(2)};
}

/// Folds lhs[n_lo..] == rhs[n_lo..] into a running result; context names the
/// battery case so a failure pins the exact input.
void fold_eq(CheckResult& acc, const VecQ& lhs, const VecQ& rhs, int n_lo,
             const std::string& context) {
  if (!acc.ok) return;
  const std::size_t count = std::min(lhs.size(), rhs.size());
  for (std::size_t n = static_cast<std::size_t>(n_lo); n < count; ++n)
    if (!(lhs[n] == rhs[n])) {
      acc.ok = false;
      acc.witness = context + ": n=" + std::to_string(n) + " lhs=" + lhs[n].str() +
                    " rhs=" + rhs[n].str();
      return;
    }
}

void fold_eq(CheckResult& acc, const Rational& lhs, const Rational& rhs, int n,
             const std::string& context) {
  if (!acc.ok) return;
  if (!(lhs == rhs)) {
    acc.ok = false;
    acc.witness =
        context + ": n=" + std::to_string(n) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
  }
}

void fold_eq_poly(CheckResult& acc, const std::vector<Polynomial>& lhs,
                  const std::vector<Polynomial>& rhs, int n_lo, const std::string& context) {
  if (!acc.ok) return;
  const std::size_t count = std::min(lhs.size(), rhs.size());
  for (std::size_t n = static_cast<std::size_t>(n_lo); n < count; ++n)
    if (!(lhs[n] == rhs[n])) {
      acc.ok = false;
      acc.witness = context + ": n=" + std::to_string(n) + " lhs=" + lhs[n].str() +
                    " rhs=" + rhs[n].str();
      return;
    }
}

InputSequence<Rational> negated(const InputSequence<Rational>& s) {
  return {"-" + s.name, [gen = s.gen](int n) { return -gen(n); }};
}

InputSequence<Rational> sums_as_input(std::string name, VecQ values) {
  return table_input(std::move(name), VecQ(values.begin() + 1, values.end()));
}

VecQ negated_vec(VecQ v) {
  for (auto& c : v) c = -c;
  return v;
}

// ---- compsum suite ----

CheckResult check_comp_sum_paths(int max_n) {
  const int bn = std::min(max_n, kMaxBruteN);
  auto acc = CheckResult::pass("comp_sum: gf == brute == convolution", 1, max_n);
  for (const auto& g : input_battery(max_n)) {
    VecQ gf = comp_sum(g, max_n);
    fold_eq(acc, VecQ(gf.begin(), gf.begin() + bn + 1), comp_sum_brute(g, bn), 1,
            "brute g=" + g.name);
    fold_eq(acc, gf, comp_sum_convolution(g, max_n), 1, "convolution g=" + g.name);
  }
  return acc;
}

CheckResult check_inverse_round_trip(int max_n) {
  auto acc = CheckResult::pass("comp_sum_inverse: recovers g and x", 1, max_n);
  for (const auto& g : input_battery(max_n)) {
    VecQ gv;
    for (int n = 0; n <= max_n; ++n) gv.push_back(n == 0 ? Rational(0) : g.gen(n));
    VecQ x = comp_sum(g, max_n);
    auto xin = sums_as_input("x(" + g.name + ")", x);
    fold_eq(acc, comp_sum_inverse(xin, max_n), gv, 1, "inverse(sum) g=" + g.name);
    auto gback = sums_as_input("g'(" + g.name + ")", comp_sum_inverse(xin, max_n));
    fold_eq(acc, comp_sum(gback, max_n), x, 1, "sum(inverse) g=" + g.name);
  }
  return acc;
}

CheckResult check_inverse_paths(int max_n) {
  const int bn = std::min(max_n, kMaxBruteN);
  auto acc = CheckResult::pass("comp_sum_inverse: gf == brute == convolution", 1, max_n);
  for (const auto& g : input_battery(max_n)) {
    auto xin = sums_as_input("x(" + g.name + ")", comp_sum(g, max_n));
    VecQ gf = comp_sum_inverse(xin, max_n);
    fold_eq(acc, VecQ(gf.begin(), gf.begin() + bn + 1), comp_sum_inverse_brute(xin, bn), 1,
            "brute x from g=" + g.name);
    fold_eq(acc, gf, comp_sum_inverse_convolution(xin, max_n), 1,
            "convolution x from g=" + g.name);
  }
  return acc;
}

/// The direct and inverse sums exchange under (g, x) -> (-x, -g): summing
/// the negated sums returns the negated input.
CheckResult check_sign_exchange(int max_n) {
  auto acc = CheckResult::pass("comp_sum: sign exchange with its inverse", 1, max_n);
  for (const auto& g : input_battery(max_n)) {
    VecQ x = comp_sum(g, max_n);
    auto minus_x = negated(sums_as_input("x(" + g.name + ")", x));
    VecQ gv;
    for (int n = 0; n <= max_n; ++n) gv.push_back(n == 0 ? Rational(0) : g.gen(n));
    fold_eq(acc, comp_sum(minus_x, max_n), negated_vec(gv), 1, "g=" + g.name);
  }
  return acc;
}

CheckResult check_weighted_paths(int max_n) {
  const int bn = std::min(max_n, kMaxBruteN);
  auto acc = CheckResult::pass("weighted_comp_sum: gf == brute == convolution", 0, max_n);
  for (const auto& f : weight_battery())
    for (const auto& g : input_battery(max_n)) {
      const std::string ctx = "f=" + f.name + " g=" + g.name;
      VecQ gf = weighted_comp_sum(f, g, max_n);
      fold_eq(acc, VecQ(gf.begin(), gf.begin() + bn + 1), weighted_comp_sum_brute(f, g, bn), 0,
              "brute " + ctx);
      fold_eq(acc, gf, weighted_convolution(f, g, max_n), 0, "convolution " + ctx);
    }
  return acc;
}

CheckResult check_parts_paths(int max_n) {
  const int bn = std::min(max_n, kMaxBruteN);
  auto acc = CheckResult::pass("parts_sum: gf == brute", 1, bn);
  for (const auto& f : weight_battery())
    for (const auto& g : input_battery(max_n))
      fold_eq(acc, parts_sum(f, g, bn), parts_sum_brute(f, g, bn), 1,
              "f=" + f.name + " g=" + g.name);
  return acc;
}

/// With all weights 1 the parts generating function collapses to
/// ((1-z)/(1-2z))^2 g(z).
CheckResult check_parts_total_gf(int max_n) {
  auto acc = CheckResult::pass("parts_sum: total-parts gf ((1-z)/(1-2z))^2 g", 1, max_n);
  SeriesQ one_minus_z(max_n, [](int k) { return Rational(k == 0 ? 1 : (k == 1 ? -1 : 0)); });
  SeriesQ one_minus_2z(max_n, [](int k) { return Rational(k == 0 ? 1 : (k == 1 ? -2 : 0)); });
  SeriesQ kernel = one_minus_z * one_minus_z * reciprocal(one_minus_2z * one_minus_2z);
  for (const auto& g : input_battery(max_n)) {
    SeriesQ rhs = kernel * input_series(g, max_n);
    fold_eq(acc, parts_sum(geometric_weights(), g, max_n), rhs.coeffs(), 1, "g=" + g.name);
  }
  return acc;
}

CheckResult check_digit_sums(int max_n) {
  const int dn = std::min(max_n, kMaxMultinomialN);
  auto acc = CheckResult::pass("digit_sum: brute == gf == binomial", 1, dn);
  for (const auto& f : weight_battery())
    for (int n = 1; n <= dn; ++n) {
      Rational brute = digit_sum_brute(f, n);
      fold_eq(acc, brute, digit_sum_series(f, n), n, "gf f=" + f.name);
      fold_eq(acc, brute, digit_sum_binomial(f, n), n, "binomial f=" + f.name);
    }
  for (int n = 1; n <= dn; ++n)
    fold_eq(acc, digit_sum_brute(log1p_weights(), n), Rational(1, n), n, "log1p value 1/n");
  return acc;
}

CheckResult check_moments(int max_n) {
  const int mn = std::min(max_n, 10);
  auto acc = CheckResult::pass("moments <-> cumulants: gf == brute, round trip", 0, mn);
  // Standard normal moments 1, 0, 1, 0, 3, ... and a skewed rational set.
  VecQ normal{Rational(1)};
  for (int n = 1; n <= mn; ++n)
    normal.push_back(n % 2 == 1 ? Rational(0) : normal[static_cast<std::size_t>(n) - 2] *
                                                    Rational(n - 1));
  VecQ skewed{Rational(1)};
  for (int n = 1; n <= mn; ++n) skewed.emplace_back(Integer(n + 2), Integer(2 * n + 1));
  for (const VecQ& mu : {normal, skewed}) {
    const std::string ctx = mu == normal ? "normal" : "skewed";
    VecQ kappa = moments_to_cumulants(mu);
    fold_eq(acc, kappa, moments_to_cumulants_brute(mu), 0, "to-cumulants brute " + ctx);
    fold_eq(acc, cumulants_to_moments(kappa), mu, 0, "round trip " + ctx);
    fold_eq(acc, cumulants_to_moments_brute(kappa), mu, 0, "to-moments brute " + ctx);
    fold_eq(acc, kappa[std::min<std::size_t>(2, kappa.size() - 1)],
            mu.size() > 2 ? mu[2] - mu[1] * mu[1] : kappa[kappa.size() - 1], 2,
            "kappa2 = mu2 - mu1^2 " + ctx);
  }
  return acc;
}

/// S~_{m,n} = sum_p (-1)^(m-p) binom(m,p) S_{p,n}, with w_n = -n! g_n, w_0 = 1.
CheckResult check_multinomial_relation(int max_n) {
  const int mn = std::min(max_n, 8);
  auto acc = CheckResult::pass("incomplete_sum: binomial transform of complete_sum", 1, mn);
  for (const auto& g : input_battery(mn)) {
    InputSequence<Rational> w{"w(" + g.name + ")",
                              [gen = g.gen](int n) {
                                return -gen(n) * Rational(factorial(static_cast<unsigned long>(n)));
                              }};
    for (int n = 1; n <= mn && acc.ok; ++n)
      for (int m = 1; m <= n; ++m) {
        Rational rhs(0);
        for (int p = 0; p <= m; ++p) {
          Rational term = complete_sum(w, Rational(1), p, n) *
                          Rational(binomial(static_cast<unsigned long>(m),
                                            static_cast<unsigned long>(p)));
          if ((m - p) % 2 == 0) rhs += term;
          else rhs -= term;
        }
        fold_eq(acc, incomplete_sum(w, m, n), rhs, n,
                "m=" + std::to_string(m) + " g=" + g.name);
      }
  }
  return acc;
}

/// Complete sums of w_k = 1/(k+1) against the Stirling closed form
/// n! p! / (n+p)! {n+p, p}.
CheckResult check_complete_sum_stirling(int max_n) {
  const int mn = std::min(max_n, 6);
  auto acc = CheckResult::pass("complete_sum: 1/(k+1) weights vs Stirling closed form", 0, mn);
  InputSequence<Rational> w{"1/(k+1)", [](int n) { return Rational(1, n + 1); }};
  for (int p = 0; p <= 3; ++p)
    for (int n = 0; n <= mn; ++n) {
      Rational closed = Rational(factorial(static_cast<unsigned long>(n)) *
                                 factorial(static_cast<unsigned long>(p))) /
                        Rational(factorial(static_cast<unsigned long>(n + p))) *
                        Rational(stirling2(n + p, p));
      fold_eq(acc, complete_sum(w, Rational(1), p, n), closed, n, "p=" + std::to_string(p));
    }
  return acc;
}

/// The inner weight sum of the convolution rewrite for f = (1-z)^(-q) - 1:
/// sum_{m=p}^n binom(m,p) binom(m+q-1,q-1)
///   = (n-p+1)/(p+q) binom(n+1,p) binom(n+q,q-1).
CheckResult check_inner_weight_identity(int max_n) {
  const int mn = std::min(max_n, 8);
  auto acc = CheckResult::pass("weighted_convolution: inner weight closed form", 0, mn);
  for (long q = 1; q <= 4; ++q)
    for (int n = 0; n <= mn; ++n)
      for (int p = 0; p <= n; ++p) {
        Rational lhs(0);
        for (int m = p; m <= n; ++m)
          lhs += Rational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(p)) *
                          binomial(static_cast<unsigned long>(m + q - 1),
                                   static_cast<unsigned long>(q - 1)));
        Rational rhs = Rational(n - p + 1, static_cast<long>(p + q)) *
                       Rational(binomial(static_cast<unsigned long>(n) + 1,
                                         static_cast<unsigned long>(p)) *
                                binomial(static_cast<unsigned long>(n + q),
                                         static_cast<unsigned long>(q - 1)));
        fold_eq(acc, lhs, rhs, n, "p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
  return acc;
}

// ---- pitree suite ----

CheckResult check_row_masks(int max_n) {
  const int mn = std::min(max_n, 10);
  auto acc = CheckResult::pass("tree rows: path order masks enumerate C(n)", 1, mn);
  for (int n = 1; n <= mn && acc.ok; ++n) {
    std::vector<bool> seen(std::size_t(1) << (n - 1), false);
    for (std::uint64_t rank = 0; rank < (std::uint64_t(1) << (n - 1)); ++rank) {
      std::uint64_t mask = tree_row_mask(n, rank);
      if (mask >= seen.size() || seen[mask]) {
        acc.ok = false;
        acc.witness = "n=" + std::to_string(n) + " rank=" + std::to_string(rank) +
                      " duplicate or out-of-range mask";
        break;
      }
      seen[mask] = true;
    }
  }
  // The worked row: 3 = (1,1,1), (2,1), (1,2), (3) in path order.
  if (acc.ok) {
    auto row = build_row(woon_input(), 3);
    const char* want[] = {"1+1+1", "2+1", "1+2", "3"};
    for (int i = 0; i < 4; ++i)
      if (row[static_cast<std::size_t>(i)].multi_index.str() != want[i]) {
        acc.ok = false;
        acc.witness = "row 3 slot " + std::to_string(i) + " is " +
                      row[static_cast<std::size_t>(i)].multi_index.str();
        break;
      }
  }
  return acc;
}

CheckResult check_row_sums_vs_nodes(int max_n) {
  const int mn = std::min(max_n, 12);
  auto acc = CheckResult::pass("row_sums: recurrence == summed row nodes", 1, mn);
  for (const auto& g : input_battery(mn)) {
    VecQ sums = row_sums(g, mn);
    for (int n = 1; n <= mn; ++n) {
      Rational direct(0);
      for_each_row_node(g, n, [&](const PiNode<Rational>& node) { direct += node.value; });
      fold_eq(acc, sums[static_cast<std::size_t>(n)], direct, n, "g=" + g.name);
    }
  }
  return acc;
}

CheckResult check_row_sums_vs_comp_sum(int max_n) {
  auto acc = CheckResult::pass("row_sums: matches comp_sum for n >= 1", 1, max_n);
  for (const auto& g : input_battery(max_n))
    fold_eq(acc, row_sums(g, max_n), comp_sum(g, max_n), 1, "g=" + g.name);
  return acc;
}

CheckResult check_woon_rows(int max_n) {
  auto acc = CheckResult::pass("woon rows: sums equal (-1)^n B_n / n!", 1, max_n);
  VecQ sums = row_sums(woon_input(), max_n);
  VecQ b = bernoulli_numbers(max_n);
  for (int n = 1; n <= max_n; ++n) {
    Rational want = b[static_cast<std::size_t>(n)] /
                    Rational(factorial(static_cast<unsigned long>(n)));
    if (n % 2 == 1) want = -want;
    fold_eq(acc, sums[static_cast<std::size_t>(n)], want, n, "woon");
  }
  return acc;
}

// ---- sequences suite ----

CheckResult check_bernoulli_paths(int max_n) {
  auto acc = CheckResult::pass("bernoulli: five independent paths agree", 0, max_n);
  VecQ gf = bernoulli_numbers(max_n);
  fold_eq(acc, gf, bernoulli_via_compositions(max_n, BernoulliForm::kInverseFactorial), 0,
          "inverse-factorial form");
  fold_eq(acc, gf, bernoulli_via_compositions(max_n, BernoulliForm::kStirlingWeighted), 0,
          "stirling-weighted form");
  fold_eq(acc, gf, bernoulli_via_stirling(max_n), 0, "stirling closed form");
  VecQ rows = row_sums(woon_input(), max_n);
  for (int n = 1; n <= max_n; ++n) {
    Rational tree = rows[static_cast<std::size_t>(n)] *
                    Rational(factorial(static_cast<unsigned long>(n)));
    if (n % 2 == 1) tree = -tree;
    fold_eq(acc, gf[static_cast<std::size_t>(n)], tree, n, "woon tree");
  }
  return acc;
}

CheckResult check_bernoulli_polynomials(int max_n) {
  const int mn = std::min(max_n, 10);
  auto acc = CheckResult::pass("bernoulli polynomials: egf == tree, B_n(0) == B_n", 0, mn);
  auto series = bernoulli_polynomials(mn);
  fold_eq_poly(acc, series, bernoulli_polynomials_tree(mn), 0, "tree");
  VecQ b = bernoulli_numbers(mn);
  for (int n = 0; n <= mn; ++n)
    fold_eq(acc, series[static_cast<std::size_t>(n)].eval(Rational(0)),
            b[static_cast<std::size_t>(n)], n, "B_n(0)");
  for (int n = 1; n <= std::min(mn, 8); ++n) {
    CheckResult inner = bernoulli_poly_expansion(n);
    if (!inner.ok && acc.ok) {
      acc.ok = false;
      acc.witness = inner.witness;
    }
  }
  return acc;
}

CheckResult check_norlund(int max_n) {
  const int mn = std::min(max_n, 10);
  auto acc = CheckResult::pass("norlund: gf == stirling == composition path", 0, mn);
  for (long q = 1; q <= 4; ++q) {
    const std::string ctx = "q=" + std::to_string(q);
    VecQ gf = norlund_numbers(mn, q);
    fold_eq(acc, gf, norlund_via_stirling(mn, q), 0, "stirling " + ctx);
    VecQ sums = comp_sum(norlund_input(q), mn);
    for (int n = 1; n <= mn; ++n)
      fold_eq(acc, gf[static_cast<std::size_t>(n)],
              sums[static_cast<std::size_t>(n)] *
                  Rational(factorial(static_cast<unsigned long>(n))),
              n, "composition " + ctx);
  }
  // Negative orders: (z/(e^z-1))^q (z/(e^z-1))^{-q} == 1 termwise.
  for (long q = 1; q <= 3; ++q) {
    VecQ pos = norlund_numbers(mn, q);
    VecQ neg = norlund_numbers(mn, -q);
    for (int n = 0; n <= mn; ++n) {
      Rational conv(0);
      for (int k = 0; k <= n; ++k)
        conv += pos[static_cast<std::size_t>(k)] * neg[static_cast<std::size_t>(n - k)] *
                Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
      fold_eq(acc, conv, Rational(n == 0 ? 1 : 0), n, "inverse pair q=" + std::to_string(q));
    }
  }
  return acc;
}

CheckResult check_hypergeometric(int max_n) {
  auto acc = CheckResult::pass("hypergeometric bernoulli: a=b=1 is classical", 0, max_n);
  fold_eq(acc, hypergeometric_bernoulli(max_n, Rational(1), Rational(1)),
          bernoulli_numbers(max_n), 0, "a=b=1");
  const Rational a(3, 2), b(2);
  VecQ gf = hypergeometric_bernoulli(std::min(max_n, 10), a, b);
  VecQ sums = comp_sum(hypergeometric_input(a, b), std::min(max_n, 10));
  for (int n = 1; n < static_cast<int>(gf.size()); ++n)
    fold_eq(acc, gf[static_cast<std::size_t>(n)],
            sums[static_cast<std::size_t>(n)] *
                Rational(factorial(static_cast<unsigned long>(n))),
            n, "composition a=3/2 b=2");
  return acc;
}

CheckResult check_registry_duals(int max_n) {
  const int mn = std::min(max_n, 8);
  auto acc = CheckResult::pass("registry: closed form == composition path", 0, mn);
  for (const auto& recipe : sequence_registry()) {
    auto closed = recipe.closed_form(mn, {});
    auto comp = recipe.via_compositions(mn, {});
    for (std::size_t n = 0; n < closed.size() && acc.ok; ++n)
      if (closed[n] != comp[n]) {
        acc.ok = false;
        acc.witness = recipe.name + ": n=" + std::to_string(n) + " closed=" + closed[n] +
                      " composition=" + comp[n];
      }
  }
  return acc;
}

// ---- iterated suite ----

CheckResult check_shape_counts(int max_n) {
  const int mn = std::min(std::max(max_n, 2), kMaxShapeLeaves);
  auto acc = CheckResult::pass("shapes: counted by Catalan numbers", 2, mn);
  auto cats = catalan(mn);
  for (int n = 2; n <= mn; ++n)
    fold_eq(acc, Rational(Integer(static_cast<long>(enumerate_shapes(n).size()))),
            Rational(cats[static_cast<std::size_t>(n) - 1]), n, "count");
  return acc;
}

CheckResult check_iterated_vs_series(int max_n) {
  const int order = std::min(max_n, kMaxIteratedOrder);
  auto acc = CheckResult::pass("iterated: plan sums == nested composition", 0, order);
  std::vector<SeriesQ> fs{log1p_series(order), geometric_series(order),
                          exp_minus_one_series(order), catalan_shifted_series(order)};
  for (int n = 2; n <= 4; ++n) {
    std::vector<SeriesQ> take(fs.begin(), fs.begin() + n);
    for (const auto& shape : enumerate_shapes(n))
      fold_eq(acc, evaluate_iterated(take, shape, order), iterated_series(take, shape, order),
              0, "shape " + shape.str());
  }
  return acc;
}

CheckResult check_iterated_two_leaves(int max_n) {
  const int order = std::min(max_n, kMaxIteratedOrder);
  auto acc = CheckResult::pass("iterated: two leaves reduce to weighted_comp_sum", 0, order);
  const auto shape = enumerate_shapes(2).at(0);
  for (const auto& f : weight_battery())
    for (const auto& g : input_battery(order)) {
      std::vector<SeriesQ> fs{f.series(order), input_series(g, order)};
      fold_eq(acc, evaluate_iterated(fs, shape, order), weighted_comp_sum(f, g, order), 0,
              "f=" + f.name + " g=" + g.name);
    }
  return acc;
}

CheckResult check_triple_geometric(int max_n) {
  const int order = std::min(max_n, kMaxIteratedOrder);
  auto acc = CheckResult::pass("iterated: geometric o geometric o geometric is z/(1-3z)", 1,
                               order);
  std::vector<SeriesQ> fs{geometric_series(order), geometric_series(order),
                          geometric_series(order)};
  for (const auto& shape : enumerate_shapes(3)) {
    VecQ got = evaluate_iterated(fs, shape, order);
    for (int n = 1; n <= order; ++n) {
      Rational want(1);
      for (int i = 1; i < n; ++i) want *= Rational(3);
      fold_eq(acc, got[static_cast<std::size_t>(n)], want, n, "shape " + shape.str());
    }
  }
  return acc;
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> verify_compsum(int max_n) {
  if (max_n < 1) throw RangeError("verify_compsum: max_n must be positive");
  std::vector<CheckResult> out;
  out.push_back(check_comp_sum_paths(max_n));
  out.push_back(check_inverse_round_trip(max_n));
  out.push_back(check_inverse_paths(max_n));
  out.push_back(check_sign_exchange(max_n));
  out.push_back(check_weighted_paths(max_n));
  out.push_back(check_parts_paths(max_n));
  out.push_back(check_parts_total_gf(max_n));
  out.push_back(check_digit_sums(max_n));
  out.push_back(check_moments(max_n));
  out.push_back(check_multinomial_relation(max_n));
  out.push_back(check_complete_sum_stirling(max_n));
  out.push_back(check_inner_weight_identity(max_n));
  return out;
}

std::vector<CheckResult> verify_pitree(int max_n) {
  if (max_n < 1) throw RangeError("verify_pitree: max_n must be positive");
  std::vector<CheckResult> out;
  out.push_back(check_row_masks(max_n));
  out.push_back(check_row_sums_vs_nodes(max_n));
  out.push_back(check_row_sums_vs_comp_sum(max_n));
  out.push_back(check_woon_rows(max_n));
  return out;
}

std::vector<CheckResult> verify_sequences(int max_n) {
  if (max_n < 1) throw RangeError("verify_sequences: max_n must be positive");
  std::vector<CheckResult> out;
  out.push_back(check_bernoulli_paths(max_n));
  out.push_back(check_bernoulli_polynomials(max_n));
  out.push_back(check_norlund(max_n));
  out.push_back(check_hypergeometric(max_n));
  out.push_back(catalan_invariance(max_n));
  out.push_back(hermite_invariance(std::min(max_n, 8)));
  out.push_back(linear_recurrence_check(PartSet({1, 2}), std::max(max_n, 2)));
  out.push_back(linear_recurrence_check(PartSet({1, 2, 3}), std::max(max_n, 3)));
  out.push_back(check_registry_duals(max_n));
  return out;
}

std::vector<CheckResult> verify_iterated(int max_n) {
  if (max_n < 1) throw RangeError("verify_iterated: max_n must be positive");
  std::vector<CheckResult> out;
  out.push_back(check_shape_counts(max_n));
  out.push_back(check_iterated_vs_series(max_n));
  out.push_back(check_iterated_two_leaves(max_n));
  out.push_back(check_triple_geometric(max_n));
  return out;
}

std::vector<CheckResult> verify_suite(std::string_view suite, int max_n) {
  if (suite == "compsum") return verify_compsum(max_n);
  if (suite == "pitree") return verify_pitree(max_n);
  if (suite == "sequences") return verify_sequences(max_n);
  if (suite == "iterated") return verify_iterated(max_n);
  if (suite == "all") {
    std::vector<CheckResult> out;
    append(out, verify_compsum(max_n));
    append(out, verify_pitree(max_n));
    append(out, verify_sequences(max_n));
    append(out, verify_iterated(max_n));
    return out;
  }
  throw RangeError("verify_suite: unknown suite '" + std::string(suite) + "'");
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"compsum", "pitree", "sequences", "iterated",
                                              "all"};
  return names;
}

}  // namespace compsum
