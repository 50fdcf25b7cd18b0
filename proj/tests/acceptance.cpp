// Acceptance runner. One line per criterion; exit code is the number of
// failed criteria. Every comparison is exact rational or polynomial
// equality. The only tolerances anywhere are the two wall-clock budgets
// pinned right below.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "compsum/compositions.hpp"
#include "compsum/compsum.hpp"
#include "compsum/iterated.hpp"
#include "compsum/pitree.hpp"
#include "compsum/polynomial.hpp"
#include "compsum/rational.hpp"
#include "compsum/sequences.hpp"
#include "compsum/series.hpp"

#include "golden_cases.h"

namespace {

constexpr std::chrono::milliseconds kWoonBudget{1000};      // criterion 1
constexpr std::chrono::milliseconds kBatteryBudget{10000};  // criterion 2

using compsum::InputSequence;
using compsum::Integer;
using compsum::Polynomial;
using compsum::Rational;
using compsum::WeightSequence;
using VecQ = std::vector<Rational>;

int g_failures = 0;

void report(int idx, const std::string& label, bool ok, const std::string& note = "") {
  if (!ok) ++g_failures;
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "pass" : "FAIL", idx, label.c_str(),
              note.empty() ? "" : "  ", note.c_str());
}

std::string ms_note(std::chrono::steady_clock::duration took, std::chrono::milliseconds budget) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(took).count();
  std::ostringstream os;
  os << "[" << ms << " ms < " << budget.count() << " ms]";
  return os.str();
}

bool eq_range(const VecQ& a, const VecQ& b, int lo, int hi) {
  if (static_cast<int>(a.size()) <= hi || static_cast<int>(b.size()) <= hi) return false;
  for (int n = lo; n <= hi; ++n)
    if (a[static_cast<std::size_t>(n)] != b[static_cast<std::size_t>(n)]) return false;
  return true;
}

std::vector<InputSequence<Rational>> battery_inputs() {
  return {
      compsum::woon_input(),
      compsum::catalan_input(),
      compsum::indicator_input(compsum::PartSet({1, 2})),
      InputSequence<Rational>{"mixed", [](int n) {
                                Rational v(n + 1, 2 * n + 1);
                                return n % 2 == 0 ? -v : v;
                              }},
  };
}

std::vector<WeightSequence<Rational>> battery_weights() {
  return {compsum::geometric_weights(), compsum::log1p_weights(),
          compsum::exp_minus_one_weights(), compsum::negative_binomial_weights(2)};
}

// ---- criteria ----

void criterion_woon() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto woon = compsum::woon_input();
  bool ok = true;

  // Pinned first rows, summed over the actual tree nodes.
  const VecQ first{Rational(1, 2), Rational(1, 12), Rational(0), Rational(-1, 720)};
  for (int n = 1; n <= 4; ++n) {
    Rational sum;
    compsum::for_each_row_node(woon, n, [&](const compsum::PiNode<Rational>& nd) { sum += nd.value; });
    ok = ok && sum == first[static_cast<std::size_t>(n) - 1];
  }

  // Recurrence row sums against (-1)^n B_n / n! up to 12, and against the
  // tree rows themselves.
  const VecQ rows = compsum::row_sums(woon, 12);
  const VecQ bern = compsum::bernoulli_numbers(12);
  for (int n = 0; n <= 12; ++n) {
    Rational want = bern[static_cast<std::size_t>(n)] / Rational(compsum::factorial(static_cast<unsigned long>(n)));
    if (n % 2 == 1) want = -want;
    ok = ok && rows[static_cast<std::size_t>(n)] == want;
  }
  for (int n = 1; n <= 12; ++n) {
    Rational sum;
    compsum::for_each_row_node(woon, n, [&](const compsum::PiNode<Rational>& nd) { sum += nd.value; });
    ok = ok && sum == rows[static_cast<std::size_t>(n)];
  }

  const auto took = std::chrono::steady_clock::now() - t0;
  ok = ok && took < kWoonBudget;
  report(1, "Woon row sums are 1/2, 1/12, 0, -1/720 and (-1)^n B_n/n! up to n=12", ok,
         ms_note(took, kWoonBudget));
}

void criterion_main_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& g : battery_inputs())
    for (const auto& f : battery_weights()) {
      const VecQ series = compsum::weighted_comp_sum(f, g, 14);
      const VecQ brute = compsum::weighted_comp_sum_brute(f, g, 14);
      const VecQ conv = compsum::weighted_convolution(f, g, 14);
      ok = ok && eq_range(series, brute, 0, 14) && eq_range(series, conv, 0, 14);
    }
  const auto took = std::chrono::steady_clock::now() - t0;
  ok = ok && took < kBatteryBudget;
  report(2, "brute == series == convolution on the 4x4 battery up to n=14", ok,
         ms_note(took, kBatteryBudget));
}

void criterion_inversion() {
  bool ok = true;
  for (const auto& g : battery_inputs()) {
    const VecQ x = compsum::comp_sum(g, 12);
    const InputSequence<Rational> as_input{
        g.name + "_sums", [x](int n) { return x[static_cast<std::size_t>(n)]; }};
    const VecQ back = compsum::comp_sum_inverse(as_input, 12);
    for (int n = 1; n <= 12; ++n)
      ok = ok && back[static_cast<std::size_t>(n)] == g.gen(n);

    // The other direction: treat g as sums, invert, then sum again.
    const VecQ inv = compsum::comp_sum_inverse(g, 12);
    const InputSequence<Rational> inv_input{
        g.name + "_inv", [inv](int n) { return inv[static_cast<std::size_t>(n)]; }};
    const VecQ forward = compsum::comp_sum(inv_input, 12);
    for (int n = 1; n <= 12; ++n)
      ok = ok && forward[static_cast<std::size_t>(n)] == g.gen(n);
  }
  report(3, "comp_sum and comp_sum_inverse invert each other up to N=12", ok);
}

void criterion_catalan() {
  bool ok = compsum::catalan_invariance(12).ok;
  const auto c = compsum::catalan(6);
  const long want[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) ok = ok && c[static_cast<std::size_t>(n)] == Integer(want[n]);
  report(4, "Catalan composition identities hold up to n=12; C_0..C_6 pinned", ok);
}

void criterion_hermite() {
  bool ok = compsum::hermite_invariance(8).ok;
  const auto sums = compsum::comp_sum(compsum::hermite_input(), 8);
  const auto h = compsum::hermite_polynomials(8);
  for (int n = 1; n <= 8; ++n) {
    const Rational inv_fact =
        Rational(1) / Rational(compsum::factorial(static_cast<unsigned long>(n)));
    ok = ok && sums[static_cast<std::size_t>(n)] == h[static_cast<std::size_t>(n)] * inv_fact;
  }
  report(5, "comp_sum of the Hermite input equals H_n(x)/n! up to n=8", ok);
}

void criterion_bernoulli_paths() {
  bool ok = true;
  const VecQ gf = compsum::bernoulli_numbers(12);
  const VecQ inv_fact =
      compsum::bernoulli_via_compositions(12, compsum::BernoulliForm::kInverseFactorial);
  const VecQ stirling_w =
      compsum::bernoulli_via_compositions(12, compsum::BernoulliForm::kStirlingWeighted);
  const VecQ closed = compsum::bernoulli_via_stirling(12);
  const VecQ rows = compsum::row_sums(compsum::woon_input(), 12);
  VecQ from_rows(13);
  for (int n = 0; n <= 12; ++n) {
    Rational v = rows[static_cast<std::size_t>(n)] *
                 Rational(compsum::factorial(static_cast<unsigned long>(n)));
    from_rows[static_cast<std::size_t>(n)] = n % 2 == 1 ? -v : v;
  }
  ok = ok && eq_range(gf, inv_fact, 0, 12) && eq_range(gf, stirling_w, 0, 12) &&
       eq_range(gf, closed, 0, 12) && eq_range(gf, from_rows, 0, 12);
  ok = ok && gf[12] == Rational(-691, 2730);
  report(6, "five Bernoulli paths agree up to n=12; B_12 = -691/2730", ok);
}

void criterion_poly_expansion() {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) ok = ok && compsum::bernoulli_poly_expansion(n).ok;
  report(7, "Bernoulli polynomial expansion holds exactly up to n=8", ok);
}

void criterion_norlund() {
  bool ok = true;
  for (long q = 1; q <= 4; ++q) {
    const VecQ gf = compsum::norlund_numbers(10, q);
    const VecQ stirling = compsum::norlund_via_stirling(10, q);
    ok = ok && eq_range(gf, stirling, 0, 10);
    const VecQ sums = compsum::comp_sum(compsum::norlund_input(q), 10);
    for (int n = 1; n <= 10; ++n)
      ok = ok && gf[static_cast<std::size_t>(n)] ==
                     sums[static_cast<std::size_t>(n)] *
                         Rational(compsum::factorial(static_cast<unsigned long>(n)));
  }
  ok = ok && compsum::norlund_numbers(2, 2)[2] == Rational(5, 6);
  report(8, "Norlund gf, input, and Stirling paths agree for q<=4, n<=10; B_2^(2) = 5/6", ok);
}

void criterion_hypergeometric() {
  const VecQ hyper = compsum::hypergeometric_bernoulli(12, Rational(1), Rational(1));
  const VecQ classical = compsum::bernoulli_numbers(12);
  report(9, "hypergeometric Bernoulli at a=b=1 is classical up to n=12",
         eq_range(hyper, classical, 0, 12));
}

void criterion_restricted() {
  const compsum::PartSet parts({1, 2});
  const auto counts = compsum::linear_recurrence(parts, 20);
  bool ok = counts[5] == Integer(8);

  for (int n = 1; n <= 16; ++n) {
    long seen = 0;
    for (const auto& c : compsum::enumerate_restricted(n, parts)) {
      (void)c;
      ++seen;
    }
    ok = ok && counts[static_cast<std::size_t>(n)] == Integer(seen);
    ok = ok && compsum::count_restricted(n, parts) == counts[static_cast<std::size_t>(n)];
  }

  // (z + z^2) / (1 - z - z^2), coefficient by coefficient.
  const compsum::SeriesQ z = compsum::identity_series(20);
  const compsum::SeriesQ num = z + z * z;
  const compsum::SeriesQ den =
      compsum::SeriesQ::constant(Rational(1), 20) - z - z * z;
  const compsum::SeriesQ gf = num * compsum::reciprocal(den);
  for (int n = 1; n <= 20; ++n)
    ok = ok && gf[n] == Rational(counts[static_cast<std::size_t>(n)]);
  report(10, "restricted {1,2}: F_5 = 8, enumeration to n=16, gf (z+z^2)/(1-z-z^2) to n=20", ok);
}

void criterion_digit_sum() {
  bool ok = true;
  const auto log_w = compsum::log1p_weights();
  for (const auto& f : {log_w, compsum::geometric_weights(), compsum::negative_binomial_weights(2)})
    for (int n = 1; n <= 16; ++n) {
      const Rational brute = compsum::digit_sum_brute(f, n);
      ok = ok && brute == compsum::digit_sum_series(f, n);
      ok = ok && brute == compsum::digit_sum_binomial(f, n);
    }
  for (int n = 1; n <= 16; ++n) ok = ok && compsum::digit_sum_brute(log_w, n) == Rational(1, n);
  report(11, "digit-sum theorem: three paths agree up to n=16; log case is 1/n", ok);
}

void criterion_moments() {
  bool ok = true;

  // Gaussian-style moments 1, 0, 1, 0, 3, 0, 15, ... up to N=10.
  VecQ normal(11, Rational(0));
  normal[0] = Rational(1);
  for (int n = 2; n <= 10; n += 2)
    normal[static_cast<std::size_t>(n)] =
        normal[static_cast<std::size_t>(n) - 2] * Rational(n - 1);

  VecQ skew(11);
  skew[0] = Rational(1);
  for (int n = 1; n <= 10; ++n) skew[static_cast<std::size_t>(n)] = Rational(n * n + 1, n + 3);

  for (const VecQ& mu : {normal, skew}) {
    const VecQ kappa = compsum::moments_to_cumulants(mu);
    ok = ok && kappa == compsum::moments_to_cumulants_brute(mu);
    ok = ok && compsum::cumulants_to_moments(kappa) == mu;
    ok = ok && compsum::cumulants_to_moments_brute(kappa) == mu;
    ok = ok && kappa[2] == mu[2] - mu[1] * mu[1];
  }

  // For the centered Gaussian-style list the only surviving cumulant is
  // kappa_2 = 1.
  const VecQ kn = compsum::moments_to_cumulants(normal);
  for (int n = 0; n <= 10; ++n)
    ok = ok && kn[static_cast<std::size_t>(n)] == (n == 2 ? Rational(1) : Rational(0));

  report(12, "moments <-> cumulants round trip at N=10; kappa_2 = mu_2 - mu_1^2", ok);
}

void criterion_iterated() {
  bool ok = true;
  const auto cats = compsum::catalan(7);
  for (int n = 2; n <= 8; ++n)
    ok = ok && Integer(static_cast<long>(compsum::enumerate_shapes(n).size())) ==
                   cats[static_cast<std::size_t>(n) - 1];

  const std::vector<compsum::SeriesQ> fs{
      compsum::log1p_series(8), compsum::geometric_series(8), compsum::exp_minus_one_series(8),
      compsum::catalan_shifted_series(8)};
  const auto shapes = compsum::enumerate_shapes(4);
  ok = ok && shapes.size() == 5;
  const VecQ first = compsum::evaluate_iterated(fs, shapes[0], 8);
  for (const auto& shape : shapes) {
    ok = ok && compsum::evaluate_iterated(fs, shape, 8) == first;
    ok = ok && compsum::iterated_series(fs, shape, 8) == first;
  }
  report(13, "all 5 shapes of 4 functions agree with the nested oracle at N=8", ok);
}

int run_case(const std::string& bin, const std::string& args, const std::string& out_file) {
  const std::string cmd = "\"" + bin + "\" " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

bool slurp(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return false;
  std::ostringstream os;
  os << in.rdbuf();
  out = os.str();
  return true;
}

void criterion_determinism() {
  const char* bin = std::getenv("CLI_BIN");
  const char* dir = std::getenv("GOLDEN_DIR");
  if (!bin || !dir) {
    report(14, "CLI goldens byte-stable across runs", false, "(CLI_BIN / GOLDEN_DIR not set)");
    return;
  }
  bool ok = true;
  for (const auto& c : cli_golden::kCases) {
    std::string want, got_a, got_b;
    ok = ok && slurp(std::string(dir) + "/" + c.file, want);
    ok = ok && run_case(bin, c.args, "acceptance_a.tmp") == 0;
    ok = ok && run_case(bin, c.args, "acceptance_b.tmp") == 0;
    ok = ok && slurp("acceptance_a.tmp", got_a) && slurp("acceptance_b.tmp", got_b);
    ok = ok && got_a == want && got_b == want;
    if (!ok) {
      report(14, "CLI goldens byte-stable across runs", false,
             std::string("(first mismatch: ") + c.file + ")");
      std::remove("acceptance_a.tmp");
      std::remove("acceptance_b.tmp");
      return;
    }
  }
  std::remove("acceptance_a.tmp");
  std::remove("acceptance_b.tmp");
  report(14, "CLI goldens byte-stable across runs", ok);
}

}  // namespace

int main() {
  criterion_woon();
  criterion_main_identity();
  criterion_inversion();
  criterion_catalan();
  criterion_hermite();
  criterion_bernoulli_paths();
  criterion_poly_expansion();
  criterion_norlund();
  criterion_hypergeometric();
  criterion_restricted();
  criterion_digit_sum();
  criterion_moments();
  criterion_iterated();
  criterion_determinism();

  if (g_failures == 0) std::printf("all 14 criteria passed\n");
  else std::printf("%d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
