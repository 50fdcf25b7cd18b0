#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "compsum/check.hpp"
#include "compsum/compsum.hpp"
#include "compsum/pitree.hpp"
#include "compsum/polynomial.hpp"
#include "compsum/rational.hpp"

namespace compsum {

/// Triangle of Stirling numbers of the second kind, rows 0..max_n.
class Stirling2Table {
 public:
  explicit Stirling2Table(int max_n);
  const Integer& at(int n, int k) const;
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// One-shot {n brace k}; throws RangeError unless 0 <= k <= n.
Integer stirling2(int n, int k);

/// B_0..B_N from z/(e^z - 1).
std::vector<Rational> bernoulli_numbers(int max_n);

/// The two composition-sum representations of B_n:
///   inverse_factorial:  B_n = n! sum_pi (-1)^|pi| / (pi+1)!
///   stirling_weighted:  B_n = n! sum_pi (-1)^|pi| / ((|pi|+1) pi!)
enum class BernoulliForm { kInverseFactorial, kStirlingWeighted };
std::vector<Rational> bernoulli_via_compositions(int max_n, BernoulliForm form);

/// Stirling closed form B_n = sum_p (-1)^p {n+p,p}/binom(n+p,p) binom(n+1,p+1).
std::vector<Rational> bernoulli_via_stirling(int max_n);

/// B_n(x) from e^{zx} z/(e^z-1) (series path) and from tree row sums on
/// g_n = (-1)^(n+1)/(n+1)! [x^(n+1) - (x-1)^(n+1)] (tree path).
std::vector<Polynomial> bernoulli_polynomials(int max_n);
std::vector<Polynomial> bernoulli_polynomials_tree(int max_n);
InputSequence<Polynomial> bernoulli_poly_input();

/// Checks B_n(x) = sum_{p=1}^n binom(n+1,p+1) (-1)^p B_n^(-p)(-p x) as an
/// exact polynomial identity.
CheckResult bernoulli_poly_expansion(int n);

/// Norlund numbers B_n^(order) from (z/(e^z-1))^order; any integer order.
/// Negative orders go through powers of (e^z-1)/z, never a reciprocal of a
/// z-divisible series.
std::vector<Rational> norlund_numbers(int max_n, long order);
std::vector<Polynomial> norlund_polynomials(int max_n, long order);

/// g_n = -order!/(order+n)! {n+order, order}; comp sums give B_n^(order)/n!.
InputSequence<Rational> norlund_input(long order);

/// B_n^(q) = binom(n+q,q-1) sum_p (-1)^p {n+p,p}/binom(n+p,p) (n+1)/(p+q) binom(n,p).
std::vector<Rational> norlund_via_stirling(int max_n, long q);

/// Hypergeometric Bernoulli numbers, a, b > 0: n! [z^n] 1/1F1(a; a+b; z).
std::vector<Rational> hypergeometric_bernoulli(int max_n, const Rational& a, const Rational& b);

/// g_n = -(1/n!) (a)_n/(a+b)_n; comp sums give the same numbers over n!.
InputSequence<Rational> hypergeometric_input(const Rational& a, const Rational& b);

/// C_0..C_N by the convolution recurrence C_n = sum C_k C_{n-1-k}.
std::vector<Integer> catalan(int max_n);

/// g_n = C_{n-1}, the invariant input: its composition sums are C_n.
InputSequence<Rational> catalan_input();

/// Verifies both Catalan composition identities (direct and inverse),
/// series paths for n <= max_n and brute force for n <= min(max_n, 12).
CheckResult catalan_invariance(int max_n);

/// H_n(x) by H_n = 2x H_{n-1} - 2(n-1) H_{n-2}, and the rationalized
/// G_n(x) = i^n H_n(ix) by G_n = -2x G_{n-1} + 2(n-1) G_{n-2}.
std::vector<Polynomial> hermite_polynomials(int max_n);
std::vector<Polynomial> hermite_g_polynomials(int max_n);

/// g_n = -G_n(x)/n!; comp sums give H_n(x)/n!. Entirely rational.
InputSequence<Polynomial> hermite_input();

CheckResult hermite_invariance(int max_n);

/// x_0..x_N with x_n = sum_{j in J} x_{n-j}: the counts of compositions
/// into parts from J.
std::vector<Integer> linear_recurrence(const PartSet& parts, int max_n);

/// Recurrence vs generating-function path vs direct enumeration
/// (enumeration capped at n <= min(max_n, 16)).
CheckResult linear_recurrence_check(const PartSet& parts, int max_n);

/// Registry binding each named sequence to its two exact realizations.
/// Both producers return canonical value strings for n = 0..N, so any two
/// paths can be compared byte for byte.
using ParamMap = std::map<std::string, std::string>;

struct SequenceRecipe {
  std::string name;
  std::string summary;
  std::string params_help;
  std::function<std::vector<std::string>(int, const ParamMap&)> closed_form;
  std::function<std::vector<std::string>(int, const ParamMap&)> via_compositions;
};

const std::vector<SequenceRecipe>& sequence_registry();
const SequenceRecipe* find_recipe(std::string_view name);

}  // namespace compsum
