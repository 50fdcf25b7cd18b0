#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "compsum/compositions.hpp"
#include "compsum/errors.hpp"
#include "compsum/series.hpp"

namespace compsum {

inline constexpr int kMaxTreeRowN = 24;
inline constexpr int kMaxDotDepth = 8;

/// The g_1, g_2, ... fed into a PI tree (or a composition sum). gen must be
/// defined for every n >= 1 a caller asks for.
template <typename R = Rational>
struct InputSequence {
  std::string name;
  std::function<R(int)> gen;
};

template <typename R = Rational>
struct PiNode {
  Composition multi_index;
  R value;
};

/// Mask of the rank-th node of row n, counting nodes left to right. Row
/// order is depth first with the P child before the I child, so row 3 reads
/// (1,1,1), (2,1), (1,2), (3).
std::uint64_t tree_row_mask(int n, std::uint64_t rank);

/// Visits row n left to right without materializing it. fn receives each
/// node as const PiNode<R>&.
template <typename R, typename Fn>
void for_each_row_node(const InputSequence<R>& input, int n, Fn&& fn) {
  if (n < 1 || n > kMaxTreeRowN)
    throw SizeGuardError("for_each_row_node: n outside [1, 24]", kMaxTreeRowN);
  const std::uint64_t count = std::uint64_t(1) << (n - 1);
  for (std::uint64_t r = 0; r < count; ++r) {
    Composition c = from_mask(n, tree_row_mask(n, r));
    R value = RingTraits<R>::one();
    for (int k : c.parts()) value = value * input.gen(k);
    const PiNode<R> node{std::move(c), std::move(value)};
    fn(node);
  }
}

template <typename R>
std::vector<PiNode<R>> build_row(const InputSequence<R>& input, int n) {
  std::vector<PiNode<R>> row;
  if (n >= 1 && n <= kMaxTreeRowN) row.reserve(std::size_t(1) << (n - 1));
  for_each_row_node(input, n, [&](const PiNode<R>& node) { row.push_back(node); });
  return row;
}

/// Row sums x_0..x_N by the recurrence x_n = sum_{j=1..n} g_j x_{n-j},
/// x_0 = 1. Quadratic in N, so no size guard is needed.
template <typename R>
std::vector<R> row_sums(const InputSequence<R>& input, int max_n) {
  if (max_n < 0) throw RangeError("row_sums: negative n");
  std::vector<R> x;
  x.reserve(static_cast<std::size_t>(max_n) + 1);
  x.push_back(RingTraits<R>::one());
  std::vector<R> g(1, RingTraits<R>::zero());
  for (int n = 1; n <= max_n; ++n) {
    g.push_back(input.gen(n));
    R s = RingTraits<R>::zero();
    for (int j = 1; j <= n; ++j) s = s + g[j] * x[n - j];
    x.push_back(std::move(s));
  }
  return x;
}

template <typename R>
R row_sum(const InputSequence<R>& input, int n) {
  return row_sums(input, n).back();
}

enum class DotLabel { kValue, kMultiIndex, kBoth };

namespace detail {

inline std::string tuple_str(const Composition& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) os << ',';
    os << c.parts()[i];
  }
  os << ')';
  return os.str();
}

template <typename R>
std::string dot_label(const Composition& c, const R& value, DotLabel kind) {
  switch (kind) {
    case DotLabel::kValue: return RingTraits<R>::str(value);
    case DotLabel::kMultiIndex: return tuple_str(c);
    default: return tuple_str(c) + " = " + RingTraits<R>::str(value);
  }
}

template <typename R>
void dot_node(const InputSequence<R>& input, const Composition& c, const std::string& id,
              int row, int depth, DotLabel kind, std::ostringstream& out) {
  R value = RingTraits<R>::one();
  for (int k : c.parts()) value = value * input.gen(k);
  out << "  \"" << id << "\" [label=\"" << dot_label(c, value, kind) << "\"];\n";
  if (row >= depth) return;

  std::vector<int> left = c.parts();
  left.insert(left.begin(), 1);
  out << "  \"" << id << "\" -> \"" << id << "P\" [label=\"P\"];\n";
  dot_node(input, Composition(std::move(left)), id + "P", row + 1, depth, kind, out);

  std::vector<int> right = c.parts();
  ++right.front();
  out << "  \"" << id << "\" -> \"" << id << "I\" [label=\"I\"];\n";
  dot_node(input, Composition(std::move(right)), id + "I", row + 1, depth, kind, out);
}

}  // namespace detail

/// Graphviz source for the tree down to the given row. Node ids are the P/I
/// paths from the root, which keeps diffs stable across runs.
template <typename R>
std::string export_dot(const InputSequence<R>& input, int depth,
                       DotLabel kind = DotLabel::kBoth) {
  if (depth < 1 || depth > kMaxDotDepth)
    throw SizeGuardError("export_dot: depth outside [1, 8]", kMaxDotDepth);
  std::ostringstream out;
  out << "digraph pi_tree {\n  node [shape=box];\n";
  detail::dot_node(input, Composition({1}), "R", 1, depth, kind, out);
  out << "}\n";
  return out.str();
}

/// Woon's Bernoulli tree input g_n = (-1)^(n+1)/(n+1)!, whose row sums are
/// (-1)^n B_n/n!.
InputSequence<Rational> woon_input();

/// g_n = 1 when n is an allowed part, else 0; row sums count restricted
/// compositions.
InputSequence<Rational> indicator_input(const PartSet& parts);

/// Finite table g_1..g_m; asking past the table throws RangeError.
InputSequence<Rational> table_input(std::string name, std::vector<Rational> values);

}  // namespace compsum
