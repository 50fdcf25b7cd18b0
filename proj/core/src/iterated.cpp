#include "compsum/iterated.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "compsum/compositions.hpp"
#include "compsum/errors.hpp"

namespace compsum {

ParenShape::ParenShape(std::vector<Node> nodes, int root)
    : nodes_(std::move(nodes)), root_(root), leaves_(0) {
  if (root_ < 0 || root_ >= node_count()) throw RangeError("ParenShape: bad root index");
  for (const Node& nd : nodes_) {
    const bool is_leaf = nd.label > 0;
    if (is_leaf != (nd.left < 0 && nd.right < 0))
      throw RangeError("ParenShape: every node is either a labeled leaf or has two children");
    if (is_leaf) ++leaves_;
  }
}

namespace {

std::string shape_str(const ParenShape& s, int v) {
  const auto& nd = s.node(v);
  if (nd.label > 0) return std::to_string(nd.label);
  return "(" + shape_str(s, nd.left) + " o " + shape_str(s, nd.right) + ")";
}

// Builds every shape over leaves lo..hi into fresh arenas.
std::vector<std::pair<std::vector<ParenShape::Node>, int>> build_shapes(int lo, int hi) {
  std::vector<std::pair<std::vector<ParenShape::Node>, int>> out;
  if (lo == hi) {
    out.push_back({{ParenShape::Node{-1, -1, lo}}, 0});
    return out;
  }
  for (int split = lo; split < hi; ++split)
    for (const auto& left : build_shapes(lo, split))
      for (const auto& right : build_shapes(split + 1, hi)) {
        std::vector<ParenShape::Node> nodes = left.first;
        const int offset = static_cast<int>(nodes.size());
        for (ParenShape::Node nd : right.first) {
          if (nd.left >= 0) nd.left += offset;
          if (nd.right >= 0) nd.right += offset;
          nodes.push_back(nd);
        }
        nodes.push_back(ParenShape::Node{left.second, offset + right.second, 0});
        out.push_back({std::move(nodes), static_cast<int>(nodes.size()) - 1});
      }
  return out;
}

}  // namespace

std::string ParenShape::str() const { return shape_str(*this, root_); }

std::vector<ParenShape> enumerate_shapes(int n) {
  if (n < 2 || n > kMaxShapeLeaves)
    throw SizeGuardError("enumerate_shapes: n outside [2, 8]", kMaxShapeLeaves);
  std::vector<ParenShape> shapes;
  for (auto& [nodes, root] : build_shapes(1, n)) shapes.emplace_back(std::move(nodes), root);
  return shapes;
}

namespace {

void walk_plan(const ParenShape& s, int v, int parent_var, bool per_part, int& next_var,
               SummationPlan& plan) {
  const auto& nd = s.node(v);
  if (nd.label > 0) {
    plan.leaves.push_back({nd.label, parent_var, per_part});
    return;
  }
  const int var = next_var++;
  plan.constraints.push_back({var, parent_var, per_part});
  walk_plan(s, nd.left, var, false, next_var, plan);
  walk_plan(s, nd.right, var, true, next_var, plan);
}

std::string selector(int var, bool per_part) {
  std::string v = "pi" + std::to_string(var);
  return per_part ? v : "|" + v + "|";
}

}  // namespace

SummationPlan plan_from_shape(const ParenShape& shape) {
  SummationPlan plan;
  int next_var = 1;
  walk_plan(shape, shape.root(), 0, true, next_var, plan);
  std::sort(plan.leaves.begin(), plan.leaves.end(),
            [](const PlanLeaf& a, const PlanLeaf& b) { return a.func < b.func; });
  return plan;
}

std::string SummationPlan::str() const {
  std::ostringstream os;
  for (const auto& c : constraints) {
    if (c.var > 1) os << "; ";
    os << "pi" << c.var << " |= ";
    if (c.parent == 0) os << "n";
    else os << selector(c.parent, c.per_part);
  }
  os << "; terms";
  for (const auto& leaf : leaves) os << " f" << leaf.func << "[" << selector(leaf.var, leaf.per_part) << "]";
  return os.str();
}

namespace {

void check_iterated_args(const std::vector<SeriesQ>& fs, const ParenShape& shape, int order,
                         const char* who) {
  if (order < 0) throw RangeError(std::string(who) + ": negative order");
  if (static_cast<int>(fs.size()) != shape.leaf_count())
    throw RangeError(std::string(who) + ": function count does not match shape leaves");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].order() < order)
      throw RangeError(std::string(who) + ": a series has order below the requested one");
    if (i > 0 && !fs[i][0].is_zero())
      throw ConstantTermError(std::string(who) + ": inner function f" + std::to_string(i + 1) +
                              " has nonzero constant term");
  }
}

}  // namespace

std::vector<Rational> evaluate_iterated(const std::vector<SeriesQ>& fs, const ParenShape& shape,
                                        int order) {
  check_iterated_args(fs, shape, order, "evaluate_iterated");
  if (static_cast<int>(fs.size()) > kMaxIteratedFunctions)
    throw SizeGuardError("evaluate_iterated: more than 5 functions", kMaxIteratedFunctions);
  if (order > kMaxIteratedOrder)
    throw SizeGuardError("evaluate_iterated: order above the chain-sum guard", kMaxIteratedOrder);

  std::vector<std::vector<std::optional<Rational>>> memo(
      static_cast<std::size_t>(shape.node_count()),
      std::vector<std::optional<Rational>>(static_cast<std::size_t>(order) + 1));

  std::function<Rational(int, int)> coeff = [&](int v, int t) -> Rational {
    const auto& nd = shape.node(v);
    if (nd.label > 0) return fs[static_cast<std::size_t>(nd.label) - 1][t];
    auto& slot = memo[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
    if (slot) return *slot;
    Rational acc(0);
    if (t == 0) {
      acc = coeff(nd.left, 0);
    } else {
      for (const auto& pi : enumerate(t)) {
        Rational term = coeff(nd.left, pi.length());
        for (int k : pi.parts()) term *= coeff(nd.right, k);
        acc += term;
      }
    }
    slot = acc;
    return acc;
  };

  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int t = 0; t <= order; ++t) out[static_cast<std::size_t>(t)] = coeff(shape.root(), t);
  return out;
}

namespace {

SeriesQ compose_subtree(const std::vector<SeriesQ>& fs, const ParenShape& shape, int v, int order) {
  const auto& nd = shape.node(v);
  if (nd.label > 0) return fs[static_cast<std::size_t>(nd.label) - 1].truncated(order);
  return compose(compose_subtree(fs, shape, nd.left, order),
                 compose_subtree(fs, shape, nd.right, order));
}

}  // namespace

std::vector<Rational> iterated_series(const std::vector<SeriesQ>& fs, const ParenShape& shape,
                                      int order) {
  check_iterated_args(fs, shape, order, "iterated_series");
  return compose_subtree(fs, shape, shape.root(), order).coeffs();
}

std::string shape_to_dot(const ParenShape& shape) {
  std::ostringstream os;
  os << "digraph shape {\n  node [shape=circle];\n";
  // Variable numbering repeats the plan's preorder walk.
  int next_var = 1;
  std::function<std::string(int)> emit = [&](int v) -> std::string {
    const auto& nd = shape.node(v);
    if (nd.label > 0) {
      std::string id = "f" + std::to_string(nd.label);
      os << "  \"" << id << "\" [shape=box, label=\"f" << nd.label << "\"];\n";
      return id;
    }
    const int var = next_var++;
    std::string id = "v" + std::to_string(var);
    os << "  \"" << id << "\" [label=\"pi" << var << "\"];\n";
    std::string left = emit(nd.left);
    os << "  \"" << id << "\" -> \"" << left << "\" [label=\"" << selector(var, false) << "\"];\n";
    std::string right = emit(nd.right);
    os << "  \"" << id << "\" -> \"" << right << "\" [label=\"" << selector(var, true) << "\"];\n";
    return id;
  };
  emit(shape.root());
  os << "}\n";
  return os.str();
}

}  // namespace compsum
