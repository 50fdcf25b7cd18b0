#pragma once

#include <string>
#include <vector>

#include "compsum/series.hpp"

namespace compsum {

inline constexpr int kMaxShapeLeaves = 8;
inline constexpr int kMaxIteratedFunctions = 5;
inline constexpr int kMaxIteratedOrder = 10;

/// A parenthesization of f1 o f2 o ... o fn: a full binary tree whose leaves
/// carry the function slots 1..n left to right. Each internal node composes
/// its left subtree (outer function) with its right subtree (inner).
class ParenShape {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int label = 0;  // > 0 marks a leaf carrying that function slot
  };

  ParenShape(std::vector<Node> nodes, int root);

  int root() const { return root_; }
  const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int leaf_count() const { return leaves_; }

  /// "((1 o (2 o 3)) o 4)"
  std::string str() const;

 private:
  std::vector<Node> nodes_;
  int root_;
  int leaves_;
};

/// All parenthesization shapes for n functions, ordered by left-subtree leaf
/// count, recursively. Count is the (n-1)-th Catalan number.
std::vector<ParenShape> enumerate_shapes(int n);

/// One summation variable pi_i per internal node, numbered in preorder.
/// parent == 0 marks the root constraint pi_1 |= n; otherwise the node
/// composes either a part of the parent composition (per_part, right child)
/// or its part count (left child).
struct PlanConstraint {
  int var;
  int parent;
  bool per_part;
};

/// The subscript each function slot receives: pi_var itself (per_part,
/// right child) or |pi_var| (left child).
struct PlanLeaf {
  int func;
  int var;
  bool per_part;
};

struct SummationPlan {
  std::vector<PlanConstraint> constraints;
  std::vector<PlanLeaf> leaves;

  /// "pi1 |= n; pi2 |= |pi1|; terms f1[|pi2|] f2[pi2] f3[pi1]"
  std::string str() const;
};

SummationPlan plan_from_shape(const ParenShape& shape);

/// Coefficients 0..order of the iterated composition, evaluated literally as
/// the nested sums over composition chains the plan describes, memoized per
/// (node, target). fs[0] is the outermost function; all others need zero
/// constant term.
std::vector<Rational> evaluate_iterated(const std::vector<SeriesQ>& fs, const ParenShape& shape,
                                        int order);

/// The same coefficients by nested series composition; the oracle the plan
/// evaluation is checked against.
std::vector<Rational> iterated_series(const std::vector<SeriesQ>& fs, const ParenShape& shape,
                                      int order);

/// DOT rendering with each edge labeled by the selector the child consumes
/// (pi_i for right children, |pi_i| for left children).
std::string shape_to_dot(const ParenShape& shape);

}  // namespace compsum
