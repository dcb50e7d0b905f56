#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hooklab {

/// Rooted plane binary tree shape. Nodes are stored in preorder, so the root
/// is node 0 and every child index is larger than its parent's.
class BinaryTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    friend bool operator==(const Node&, const Node&) = default;
  };

  BinaryTree() = default;  // the empty tree
  explicit BinaryTree(std::vector<Node> preorder);

  /// New root with the given left and right subtrees (either may be empty).
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  /// Parent index per node, -1 for the root.
  std::vector<int> parents() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  std::vector<Node> nodes_;
};

std::uint64_t catalan(std::size_t n);

/// All Catalan(n) shapes of size n: left subtree size ascending, then the
/// left shapes in their own order, then the right shapes.
std::vector<BinaryTree> enumerate_binary(int n);

}  // namespace hooklab

template <>
struct std::hash<hooklab::BinaryTree> {
  std::size_t operator()(const hooklab::BinaryTree& t) const noexcept;
};
