#include "hooklab/binary_tree.hpp"

#include <stdexcept>
#include <string>

namespace hooklab {

BinaryTree::BinaryTree(std::vector<Node> preorder) : nodes_(std::move(preorder)) {
  // Check that the child links describe exactly the preorder layout.
  const int n = static_cast<int>(nodes_.size());
  int next = 0;
  auto visit = [&](auto&& self, int v) -> void {
    if (v != next) throw std::invalid_argument("binary tree nodes are not in preorder");
    ++next;
    for (int c : {nodes_[v].left, nodes_[v].right}) {
      if (c == -1) continue;
      if (c <= v || c >= n) throw std::invalid_argument("binary tree child index out of range");
      self(self, c);
    }
  };
  if (n > 0) visit(visit, 0);
  if (next != n) throw std::invalid_argument("binary tree has unreachable nodes");
}

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree t;
  t.nodes_.reserve(1 + left.size() + right.size());
  const int lsize = static_cast<int>(left.size());
  t.nodes_.push_back({left.empty() ? -1 : 1, right.empty() ? -1 : 1 + lsize});
  auto append = [&t](const BinaryTree& sub, int offset) {
    for (Node n : sub.nodes_) {
      if (n.left != -1) n.left += offset;
      if (n.right != -1) n.right += offset;
      t.nodes_.push_back(n);
    }
  };
  append(left, 1);
  append(right, 1 + lsize);
  return t;
}

std::vector<int> BinaryTree::parents() const {
  std::vector<int> p(nodes_.size(), -1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].left != -1) p[nodes_[i].left] = static_cast<int>(i);
    if (nodes_[i].right != -1) p[nodes_[i].right] = static_cast<int>(i);
  }
  return p;
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<BinaryTree> enumerate_binary(int n) {
  if (n < 0) throw std::invalid_argument("binary tree size must be non-negative");
  std::vector<std::vector<BinaryTree>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].emplace_back();
  for (int m = 1; m <= n; ++m) {
    auto& out = by_size[m];
    out.reserve(catalan(static_cast<std::size_t>(m)));
    for (int left = 0; left < m; ++left) {
      for (const auto& l : by_size[left]) {
        for (const auto& r : by_size[m - 1 - left]) out.push_back(BinaryTree::join(l, r));
      }
    }
  }
  return std::move(by_size[n]);
}

}  // namespace hooklab

std::size_t std::hash<hooklab::BinaryTree>::operator()(const hooklab::BinaryTree& t) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ULL; };
  for (const auto& n : t.nodes()) {
    mix(static_cast<std::size_t>(n.left + 1));
    mix(static_cast<std::size_t>(n.right + 1));
  }
  return h;
}
