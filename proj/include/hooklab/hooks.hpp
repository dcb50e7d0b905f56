#pragma once

#include <cstddef>
#include <vector>

#include "hooklab/binary_tree.hpp"
#include "hooklab/increasing_tree.hpp"

namespace hooklab {

/// Unlabelled rooted tree: parent[i] < i for i > 0, parent[0] == -1.
struct RootedShape {
  std::vector<int> parent;
  std::size_t size() const { return parent.size(); }
};

RootedShape shape_of(const IncreasingTree& t);
RootedShape shape_of(const BinaryTree& t);

/// Hook of every vertex: the vertex with its descendants. Vertices are named
/// by label for increasing trees and by preorder index for binary trees.
struct HookTable {
  std::vector<Label> vertices;                // ascending
  std::vector<std::vector<Label>> hook_sets;  // each ascending
  std::vector<std::size_t> hook_sizes;

  std::size_t index_of(Label v) const;
  const std::vector<Label>& hook(Label v) const { return hook_sets[index_of(v)]; }
  std::size_t hook_size(Label v) const { return hook_sizes[index_of(v)]; }
};

HookTable hooks(const IncreasingTree& t);
HookTable hooks(const BinaryTree& t);
HookTable hooks(const RootedShape& t);

/// Hook sizes only, indexed like the shape.
std::vector<std::size_t> hook_sizes(const RootedShape& t);

}  // namespace hooklab
