#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hooklab/increasing_tree.hpp"

namespace hooklab {

using Edge = std::pair<Label, Label>;

/// Unrooted labelled tree. Edges are stored as (smaller, larger) pairs in
/// lexicographic order.
class CayleyTree {
 public:
  /// Tree on the vertex set [r].
  CayleyTree(std::size_t r, std::vector<Edge> edges);
  /// Tree on an arbitrary set of positive labels.
  CayleyTree(std::vector<Label> vertices, std::vector<Edge> edges);

  const std::vector<Label>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  /// True when the vertex set is exactly [r].
  bool is_standard() const;
  std::vector<Label> neighbours(Label v) const;

  friend bool operator==(const CayleyTree&, const CayleyTree&) = default;
  friend auto operator<=>(const CayleyTree&, const CayleyTree&) = default;

 private:
  std::vector<Label> vertices_;
  std::vector<Edge> edges_;
};

/// r^(r-2), with the single vertex and single edge counted once for r = 1, 2.
std::uint64_t cayley_count(std::size_t r);

/// Standard Prüfer code; requires a tree on [r] with r >= 2.
std::vector<Label> prufer_encode(const CayleyTree& tree);
/// Inverse of prufer_encode. r >= 2 and the sequence has length r-2 over [r].
CayleyTree prufer_decode(std::size_t r, std::span<const Label> sequence);

/// Tree number `index` in lexicographic order of Prüfer sequences.
CayleyTree cayley_tree_at(std::size_t r, std::uint64_t index);
void for_each_cayley(std::size_t r, std::uint64_t first, std::uint64_t last,
                     const std::function<void(const CayleyTree&)>& visit);
std::vector<CayleyTree> enumerate_cayley(std::size_t r);

/// Degrees aligned with vertices().
std::vector<std::size_t> degree_vector(const CayleyTree& tree);

/// Removes the minimal vertex, maps every remaining component recursively and
/// hangs the component roots below the minimal vertex.
IncreasingTree phi(const CayleyTree& tree);

}  // namespace hooklab

template <>
struct std::hash<hooklab::CayleyTree> {
  std::size_t operator()(const hooklab::CayleyTree& t) const noexcept;
};
