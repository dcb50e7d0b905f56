#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hooklab {

using Label = int;

/*
 * Unordered increasing tree on a finite set of positive labels.
 *
 * The tree is its parent function: every label except the smallest has a
 * father with a smaller label, and the smallest label is the root. Sons
 * carry no order, so two trees are equal exactly when their parent maps are.
 */
class IncreasingTree {
 public:
  /// Validates labels (distinct, positive) and the increasing parent map.
  IncreasingTree(std::vector<Label> labels, const std::map<Label, Label>& parent);

  static IncreasingTree single(Label label);

  /// labels ascending; parents[i] is the index of the father of labels[i]
  /// (ignored for i == 0). Validated.
  static IncreasingTree from_parent_indices(std::vector<Label> labels,
                                            std::span<const std::size_t> parents);

  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  Label root() const { return labels_.front(); }
  bool contains(Label v) const;
  std::size_t index_of(Label v) const;

  /// Father of v, nullopt for the root. Throws std::out_of_range for a
  /// label not in the tree.
  std::optional<Label> parent(Label v) const;
  /// Father index of the vertex at position i (i >= 1).
  std::size_t parent_index(std::size_t i) const { return parent_[i]; }
  /// Sons of v in increasing label order.
  std::vector<Label> children(Label v) const;
  std::map<Label, Label> parent_map() const;

  friend bool operator==(const IncreasingTree&, const IncreasingTree&) = default;
  friend auto operator<=>(const IncreasingTree&, const IncreasingTree&) = default;

 private:
  IncreasingTree() = default;
  friend IncreasingTree make_increasing_unchecked(std::vector<Label> labels,
                                                  std::vector<std::size_t> parents);

  std::vector<Label> labels_;        // ascending
  std::vector<std::size_t> parent_;  // parent_[i] < i; parent_[0] == 0 (unused)
};

/// Sorted copy of labels; throws on empty, non-positive or repeated labels.
std::vector<Label> normalize_labels(std::span<const Label> labels);
std::vector<Label> label_range(Label first, Label last);  // [first, last]

/// (n-1)! for n >= 1.
std::uint64_t increasing_tree_count(std::size_t n);

/// Tree number `index` in lexicographic order of the parent-choice vector
/// (f(x_2), ..., f(x_n)) where x_1 < ... < x_n are the labels.
IncreasingTree increasing_tree_at(std::span<const Label> labels, std::uint64_t index);

/// Visits trees [first, last) of that order. Disjoint ranges can be visited
/// from different threads.
void for_each_increasing(std::span<const Label> labels, std::uint64_t first,
                         std::uint64_t last,
                         const std::function<void(const IncreasingTree&)>& visit);
void for_each_increasing(std::span<const Label> labels,
                         const std::function<void(const IncreasingTree&)>& visit);

std::vector<IncreasingTree> enumerate_increasing(std::span<const Label> labels);

/// T2 • T1: the root of t2 becomes a son of the root of t1.
IncreasingTree graft(const IncreasingTree& t2, const IncreasingTree& t1);

/// Inverse of graft at the second-smallest label: returns (T1, T2) with T2
/// the subtree hanging from that label.
std::pair<IncreasingTree, IncreasingTree> split_at_two(const IncreasingTree& t);

/// Labels of the subtree rooted at v (v and its descendants), ascending.
std::vector<Label> subtree_labels(const IncreasingTree& t, Label v);

}  // namespace hooklab

template <>
struct std::hash<hooklab::IncreasingTree> {
  std::size_t operator()(const hooklab::IncreasingTree& t) const noexcept;
};
