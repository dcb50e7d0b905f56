#include "hooklab/increasing_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hooklab {

IncreasingTree make_increasing_unchecked(std::vector<Label> labels,
                                         std::vector<std::size_t> parents) {
  IncreasingTree t;
  t.labels_ = std::move(labels);
  t.parent_ = std::move(parents);
  return t;
}

std::vector<Label> normalize_labels(std::span<const Label> labels) {
  if (labels.empty()) throw std::invalid_argument("label set is empty");
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() <= 0) throw std::invalid_argument("labels must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("labels must be distinct");
  }
  return sorted;
}

std::vector<Label> label_range(Label first, Label last) {
  std::vector<Label> out;
  for (Label l = first; l <= last; ++l) out.push_back(l);
  return out;
}

IncreasingTree::IncreasingTree(std::vector<Label> labels, const std::map<Label, Label>& parent) {
  labels_ = normalize_labels(labels);
  parent_.assign(labels_.size(), 0);
  for (const auto& [child, father] : parent) {
    if (!contains(child)) {
      throw std::invalid_argument("parent map mentions unknown label " + std::to_string(child));
    }
  }
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    auto it = parent.find(labels_[i]);
    if (it == parent.end()) {
      throw std::invalid_argument("label " + std::to_string(labels_[i]) + " has no father");
    }
    if (!contains(it->second)) {
      throw std::invalid_argument("father " + std::to_string(it->second) + " is not a label");
    }
    if (it->second >= labels_[i]) {
      throw std::invalid_argument("father of " + std::to_string(labels_[i]) +
                                  " must have a smaller label");
    }
    parent_[i] = index_of(it->second);
  }
  if (parent.contains(labels_.front())) {
    throw std::invalid_argument("the root cannot have a father");
  }
}

IncreasingTree IncreasingTree::single(Label label) {
  return IncreasingTree({label}, {});
}

IncreasingTree IncreasingTree::from_parent_indices(std::vector<Label> labels,
                                                   std::span<const std::size_t> parents) {
  auto sorted = normalize_labels(labels);
  if (sorted != labels) throw std::invalid_argument("labels must be given in ascending order");
  if (parents.size() != labels.size()) {
    throw std::invalid_argument("need one parent index per label");
  }
  std::vector<std::size_t> p(parents.begin(), parents.end());
  p[0] = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] >= i) throw std::invalid_argument("parent index must be smaller than own index");
  }
  return make_increasing_unchecked(std::move(sorted), std::move(p));
}

bool IncreasingTree::contains(Label v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::size_t IncreasingTree::index_of(Label v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) {
    throw std::out_of_range("label " + std::to_string(v) + " is not in the tree");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<Label> IncreasingTree::parent(Label v) const {
  const std::size_t i = index_of(v);
  if (i == 0) return std::nullopt;
  return labels_[parent_[i]];
}

std::vector<Label> IncreasingTree::children(Label v) const {
  const std::size_t i = index_of(v);
  std::vector<Label> out;
  for (std::size_t c = i + 1; c < labels_.size(); ++c) {
    if (parent_[c] == i) out.push_back(labels_[c]);
  }
  return out;
}

std::map<Label, Label> IncreasingTree::parent_map() const {
  std::map<Label, Label> m;
  for (std::size_t i = 1; i < labels_.size(); ++i) m[labels_[i]] = labels_[parent_[i]];
  return m;
}

std::uint64_t increasing_tree_count(std::size_t n) {
  if (n == 0) throw std::invalid_argument("increasing trees need at least one vertex");
  std::uint64_t c = 1;
  for (std::size_t i = 2; i < n; ++i) c *= i;
  return c;
}

IncreasingTree increasing_tree_at(std::span<const Label> labels, std::uint64_t index) {
  auto sorted = normalize_labels(labels);
  const std::size_t n = sorted.size();
  if (index >= increasing_tree_count(n)) throw std::out_of_range("tree index out of range");
  std::vector<std::size_t> parents(n, 0);
  // Vertex i has i choices; the last vertex is the fastest-moving digit.
  for (std::size_t i = n; i-- > 1;) {
    parents[i] = index % i;
    index /= i;
  }
  return make_increasing_unchecked(std::move(sorted), std::move(parents));
}

void for_each_increasing(std::span<const Label> labels, std::uint64_t first,
                         std::uint64_t last,
                         const std::function<void(const IncreasingTree&)>& visit) {
  const std::uint64_t total = increasing_tree_count(labels.size());
  last = std::min(last, total);
  if (first >= last) return;
  IncreasingTree t = increasing_tree_at(labels, first);
  std::vector<std::size_t> parents(t.size(), 0);
  for (std::size_t i = 1; i < t.size(); ++i) parents[i] = t.parent_index(i);
  for (std::uint64_t idx = first; idx < last; ++idx) {
    visit(t);
    if (idx + 1 == last) break;
    for (std::size_t i = parents.size(); i-- > 1;) {
      if (++parents[i] < i) break;
      parents[i] = 0;
    }
    t = make_increasing_unchecked(t.labels(), parents);
  }
}

void for_each_increasing(std::span<const Label> labels,
                         const std::function<void(const IncreasingTree&)>& visit) {
  for_each_increasing(labels, 0, increasing_tree_count(labels.size()), visit);
}

std::vector<IncreasingTree> enumerate_increasing(std::span<const Label> labels) {
  std::vector<IncreasingTree> out;
  out.reserve(increasing_tree_count(labels.size()));
  for_each_increasing(labels, [&](const IncreasingTree& t) { out.push_back(t); });
  return out;
}

IncreasingTree graft(const IncreasingTree& t2, const IncreasingTree& t1) {
  for (Label l : t2.labels()) {
    if (t1.contains(l)) {
      throw std::invalid_argument("graft: label sets overlap at " + std::to_string(l));
    }
  }
  if (t1.root() >= t2.root()) {
    throw std::invalid_argument("graft: root of T1 must be smaller than root of T2");
  }
  std::map<Label, Label> parent = t1.parent_map();
  parent.merge(t2.parent_map());
  parent[t2.root()] = t1.root();
  std::vector<Label> labels = t1.labels();
  labels.insert(labels.end(), t2.labels().begin(), t2.labels().end());
  return IncreasingTree(std::move(labels), parent);
}

std::vector<Label> subtree_labels(const IncreasingTree& t, Label v) {
  const std::size_t start = t.index_of(v);
  std::vector<bool> inside(t.size(), false);
  inside[start] = true;
  std::vector<Label> out{v};
  // Descendants have larger indices than their ancestors.
  for (std::size_t i = start + 1; i < t.size(); ++i) {
    if (inside[t.parent_index(i)]) {
      inside[i] = true;
      out.push_back(t.labels()[i]);
    }
  }
  return out;
}

std::pair<IncreasingTree, IncreasingTree> split_at_two(const IncreasingTree& t) {
  if (t.size() < 2) throw std::invalid_argument("split_at_two: tree has a single vertex");
  const Label second = t.labels()[1];
  const auto lower = subtree_labels(t, second);
  std::map<Label, Label> p1, p2;
  std::vector<Label> x1;
  for (const auto& [child, father] : t.parent_map()) {
    if (child == second) continue;
    if (std::binary_search(lower.begin(), lower.end(), child)) {
      p2[child] = father;
    } else {
      p1[child] = father;
    }
  }
  for (Label l : t.labels()) {
    if (!std::binary_search(lower.begin(), lower.end(), l)) x1.push_back(l);
  }
  return {IncreasingTree(std::move(x1), p1), IncreasingTree(lower, p2)};
}

}  // namespace hooklab

std::size_t std::hash<hooklab::IncreasingTree>::operator()(
    const hooklab::IncreasingTree& t) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ULL; };
  for (std::size_t i = 0; i < t.size(); ++i) {
    mix(static_cast<std::size_t>(t.labels()[i]));
    mix(i == 0 ? 0 : t.parent_index(i));
  }
  return h;
}
