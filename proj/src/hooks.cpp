#include "hooklab/hooks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hooklab {

RootedShape shape_of(const IncreasingTree& t) {
  RootedShape s;
  s.parent.assign(t.size(), -1);
  for (std::size_t i = 1; i < t.size(); ++i) s.parent[i] = static_cast<int>(t.parent_index(i));
  return s;
}

RootedShape shape_of(const BinaryTree& t) { return RootedShape{t.parents()}; }

std::vector<std::size_t> hook_sizes(const RootedShape& t) {
  std::vector<std::size_t> h(t.size(), 1);
  for (std::size_t i = t.size(); i-- > 1;) {
    if (t.parent[i] < 0 || static_cast<std::size_t>(t.parent[i]) >= i) {
      throw std::invalid_argument("rooted shape: parent must precede child");
    }
    h[t.parent[i]] += h[i];
  }
  return h;
}

std::size_t HookTable::index_of(Label v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw std::out_of_range("vertex " + std::to_string(v) + " has no hook");
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

HookTable build(const RootedShape& s, std::vector<Label> names) {
  HookTable table;
  table.hook_sizes = hook_sizes(s);
  table.hook_sets.resize(s.size());
  for (std::size_t i = s.size(); i-- > 0;) {
    auto& own = table.hook_sets[i];
    own.push_back(names[i]);
    std::sort(own.begin(), own.end());
    if (i > 0) {
      auto& up = table.hook_sets[s.parent[i]];
      up.insert(up.end(), own.begin(), own.end());
    }
  }
  table.vertices = std::move(names);
  return table;
}

}  // namespace

HookTable hooks(const IncreasingTree& t) { return build(shape_of(t), t.labels()); }

HookTable hooks(const RootedShape& t) {
  std::vector<Label> ids(t.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Label>(i);
  return build(t, std::move(ids));
}

HookTable hooks(const BinaryTree& t) { return hooks(shape_of(t)); }

}  // namespace hooklab
