#include "hooklab/cayley_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hooklab {

namespace {

std::size_t position(const std::vector<Label>& sorted, Label v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the tree");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

std::size_t find_root(std::vector<std::size_t>& uf, std::size_t x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

CayleyTree::CayleyTree(std::size_t r, std::vector<Edge> edges)
    : CayleyTree(label_range(1, static_cast<Label>(r)), std::move(edges)) {}

CayleyTree::CayleyTree(std::vector<Label> vertices, std::vector<Edge> edges) {
  vertices_ = normalize_labels(vertices);
  const std::size_t n = vertices_.size();
  if (edges.size() + 1 != n) {
    throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs " +
                                std::to_string(n - 1) + " edges");
  }
  std::vector<std::size_t> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop at " + std::to_string(a));
    if (a > b) std::swap(a, b);
    auto ra = find_root(uf, position(vertices_, a));
    auto rb = find_root(uf, position(vertices_, b));
    if (ra == rb) throw std::invalid_argument("edge set contains a cycle");
    uf[ra] = rb;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

bool CayleyTree::is_standard() const {
  return vertices_.front() == 1 && vertices_.back() == static_cast<Label>(vertices_.size());
}

std::vector<Label> CayleyTree::neighbours(Label v) const {
  std::vector<Label> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t cayley_count(std::size_t r) {
  if (r == 0) throw std::invalid_argument("Cayley trees need at least one vertex");
  std::uint64_t c = 1;
  for (std::size_t i = 2; i < r; ++i) c *= r;
  return c;
}

std::vector<Label> prufer_encode(const CayleyTree& tree) {
  if (!tree.is_standard()) throw std::invalid_argument("prufer_encode: vertex set must be [r]");
  const std::size_t r = tree.size();
  if (r < 2) throw std::invalid_argument("prufer_encode: single vertex has no Prüfer code");
  std::vector<std::vector<Label>> adj(r + 1);
  std::vector<std::size_t> degree(r + 1, 0);
  for (const auto& [a, b] : tree.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++degree[a];
    ++degree[b];
  }
  std::vector<bool> removed(r + 1, false);
  std::vector<Label> seq;
  seq.reserve(r - 2);
  for (std::size_t step = 0; step + 2 < r; ++step) {
    Label leaf = 1;
    while (removed[leaf] || degree[leaf] != 1) ++leaf;
    removed[leaf] = true;
    for (Label nb : adj[leaf]) {
      if (!removed[nb]) {
        seq.push_back(nb);
        --degree[nb];
      }
    }
  }
  return seq;
}

CayleyTree prufer_decode(std::size_t r, std::span<const Label> sequence) {
  if (r < 2) throw std::invalid_argument("prufer_decode: need r >= 2");
  if (sequence.size() + 2 != r) {
    throw std::invalid_argument("prufer_decode: sequence must have length r-2");
  }
  std::vector<std::size_t> degree(r + 1, 1);
  degree[0] = 0;
  for (Label a : sequence) {
    if (a < 1 || static_cast<std::size_t>(a) > r) {
      throw std::invalid_argument("prufer_decode: entry " + std::to_string(a) + " outside [r]");
    }
    ++degree[a];
  }
  std::vector<Edge> edges;
  edges.reserve(r - 1);
  for (Label a : sequence) {
    Label leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, a);
    --degree[leaf];
    --degree[a];
  }
  Label u = 0;
  for (std::size_t v = 1; v <= r; ++v) {
    if (degree[v] == 1) {
      if (u == 0) {
        u = static_cast<Label>(v);
      } else {
        edges.emplace_back(u, static_cast<Label>(v));
      }
    }
  }
  return CayleyTree(r, std::move(edges));
}

CayleyTree cayley_tree_at(std::size_t r, std::uint64_t index) {
  if (index >= cayley_count(r)) throw std::out_of_range("Cayley tree index out of range");
  if (r == 1) return CayleyTree(1, {});
  std::vector<Label> seq(r - 2);
  for (std::size_t i = seq.size(); i-- > 0;) {
    seq[i] = static_cast<Label>(index % r) + 1;
    index /= r;
  }
  return prufer_decode(r, seq);
}

void for_each_cayley(std::size_t r, std::uint64_t first, std::uint64_t last,
                     const std::function<void(const CayleyTree&)>& visit) {
  last = std::min(last, cayley_count(r));
  for (std::uint64_t i = first; i < last; ++i) visit(cayley_tree_at(r, i));
}

std::vector<CayleyTree> enumerate_cayley(std::size_t r) {
  std::vector<CayleyTree> out;
  out.reserve(cayley_count(r));
  for_each_cayley(r, 0, cayley_count(r), [&](const CayleyTree& t) { out.push_back(t); });
  return out;
}

std::vector<std::size_t> degree_vector(const CayleyTree& tree) {
  std::vector<std::size_t> deg(tree.size(), 0);
  for (const auto& [a, b] : tree.edges()) {
    ++deg[position(tree.vertices(), a)];
    ++deg[position(tree.vertices(), b)];
  }
  return deg;
}

namespace {

struct PhiBuilder {
  const std::vector<Label>& vertices;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<bool> removed;
  std::map<Label, Label> parent;

  // comp: positions of a connected component of the tree minus removed
  // vertices. Returns the position of its root (the minimal vertex).
  std::size_t build(std::vector<std::size_t> comp) {
    const std::size_t root = *std::min_element(comp.begin(), comp.end());
    removed[root] = true;
    std::vector<bool> seen(vertices.size(), false);
    for (std::size_t start : adj[root]) {
      if (removed[start] || seen[start]) continue;
      std::vector<std::size_t> sub{start};
      seen[start] = true;
      for (std::size_t k = 0; k < sub.size(); ++k) {
        for (std::size_t nb : adj[sub[k]]) {
          if (!removed[nb] && !seen[nb]) {
            seen[nb] = true;
            sub.push_back(nb);
          }
        }
      }
      const std::size_t child = build(std::move(sub));
      parent[vertices[child]] = vertices[root];
    }
    return root;
  }
};

}  // namespace

IncreasingTree phi(const CayleyTree& tree) {
  const auto& vs = tree.vertices();
  PhiBuilder b{vs, std::vector<std::vector<std::size_t>>(vs.size()),
               std::vector<bool>(vs.size(), false), {}};
  for (const auto& [x, y] : tree.edges()) {
    b.adj[position(vs, x)].push_back(position(vs, y));
    b.adj[position(vs, y)].push_back(position(vs, x));
  }
  std::vector<std::size_t> all(vs.size());
  std::iota(all.begin(), all.end(), 0);
  b.build(std::move(all));
  return IncreasingTree(vs, b.parent);
}

}  // namespace hooklab

std::size_t std::hash<hooklab::CayleyTree>::operator()(const hooklab::CayleyTree& t) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ULL; };
  for (auto v : t.vertices()) mix(static_cast<std::size_t>(v));
  for (const auto& [a, b] : t.edges()) {
    mix(static_cast<std::size_t>(a));
    mix(static_cast<std::size_t>(b));
  }
  return h;
}
