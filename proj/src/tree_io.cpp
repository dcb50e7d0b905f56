#include "hooklab/tree_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace hooklab {

using nlohmann::json;

json to_json(const IncreasingTree& t) {
  json parent = json::object();
  for (const auto& [child, father] : t.parent_map()) parent[std::to_string(child)] = father;
  return {{"labels", t.labels()}, {"parent", std::move(parent)}};
}

json to_json(const CayleyTree& t) {
  json edges = json::array();
  for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
  json j = {{"r", t.size()}, {"edges", std::move(edges)}};
  if (!t.is_standard()) j["vertices"] = t.vertices();
  return j;
}

namespace {

json binary_subtree(const BinaryTree& t, int v) {
  if (v == -1) return nullptr;
  return {{"left", binary_subtree(t, t.node(v).left)}, {"right", binary_subtree(t, t.node(v).right)}};
}

BinaryTree binary_from(const json& j) {
  if (j.is_null()) return {};
  if (!j.is_object()) throw std::invalid_argument("binary tree JSON must be an object or null");
  return BinaryTree::join(binary_from(j.at("left")), binary_from(j.at("right")));
}

}  // namespace

json to_json(const BinaryTree& t) { return t.empty() ? json(nullptr) : binary_subtree(t, 0); }

IncreasingTree increasing_from_json(const json& j) {
  auto labels = j.at("labels").get<std::vector<Label>>();
  std::map<Label, Label> parent;
  for (const auto& [key, value] : j.at("parent").items()) {
    parent[std::stoi(key)] = value.get<Label>();
  }
  return IncreasingTree(std::move(labels), parent);
}

CayleyTree cayley_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Label>(), e.at(1).get<Label>());
  if (j.contains("vertices")) {
    return CayleyTree(j.at("vertices").get<std::vector<Label>>(), std::move(edges));
  }
  return CayleyTree(j.at("r").get<std::size_t>(), std::move(edges));
}

BinaryTree binary_from_json(const json& j) { return binary_from(j); }

std::string to_dot(const IncreasingTree& t, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [shape=circle];\n";
  for (Label l : t.labels()) out << "  " << l << ";\n";
  for (Label l : t.labels()) {
    for (Label c : t.children(l)) out << "  " << l << " -> " << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const CayleyTree& t, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (Label l : t.vertices()) out << "  " << l << ";\n";
  for (const auto& [a, b] : t.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const BinaryTree& t, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [shape=point];\n";
  for (std::size_t i = 0; i < t.size(); ++i) out << "  n" << i << ";\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.node(i).left != -1) out << "  n" << i << " -> n" << t.node(i).left << " [label=\"L\"];\n";
    if (t.node(i).right != -1) out << "  n" << i << " -> n" << t.node(i).right << " [label=\"R\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hooklab
