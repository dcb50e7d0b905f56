#pragma once

#include <string>

#include <json.hpp>

#include "hooklab/binary_tree.hpp"
#include "hooklab/cayley_tree.hpp"
#include "hooklab/increasing_tree.hpp"

namespace hooklab {

// JSON
//   increasing: {"labels":[1,2,3],"parent":{"2":1,"3":1}}
//   cayley:     {"r":4,"edges":[[1,2],[1,3],[1,4]]}
//               (plus "vertices":[...] when the vertex set is not [r])
//   binary:     {"left":...,"right":...} with null for a missing child;
//               the empty tree is null.
nlohmann::json to_json(const IncreasingTree& t);
nlohmann::json to_json(const CayleyTree& t);
nlohmann::json to_json(const BinaryTree& t);

IncreasingTree increasing_from_json(const nlohmann::json& j);
CayleyTree cayley_from_json(const nlohmann::json& j);
BinaryTree binary_from_json(const nlohmann::json& j);

// Graphviz. Sons of an increasing tree are emitted in increasing label
// order, so dot draws them left to right.
std::string to_dot(const IncreasingTree& t, const std::string& name = "T");
std::string to_dot(const CayleyTree& t, const std::string& name = "U");
std::string to_dot(const BinaryTree& t, const std::string& name = "B");

}  // namespace hooklab
