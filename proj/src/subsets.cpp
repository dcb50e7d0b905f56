#include "hooklab/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooklab {

namespace {

std::vector<Label> sorted_ground(std::span<const Label> ground) {
  std::vector<Label> g(ground.begin(), ground.end());
  std::sort(g.begin(), g.end());
  if (std::adjacent_find(g.begin(), g.end()) != g.end()) {
    throw std::invalid_argument("ground set has repeated elements");
  }
  if (g.size() >= 63) throw std::length_error("ground set too large to enumerate");
  return g;
}

}  // namespace

std::vector<SubsetSplit> subset_splits(std::span<const Label> ground) {
  const auto g = sorted_ground(ground);
  std::vector<SubsetSplit> out;
  const std::uint64_t total = std::uint64_t{1} << g.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SubsetSplit s;
    for (std::size_t i = 0; i < g.size(); ++i) {
      (mask & (std::uint64_t{1} << i) ? s.first : s.second).push_back(g[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SetPartition> set_partitions(std::span<const Label> ground) {
  const auto g = sorted_ground(ground);
  std::vector<SetPartition> out;
  if (g.empty()) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(g.size(), 0);
  while (true) {
    SetPartition p(1 + *std::max_element(a.begin(), a.end()));
    for (std::size_t i = 0; i < g.size(); ++i) p[a[i]].push_back(g[i]);
    out.push_back(std::move(p));
    std::size_t i = g.size();
    while (--i > 0) {
      const std::size_t prefix_max = *std::max_element(a.begin(), a.begin() + static_cast<long>(i));
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + static_cast<long>(i) + 1, a.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::string format_block(std::span<const Label> block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(block[i]);
  }
  return s + "}";
}

std::string format_split(const SubsetSplit& split) {
  return "X1=" + format_block(split.first) + " X2=" + format_block(split.second);
}

std::string format_partition(const SetPartition& p) {
  std::string s;
  for (const auto& b : p) s += format_block(b);
  return s;
}

}  // namespace hooklab
