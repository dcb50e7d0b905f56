#include "hooklab/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hooklab {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("IntPartition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::map<int, int> IntPartition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

Integer IntPartition::part_product() const {
  Integer z = 1;
  for (int p : parts_) z *= p;
  return z;
}

std::string IntPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::size_t len,
            std::vector<IntPartition>& out) {
  if (remaining == 0) {
    if (len == 0 || prefix.size() == len) out.emplace_back(prefix);
    return;
  }
  if (len != 0 && prefix.size() >= len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend(remaining - p, p, prefix, len, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntPartition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<IntPartition> out;
  std::vector<int> prefix;
  extend(n, n, prefix, 0, out);
  return out;
}

std::vector<IntPartition> partitions_of(int n, std::size_t len) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<IntPartition> out;
  if (len == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  extend(n, n, prefix, len, out);
  return out;
}

}  // namespace hooklab
