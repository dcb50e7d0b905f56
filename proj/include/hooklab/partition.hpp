#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/// Integer partition with weakly decreasing positive parts.
class IntPartition {
 public:
  IntPartition() = default;
  /// Parts may come in any order; they are sorted. Zero or negative parts throw.
  explicit IntPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                        // |mu|
  std::size_t length() const { return parts_.size(); }  // l(mu)
  /// j = |mu| - l(mu) + 2
  int j() const { return size() - static_cast<int>(length()) + 2; }
  /// part -> m_part(mu), only for parts that occur.
  std::map<int, int> multiplicities() const;
  Integer part_product() const;
  std::string to_string() const;

  friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of n in reverse-lex order: (n), (n-1,1), ..., (1^n). n = 0 gives
/// the empty partition.
std::vector<IntPartition> partitions_of(int n);
/// Partitions of n with exactly len parts, same order.
std::vector<IntPartition> partitions_of(int n, std::size_t len);

}  // namespace hooklab
