#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hooklab/increasing_tree.hpp"

namespace hooklab {

/// Ordered pair of disjoint blocks whose union is the ground set. Either
/// block may be empty.
struct SubsetSplit {
  std::vector<Label> first;
  std::vector<Label> second;
};

/// All 2^n splits, ordered by the bitmask of `first` over the sorted ground set.
std::vector<SubsetSplit> subset_splits(std::span<const Label> ground);

/// Unordered partition into nonempty blocks; blocks ascending, ordered by
/// their minimal element.
using SetPartition = std::vector<std::vector<Label>>;

/// All Bell(n) partitions, in restricted-growth-string order. The empty
/// ground set has exactly one partition (with no blocks).
std::vector<SetPartition> set_partitions(std::span<const Label> ground);

std::uint64_t bell_number(std::size_t n);

std::string format_block(std::span<const Label> block);  // "{3,5}"
std::string format_split(const SubsetSplit& split);       // "X1={3} X2={4,5}"
std::string format_partition(const SetPartition& p);      // "{2,4}{3}"

}  // namespace hooklab
