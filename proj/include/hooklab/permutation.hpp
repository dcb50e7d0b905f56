#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hooklab/partition.hpp"

namespace hooklab {

/// A bijection of {0, ..., n-1}, stored as its image array. Printed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);
  /// Cycle notation, 1-based: from_cycles(4, {{1,2},{3,4}}) is (1 2)(3 4).
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t size() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  std::size_t cycle_count() const;
  IntPartition cycle_type() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)): the right factor acts first.
Permutation operator*(const Permutation& a, const Permutation& b);

/// Consecutive-block cycles (1..mu_1)(mu_1+1..mu_1+mu_2)...
Permutation sigma_mu(const IntPartition& mu);

/// n-cycles of S_n, (n-1)! of them: index i sends 0 to the first entry of the
/// i-th permutation (in lex order) of {1..n-1}, and so on around the cycle.
std::uint64_t long_cycle_count(std::size_t n);
Permutation long_cycle_at(std::size_t n, std::uint64_t index);

}  // namespace hooklab
