#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hooklab/kerov.hpp"

using namespace hooklab;

namespace {

std::size_t raw_cycles(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) seen[x] = true;
  }
  return cycles;
}

// Pairs (s1, s2) over all of S_n x S_n with s1 s2 = sigma_mu (s2 applied
// first), s2 an n-cycle and s1 with j-1 cycles.
std::uint64_t brute_pairs(const IntPartition& mu) {
  const auto n = static_cast<std::size_t>(mu.size());
  const auto target = sigma_mu(mu).images();
  std::vector<int> s2(n);
  std::iota(s2.begin(), s2.end(), 0);
  std::uint64_t count = 0;
  do {
    if (raw_cycles(s2) != 1) continue;
    // s1 = target o s2^{-1}
    std::vector<int> s1(n);
    for (std::size_t x = 0; x < n; ++x) s1[static_cast<std::size_t>(s2[x])] = target[x];
    if (raw_cycles(s1) == static_cast<std::size_t>(mu.j() - 1)) ++count;
  } while (std::next_permutation(s2.begin(), s2.end()));
  return count;
}

}  // namespace

TEST_CASE("partitions") {
  const IntPartition mu({2, 3, 2});
  CHECK(mu.parts() == std::vector<int>{3, 2, 2});
  CHECK(mu.size() == 7);
  CHECK(mu.length() == 3);
  CHECK(mu.j() == 6);
  CHECK(mu.multiplicities() == std::map<int, int>{{2, 2}, {3, 1}});
  CHECK(mu.to_string() == "(3,2,2)");
  CHECK_THROWS(IntPartition({2, 0}));

  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == IntPartition({4}));
  CHECK(p4[1] == IntPartition({3, 1}));
  CHECK(p4[2] == IntPartition({2, 2}));
  CHECK(p4.back() == IntPartition({1, 1, 1, 1}));
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n <= 9; ++n) CHECK(partitions_of(n).size() == counts[n]);
  CHECK(partitions_of(6, 3).size() == 3);
}

TEST_CASE("permutations") {
  CHECK(sigma_mu(IntPartition({3})) == Permutation::from_cycles(3, {{1, 2, 3}}));
  CHECK(sigma_mu(IntPartition({2, 2})) == Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
  CHECK(sigma_mu(IntPartition({2, 2})).to_string() == "(1 2)(3 4)");
  CHECK(sigma_mu(IntPartition({1})) == Permutation::identity(1));
  CHECK_THROWS(sigma_mu(IntPartition{}));
  CHECK_THROWS(Permutation({0, 0, 1}));

  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  // Right factor first: (a*b)(1) = a(b(1)) = a(1) = 2, in 0-based terms 0 -> 1.
  CHECK((a * b)(0) == 1);
  CHECK((a * b) * (a * b).inverse() == Permutation::identity(3));
  CHECK((a * b).cycle_type() == IntPartition({3}));
}

TEST_CASE("property: cycle type of sigma_mu and long cycles") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) CHECK(sigma_mu(mu).cycle_type() == mu);
    const auto count = long_cycle_count(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto c = long_cycle_at(static_cast<std::size_t>(n), i);
      CHECK(c.cycle_count() == 1);
      seen.push_back(c.images());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("factorization counts") {
  for (int n = 1; n <= 9; ++n) CHECK(count_factorizations(IntPartition({n})) == 1);
  CHECK(count_factorizations(IntPartition({2, 2})) == 4);
  CHECK(count_factorizations(IntPartition({3, 2})) == 6);
  CHECK_THROWS_AS(count_factorizations(IntPartition({5, 5})), std::length_error);
}

TEST_CASE("property: long-cycle count equals the full S_n brute force") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      CHECK(count_factorizations(mu) == brute_pairs(mu));
      CHECK(count_factorizations(mu) == factorization_closed_form(mu));
    }
  }
}

TEST_CASE("Bedard-Goupil values") {
  CHECK(bedard_goupil(IntPartition({1, 1, 1, 1}), IntPartition({4})) == 1);
  CHECK(bedard_goupil(IntPartition({2, 1, 1}), IntPartition({2, 2})) == 4);
  CHECK_THROWS(bedard_goupil(IntPartition({2, 2}), IntPartition({2, 2})));
  CHECK_THROWS(bedard_goupil(IntPartition({2, 1}), IntPartition({2, 2})));
}

TEST_CASE("property: per cycle type counts match Bedard-Goupil") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const FactorizationCount census = factorization_census(mu);
      CHECK(census.cycle_counts_ok);
      CHECK(Rational(census.total) == bedard_goupil_sum(mu));
      for (const auto& [type, count] : census.by_type) {
        CHECK(Rational(count) == bedard_goupil(type, mu));
      }
    }
  }
}

TEST_CASE("binomial simplification") {
  CHECK(binomial_simplification_check(IntPartition({5})));
  CHECK(binomial_simplification_check(IntPartition({2, 2})));
  CHECK(binomial_simplification_check(IntPartition({3, 2, 2})));
  for (int n = 1; n <= 9; ++n) {
    for (const auto& mu : partitions_of(n)) CHECK(binomial_simplification_check(mu));
  }
}

TEST_CASE("Proposition 2 values") {
  CHECK(prop2_value(IntPartition({6})) == 1);
  CHECK(prop2_value(IntPartition({3, 2})) == -6);
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= a; ++b) CHECK(prop2_value(IntPartition({a, b})) == -a * b);
  }
}

TEST_CASE("tree bridge") {
  CHECK(kerov_tree_bridge(IntPartition({5})));
  const KerovRow row = kerov_row(IntPartition({2, 2}));
  CHECK(row.brute_count == 4);
  CHECK(row.tree_value == 4);
  CHECK(row.rhs_value == 4);
  const KerovRow row322 = kerov_row(IntPartition({3, 2, 2}));
  CHECK(row322.brute_count == 72);
  CHECK(row322.tree_value == 72);
  CHECK(row322.ok());
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) CHECK(kerov_row(mu, 2).ok());
  }
}
