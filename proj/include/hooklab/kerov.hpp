#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "hooklab/partition.hpp"
#include "hooklab/permutation.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

inline constexpr std::size_t kMaxFactorizationSize = 9;

/// Pairs (s1, s2) with s1 s2 = sigma_mu, s2 a long cycle and s1 with j-1
/// cycles, found by running over long cycles s2 and setting s1 = sigma_mu s2^{-1}.
struct FactorizationCount {
  Integer total;
  std::map<IntPartition, Integer> by_type;  // keyed by cycle_type(s1)
  bool cycle_counts_ok = true;  // every counted s1 has j-1 cycles, every s2 one
};
FactorizationCount factorization_census(const IntPartition& mu, unsigned threads = 1);
Integer count_factorizations(const IntPartition& mu, unsigned threads = 1);

/// (l(mu)-1)! (j-2)! prod mu_i / prod_i m_i(lambda)!, for |lambda| = |mu| and
/// l(lambda) = j-1.
Rational bedard_goupil(const IntPartition& lambda, const IntPartition& mu);
/// Sum of bedard_goupil over every admissible lambda.
Rational bedard_goupil_sum(const IntPartition& mu);

/// sum over admissible lambda of (j-1)!/prod m_i(lambda)! == C(|mu|-1, j-2)
bool binomial_simplification_check(const IntPartition& mu);

/// (-1)^{l-1} prod mu_i (|mu|-1)! / (|mu|-l+1)!
Rational prop2_value(const IntPartition& mu);

/// prod mu_i (|mu|-1)_{l-2}, with value 1 when l = 1.
Integer factorization_closed_form(const IntPartition& mu);

/// Tree sum of wt at k_i = mu_i, evaluated tree by tree in integers.
Integer tree_sum_at(const IntPartition& mu, unsigned threads = 1);

/// One row of the kerov table.
struct KerovRow {
  IntPartition mu;
  int j = 0;
  Integer brute_count;
  Rational bedard_goupil_sum;
  Rational prop2;
  Integer closed_form;
  Integer rhs_value;   // k_1...k_r (K-1)_{r-2} at k = mu
  Integer tree_value;  // sum_T wt(T) at k = mu
  bool by_type_ok = false;  // brute counts per cycle type match bedard_goupil
  bool cycle_counts_ok = false;
  bool binomial_ok = false;
  bool bridge_ok = false;
  bool ok() const;
};
KerovRow kerov_row(const IntPartition& mu, unsigned threads = 1);

/// |prop2| = count = rhs at k = mu = tree sum at k = mu.
bool kerov_tree_bridge(const IntPartition& mu, unsigned threads = 1);

}  // namespace hooklab
