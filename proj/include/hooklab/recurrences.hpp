#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hooklab/hookformula.hpp"
#include "hooklab/multipoly.hpp"
#include "hooklab/subsets.hpp"

namespace hooklab {

inline constexpr std::size_t kMaxRecurrenceSize = 8;

/// One summand of a split or partition sum, kept for --trace output.
struct TraceEntry {
  std::string index;  // "X1={3} X2={4}" or "{2,4}{3}"
  MultiPoly summand;
};

struct RecurrenceCheck {
  Identity identity;       // lhs: sum of wt over trees on [r]; rhs: recurrence side
  MultiPoly closed_form;   // k_1...k_r (K-1)_{r-2}
  bool auxiliary = true;   // grafting: weight law on every tree; root degree: induction step
  std::vector<TraceEntry> trace;

  bool ok() const { return identity.equal && identity.rhs == closed_form && auxiliary; }
};

/// Splitting off the subtree of vertex 2:
///   sum_T wt(T) = sum_{X1 ⊔ X2 = {3..r}} k_1 (k_2 + K_{X2} - |X2|)
///                 (sum_{T1 on {1} ∪ X1} wt)(sum_{T2 on {2} ∪ X2} wt)
/// with auxiliary = the weight law wt(T2•T1) = wt(T2) wt(T1) k_1 (K_{X(T2)} - |X(T2)| + 1)
/// on every tree of size r.
RecurrenceCheck grafting_recurrence(std::size_t r, unsigned threads = 1, bool trace = false);
bool grafting_recurrence_check(std::size_t r);

/// Split sum, with the X1 = ∅ summand reduced to (k_2 + K_{X2} - 1)_{|X2|}:
///   P = sum_{X1 ⊔ X2 = {3..r}} k_1 (k_1 + K_{X1} - 1)_{|X1|-1} (k_2 + K_{X2} - 1)_{|X2|}
MultiPoly p_polynomial(std::size_t r, std::vector<TraceEntry>* trace = nullptr);
/// (K - 1)_{r-2}
MultiPoly q_polynomial(std::size_t r);
Identity p_equals_q(std::size_t r);

enum class Family { P, Q };
const char* family_name(Family f);
MultiPoly family_member(Family f, std::size_t r);

/// F(0, k_2, ..., k_r) against (K_{2..r} - 1)_{r-2}, in the variables k_2..k_r.
Identity constant_term(Family f, std::size_t r);
bool constant_term_check(std::size_t r);

/// Δ_{k1} F(k_1..k_r) against sum_{i=3}^r F(k_1 + k_i, k_2, .., k̂_i, .., k_r).
Identity finite_difference(Family f, std::size_t r);
bool finite_difference_check(std::size_t r);

/// Root-degree decomposition over set partitions of {2..r}:
///   sum_T wt(T) = sum_blocks k_1^j prod_i (K_{Xi} - |Xi| + 1) sum_{Ti on Xi} wt(Ti)
/// The 1/j! of ordered block tuples is absorbed by summing unordered partitions.
/// auxiliary: replacing each inner tree sum by its closed form gives, partition
/// by partition, the summand of the Lagrange identity.
RecurrenceCheck root_degree_recurrence(std::size_t r, unsigned threads = 1, bool trace = false);
bool root_degree_recurrence_check(std::size_t r);

/// k_1...k_r (K-1)_{r-2} = sum_blocks k_1^j prod_i (prod_{l in Xi} k_l) (K_{Xi} - 1)_{|Xi|-1}
Identity mvl_identity(std::size_t r, std::vector<TraceEntry>* trace = nullptr);
bool mvl_identity_check(std::size_t r);

/// [t_1...t_r] w_1 for w_i = t_i (1 + w_1 + ... + w_r)^{k_i}, solved in the
/// multilinear window at integer k, against k_1 (K-1)_{r-2}.
struct SeriesOracle {
  Integer series;
  Integer closed_form;
  bool nonpositive_input = false;  // allowed: the identity is polynomial in k
  bool equal = false;
};
SeriesOracle lagrange_series_oracle(std::span<const long> kvals);

/// [prod_{x in X} t_x] log(1 + w_1 + ... + w_r) against (K_X - 1)_{|X|-1},
/// for nonempty X ⊆ [r].
struct LogOracle {
  Rational series;
  Integer closed_form;
  bool equal = false;
};
LogOracle log_coefficient_oracle(std::span<const long> kvals, std::span<const Label> subset);

}  // namespace hooklab
