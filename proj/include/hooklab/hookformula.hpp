#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

#include "hooklab/binary_tree.hpp"
#include "hooklab/cayley_tree.hpp"
#include "hooklab/hooks.hpp"
#include "hooklab/increasing_tree.hpp"
#include "hooklab/multipoly.hpp"

namespace hooklab {

inline constexpr std::size_t kMaxIncreasingSize = 10;
inline constexpr std::size_t kMaxCayleySize = 7;
inline constexpr std::size_t kMaxBinarySize = 12;
inline constexpr std::size_t kMaxLinearExtensionSize = 9;

/// Polynomial ring for tree weights: label l is variable l-1 among k_1..k_r.
/// Weights of trees on subsets of [r] stay in the same ring so they multiply.
struct WeightContext {
  std::size_t r;
  unsigned threads = 1;

  std::size_t nvars() const { return r; }
  MultiPoly k(Label l) const { return MultiPoly::variable(r, static_cast<std::size_t>(l) - 1); }
  /// K_X, the sum of k_l over l in X.
  MultiPoly K(std::span<const Label> labels) const;
  MultiPoly constant(const Rational& c) const { return MultiPoly::constant(r, c); }
};

/// Both sides of an identity; equal iff the canonical forms agree.
struct Identity {
  MultiPoly lhs;
  MultiPoly rhs;
  bool equal;
};

Identity make_identity(MultiPoly lhs, MultiPoly rhs);

/// wt(T) = prod over non-root v of k_{f(v)} (K_{hook(v)} - h(v) + 1).
MultiPoly wt(const IncreasingTree& t, const WeightContext& ctx);
MultiPoly wt(const IncreasingTree& t);

/// wt''(T) = prod over non-root v of k_{f(v)} K_{hook(v)}.
MultiPoly wt_doubleprime(const IncreasingTree& t, const WeightContext& ctx);
MultiPoly wt_doubleprime(const IncreasingTree& t);

/// Sum of wt over every increasing tree on the given labels.
MultiPoly tree_weight_sum(std::span<const Label> labels, const WeightContext& ctx);

/// Closed form for tree_weight_sum: prod k_l (K_X - 1)_{|X|-2}, and 1 for a
/// single label (where the negative falling factorial cancels k_l).
MultiPoly hook_product_formula(std::span<const Label> labels, const WeightContext& ctx);

MultiPoly theorem1_lhs(std::size_t r, unsigned threads = 1);
MultiPoly theorem1_rhs(std::size_t r);
Identity hook_formula(std::size_t r, unsigned threads = 1);

/// Equal-parameter specialization, univariate in x:
/// sum_T prod_v (x h(v) + 1)  vs  (x+1) prod_{i=1}^{r-1} (x r + i).
Identity postnikov_analogue(std::size_t r, unsigned threads = 1);

/// Rederives the equal-parameter identity from the multivariate one through
/// k_i -> k and x = k - 1, univariate in k:
///   tree side:   wt-sum|_{k_i=k} * ((k-1) r + 1)  vs  k^{r-1} * lhs(x = k-1)
///   closed side: rhs|_{k_i=k} * ((k-1) r + 1)     vs  k^{r-1} * rhs(x = k-1)
struct SpecializationChain {
  Identity tree_side;
  Identity closed_side;
};
SpecializationChain postnikov_specialization(std::size_t r, unsigned threads = 1);

/// Binary-tree hook sum, univariate in x:
/// sum_shapes (n!/prod h) prod (x h + 1)  vs  1/(n+1) prod_{i<n} ((n+1+i) x + n+1-i).
Identity postnikov_binary(std::size_t n);

/// Increasing labellings counted directly versus n!/prod h.
struct KnuthCheck {
  std::uint64_t linear_extensions;
  Rational hook_quotient;
  bool equal;
};
std::uint64_t count_linear_extensions(const RootedShape& shape);
KnuthCheck knuth_hook_check(const RootedShape& shape);

/// sum over binary shapes of prod 1/h.
Rational hook_sum_binary(std::size_t n);

/// For every increasing tree on [r], the sum of prod k_v^{d_v(U)} over the
/// Cayley trees U with phi(U) = T. Built in one pass over the Cayley trees.
std::map<IncreasingTree, MultiPoly> fiber_table(std::size_t r, unsigned threads = 1);
MultiPoly fiber_sum(const IncreasingTree& t, std::size_t r);

/// sum_U prod k_i^{d_i(U)}  vs  k_1...k_r K^{r-2}, cross-checked against sum_T wt''(T).
struct CayleyCheck {
  MultiPoly lhs;
  MultiPoly rhs;
  MultiPoly via_doubleprime;
  bool equal;
};
CayleyCheck cayley_identity(std::size_t r, unsigned threads = 1);

/// Tree-by-tree comparison of fiber sums, wt'' and the top component of wt,
/// plus the facts that phi hits every increasing tree and its fibers
/// partition the Cayley trees.
struct FiberCheck {
  std::size_t trees = 0;
  std::uint64_t cayley_trees = 0;
  std::size_t mismatches = 0;
  bool surjective = false;
  bool partition = false;
  MultiPoly fiber_total;       // sum of all fiber sums
  MultiPoly doubleprime_total;  // sum of all wt''
  bool ok() const { return mismatches == 0 && surjective && partition; }
};
FiberCheck fiber_check(std::size_t r, unsigned threads = 1);

}  // namespace hooklab
