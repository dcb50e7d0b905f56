#include "hooklab/recurrences.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "hooklab/budget.hpp"
#include "hooklab/truncated_series.hpp"

namespace hooklab {

namespace {

void check_recurrence_size(std::size_t r, std::size_t min, const char* what) {
  if (r < min) {
    throw std::invalid_argument(std::string(what) + ": r must be at least " + std::to_string(min));
  }
  if (r > budget_ceiling(kMaxRecurrenceSize)) {
    throw std::length_error(std::string(what) + ": r = " + std::to_string(r) +
                            " exceeds the budget " + std::to_string(budget_ceiling(kMaxRecurrenceSize)));
  }
}

std::vector<Label> with(Label head, const std::vector<Label>& rest) {
  std::vector<Label> out{head};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

long size_of(const std::vector<Label>& x) { return static_cast<long>(x.size()); }

/// Memoized tree sums over label subsets of one ambient ring.
class TreeSums {
 public:
  explicit TreeSums(const WeightContext& ctx) : ctx_(ctx) {}
  const MultiPoly& operator()(const std::vector<Label>& labels) {
    auto it = cache_.find(labels);
    if (it == cache_.end()) it = cache_.emplace(labels, tree_weight_sum(labels, ctx_)).first;
    return it->second;
  }

 private:
  WeightContext ctx_;
  std::map<std::vector<Label>, MultiPoly> cache_;
};

}  // namespace

RecurrenceCheck grafting_recurrence(std::size_t r, unsigned threads, bool trace) {
  check_recurrence_size(r, 2, "grafting_recurrence");
  const WeightContext ctx{r, 1};
  RecurrenceCheck out{make_identity(MultiPoly(r), MultiPoly(r)), theorem1_rhs(r), true, {}};

  for_each_increasing(label_range(1, static_cast<Label>(r)), [&](const IncreasingTree& t) {
    const auto [t1, t2] = split_at_two(t);
    const MultiPoly law = wt(t2, ctx) * wt(t1, ctx) * ctx.k(t1.root()) *
                          (ctx.K(t2.labels()) - ctx.constant(size_of(t2.labels()) - 1));
    if (law != wt(t, ctx)) out.auxiliary = false;
  });

  TreeSums sums(ctx);
  MultiPoly rhs(r);
  for (const auto& split : subset_splits(label_range(3, static_cast<Label>(r)))) {
    MultiPoly summand = ctx.k(1) * (ctx.k(2) + ctx.K(split.second) - ctx.constant(size_of(split.second))) *
                        sums(with(1, split.first)) * sums(with(2, split.second));
    if (trace) out.trace.push_back({format_split(split), summand});
    rhs += summand;
  }
  out.identity = make_identity(theorem1_lhs(r, threads), std::move(rhs));
  return out;
}

bool grafting_recurrence_check(std::size_t r) { return grafting_recurrence(r).ok(); }

MultiPoly p_polynomial(std::size_t r, std::vector<TraceEntry>* trace) {
  check_recurrence_size(r, 2, "p_polynomial");
  const WeightContext ctx{r};
  MultiPoly p(r);
  for (const auto& split : subset_splits(label_range(3, static_cast<Label>(r)))) {
    const auto& x1 = split.first;
    const auto& x2 = split.second;
    MultiPoly summand = falling_factorial(ctx.k(2) + ctx.K(x2) - ctx.constant(1), size_of(x2));
    // For X1 = ∅ the factor k_1 (k_1 - 1)_{-1} equals 1.
    if (!x1.empty()) {
      summand *= ctx.k(1) *
                 falling_factorial(ctx.k(1) + ctx.K(x1) - ctx.constant(1), size_of(x1) - 1);
    }
    if (trace) trace->push_back({format_split(split), summand});
    p += summand;
  }
  return p;
}

MultiPoly q_polynomial(std::size_t r) {
  check_recurrence_size(r, 2, "q_polynomial");
  const WeightContext ctx{r};
  return falling_factorial(ctx.K(label_range(1, static_cast<Label>(r))) - ctx.constant(1),
                           static_cast<long>(r) - 2);
}

Identity p_equals_q(std::size_t r) { return make_identity(p_polynomial(r), q_polynomial(r)); }

const char* family_name(Family f) { return f == Family::P ? "P" : "Q"; }

MultiPoly family_member(Family f, std::size_t r) {
  return f == Family::P ? p_polynomial(r) : q_polynomial(r);
}

Identity constant_term(Family f, std::size_t r) {
  MultiPoly lhs = specialize(family_member(f, r), Assignment{{0, Rational(0)}});
  const WeightContext rest{r - 1};
  MultiPoly rhs = falling_factorial(rest.K(label_range(1, static_cast<Label>(r - 1))) - rest.constant(1),
                                    static_cast<long>(r) - 2);
  return make_identity(std::move(lhs), std::move(rhs));
}

bool constant_term_check(std::size_t r) {
  return constant_term(Family::P, r).equal && constant_term(Family::Q, r).equal;
}

Identity finite_difference(Family f, std::size_t r) {
  const WeightContext ctx{r};
  const MultiPoly fr = family_member(f, r);

  std::vector<MultiPoly> shift;
  shift.push_back(ctx.k(1) + ctx.constant(1));
  for (Label l = 2; l <= static_cast<Label>(r); ++l) shift.push_back(ctx.k(l));
  MultiPoly lhs = compose(fr, shift, r) - fr;

  MultiPoly rhs(r);
  if (r >= 3) {
    const MultiPoly smaller = family_member(f, r - 1);
    for (Label i = 3; i <= static_cast<Label>(r); ++i) {
      std::vector<MultiPoly> images;
      images.push_back(ctx.k(1) + ctx.k(i));
      for (Label l = 2; l <= static_cast<Label>(r); ++l) {
        if (l != i) images.push_back(ctx.k(l));
      }
      rhs += compose(smaller, images, r);
    }
  }
  return make_identity(std::move(lhs), std::move(rhs));
}

bool finite_difference_check(std::size_t r) {
  return finite_difference(Family::P, r).equal && finite_difference(Family::Q, r).equal;
}

namespace {

MultiPoly k1_power(const WeightContext& ctx, std::size_t j) {
  MultiPoly::ExponentVector e(ctx.r, 0);
  e[0] = static_cast<MultiPoly::Exponent>(j);
  return MultiPoly::monomial(ctx.r, e);
}

MultiPoly block_product(const WeightContext& ctx, const std::vector<Label>& block) {
  MultiPoly::ExponentVector e(ctx.r, 0);
  for (Label l : block) e[static_cast<std::size_t>(l) - 1] = 1;
  return MultiPoly::monomial(ctx.r, e);
}

// prod_{l in X} k_l (K_X - 1)_{|X|-1}
MultiPoly lagrange_block(const WeightContext& ctx, const std::vector<Label>& block) {
  return block_product(ctx, block) *
         falling_factorial(ctx.K(block) - ctx.constant(1), size_of(block) - 1);
}

}  // namespace

RecurrenceCheck root_degree_recurrence(std::size_t r, unsigned threads, bool trace) {
  check_recurrence_size(r, 2, "root_degree_recurrence");
  const WeightContext ctx{r, 1};
  RecurrenceCheck out{make_identity(MultiPoly(r), MultiPoly(r)), theorem1_rhs(r), true, {}};
  TreeSums sums(ctx);
  MultiPoly rhs(r);
  for (const auto& partition : set_partitions(label_range(2, static_cast<Label>(r)))) {
    MultiPoly summand = k1_power(ctx, partition.size());
    MultiPoly closed = summand;
    MultiPoly lagrange = summand;
    for (const auto& block : partition) {
      const MultiPoly root_factor = ctx.K(block) - ctx.constant(size_of(block) - 1);
      summand *= root_factor * sums(block);
      closed *= root_factor * hook_product_formula(block, ctx);
      lagrange *= lagrange_block(ctx, block);
    }
    if (closed != lagrange) out.auxiliary = false;
    if (trace) out.trace.push_back({format_partition(partition), summand});
    rhs += summand;
  }
  out.identity = make_identity(theorem1_lhs(r, threads), std::move(rhs));
  return out;
}

bool root_degree_recurrence_check(std::size_t r) { return root_degree_recurrence(r).ok(); }

Identity mvl_identity(std::size_t r, std::vector<TraceEntry>* trace) {
  check_recurrence_size(r, 2, "mvl_identity");
  const WeightContext ctx{r};
  MultiPoly rhs(r);
  for (const auto& partition : set_partitions(label_range(2, static_cast<Label>(r)))) {
    MultiPoly summand = k1_power(ctx, partition.size());
    for (const auto& block : partition) summand *= lagrange_block(ctx, block);
    if (trace) trace->push_back({format_partition(partition), summand});
    rhs += summand;
  }
  return make_identity(theorem1_rhs(r), std::move(rhs));
}

bool mvl_identity_check(std::size_t r) { return mvl_identity(r).equal; }

namespace {

// Solves w_i = t_i (1 + sum w)^{k_i} by fixed-point iteration; each round
// fixes one more total degree, so r rounds reach the whole window.
std::vector<TruncatedSeries> solve_functional_equation(std::span<const long> kvals) {
  const std::size_t r = kvals.size();
  std::vector<TruncatedSeries> w(r, TruncatedSeries(r));
  for (std::size_t round = 0; round < r; ++round) {
    TruncatedSeries total(r);
    for (const auto& wi : w) total += wi;
    std::vector<TruncatedSeries> next;
    next.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      next.push_back(pow1p(total, Integer(kvals[i])).times_variable(i + 1));
    }
    w = std::move(next);
  }
  return w;
}

}  // namespace

SeriesOracle lagrange_series_oracle(std::span<const long> kvals) {
  const std::size_t r = kvals.size();
  if (r < 2) throw std::invalid_argument("lagrange_series_oracle: need r >= 2");
  if (r > TruncatedSeries::kMaxVariables) throw std::length_error("lagrange_series_oracle: r too large");
  SeriesOracle out;
  Integer total = 0;
  for (long k : kvals) {
    total += k;
    if (k <= 0) out.nonpositive_input = true;
  }
  const auto w = solve_functional_equation(kvals);
  out.series = w[0].top().get_num();
  out.closed_form = Integer(kvals[0]) * falling_factorial(Integer(total - 1), static_cast<unsigned>(r - 2));
  out.equal = is_integer(w[0].top()) && out.series == out.closed_form;
  return out;
}

LogOracle log_coefficient_oracle(std::span<const long> kvals, std::span<const Label> subset) {
  const std::size_t r = kvals.size();
  if (r < 1 || r > TruncatedSeries::kMaxVariables) {
    throw std::length_error("log_coefficient_oracle: unsupported r");
  }
  if (subset.empty()) throw std::invalid_argument("log_coefficient_oracle: empty subset");
  std::uint32_t mask = 0;
  Integer k_sum = 0;
  for (Label x : subset) {
    if (x < 1 || static_cast<std::size_t>(x) > r) {
      throw std::invalid_argument("log_coefficient_oracle: subset element outside [r]");
    }
    const std::uint32_t bit = std::uint32_t{1} << (x - 1);
    if (mask & bit) throw std::invalid_argument("log_coefficient_oracle: repeated subset element");
    mask |= bit;
    k_sum += kvals[static_cast<std::size_t>(x) - 1];
  }
  const auto w = solve_functional_equation(kvals);
  TruncatedSeries total(r);
  for (const auto& wi : w) total += wi;
  LogOracle out;
  out.series = log1p(total)[mask];
  out.closed_form = falling_factorial(Integer(k_sum - 1), static_cast<unsigned>(subset.size() - 1));
  out.equal = out.series == Rational(out.closed_form);
  return out;
}

}  // namespace hooklab
