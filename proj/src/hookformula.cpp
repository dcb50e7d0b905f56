#include "hooklab/hookformula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hooklab/budget.hpp"
#include "hooklab/parallel.hpp"

namespace hooklab {

namespace {

void require_size(std::size_t n, std::size_t default_max, const char* what) {
  const std::size_t max = budget_ceiling(default_max);
  if (n > max) {
    throw std::length_error(std::string(what) + ": size " + std::to_string(n) +
                            " exceeds the enumeration budget " + std::to_string(max));
  }
}

WeightContext ambient_for(const IncreasingTree& t) {
  return WeightContext{static_cast<std::size_t>(t.labels().back())};
}

void require_in_ring(const IncreasingTree& t, const WeightContext& ctx) {
  if (static_cast<std::size_t>(t.labels().back()) > ctx.r) {
    throw std::invalid_argument("label " + std::to_string(t.labels().back()) +
                                " has no variable among k_1..k_" + std::to_string(ctx.r));
  }
}

MultiPoly univariate_linear(const Rational& slope, const Rational& offset) {
  const MultiPoly::Exponent one = 1;
  return MultiPoly::monomial(1, std::span(&one, 1), slope) + MultiPoly::constant(1, offset);
}

MultiPoly add_polys(MultiPoly a, MultiPoly b) { return a += b; }

// Shared product of the hook formula weights: prod over non-root v of
// k_{f(v)} (K_{hook(v)} + shift(h(v))).
template <class Shift>
MultiPoly hook_weight(const IncreasingTree& t, const WeightContext& ctx, Shift shift) {
  require_in_ring(t, ctx);
  const HookTable table = hooks(t);
  MultiPoly::ExponentVector fathers(ctx.r, 0);
  MultiPoly product = ctx.constant(1);
  std::vector<std::size_t> vars;
  for (std::size_t i = 1; i < t.size(); ++i) {
    ++fathers[static_cast<std::size_t>(t.labels()[t.parent_index(i)]) - 1];
    vars.clear();
    for (Label u : table.hook_sets[i]) vars.push_back(static_cast<std::size_t>(u) - 1);
    product *= MultiPoly::linear(ctx.r, vars, shift(table.hook_sizes[i]));
  }
  return product.mul_monomial(fathers);
}

}  // namespace

MultiPoly WeightContext::K(std::span<const Label> labels) const {
  std::vector<std::size_t> vars;
  vars.reserve(labels.size());
  for (Label l : labels) vars.push_back(static_cast<std::size_t>(l) - 1);
  return MultiPoly::linear(r, vars);
}

Identity make_identity(MultiPoly lhs, MultiPoly rhs) {
  const bool eq = lhs == rhs;
  return Identity{std::move(lhs), std::move(rhs), eq};
}

MultiPoly wt(const IncreasingTree& t, const WeightContext& ctx) {
  return hook_weight(t, ctx, [](std::size_t h) { return Rational(1 - static_cast<long>(h)); });
}

MultiPoly wt(const IncreasingTree& t) { return wt(t, ambient_for(t)); }

MultiPoly wt_doubleprime(const IncreasingTree& t, const WeightContext& ctx) {
  return hook_weight(t, ctx, [](std::size_t) { return Rational(0); });
}

MultiPoly wt_doubleprime(const IncreasingTree& t) { return wt_doubleprime(t, ambient_for(t)); }

MultiPoly tree_weight_sum(std::span<const Label> labels, const WeightContext& ctx) {
  const auto sorted = normalize_labels(labels);
  require_size(sorted.size(), kMaxIncreasingSize, "tree_weight_sum");
  return parallel_fold(
      increasing_tree_count(sorted.size()), ctx.threads, ctx.constant(0),
      [&](std::uint64_t first, std::uint64_t last) {
        MultiPoly acc = ctx.constant(0);
        for_each_increasing(sorted, first, last,
                            [&](const IncreasingTree& t) { acc += wt(t, ctx); });
        return acc;
      },
      add_polys);
}

MultiPoly hook_product_formula(std::span<const Label> labels, const WeightContext& ctx) {
  const auto sorted = normalize_labels(labels);
  if (sorted.size() == 1) return ctx.constant(1);
  MultiPoly::ExponentVector all(ctx.r, 0);
  for (Label l : sorted) all[static_cast<std::size_t>(l) - 1] = 1;
  return falling_factorial(ctx.K(sorted) - ctx.constant(1), static_cast<long>(sorted.size()) - 2)
      .mul_monomial(all);
}

MultiPoly theorem1_lhs(std::size_t r, unsigned threads) {
  if (r < 1) throw std::invalid_argument("theorem1_lhs: r must be at least 1");
  return tree_weight_sum(label_range(1, static_cast<Label>(r)), WeightContext{r, threads});
}

MultiPoly theorem1_rhs(std::size_t r) {
  if (r < 1) throw std::invalid_argument("theorem1_rhs: r must be at least 1");
  return hook_product_formula(label_range(1, static_cast<Label>(r)), WeightContext{r});
}

Identity hook_formula(std::size_t r, unsigned threads) {
  return make_identity(theorem1_lhs(r, threads), theorem1_rhs(r));
}

Identity postnikov_analogue(std::size_t r, unsigned threads) {
  if (r < 1) throw std::invalid_argument("postnikov_analogue: r must be at least 1");
  require_size(r, kMaxIncreasingSize, "postnikov_analogue");
  const auto labels = label_range(1, static_cast<Label>(r));
  MultiPoly lhs = parallel_fold(
      increasing_tree_count(r), threads, MultiPoly(1),
      [&](std::uint64_t first, std::uint64_t last) {
        MultiPoly acc(1);
        for_each_increasing(labels, first, last, [&](const IncreasingTree& t) {
          MultiPoly prod = MultiPoly::constant(1, 1);
          for (std::size_t h : hook_sizes(shape_of(t))) prod *= univariate_linear(Rational(h), 1);
          acc += prod;
        });
        return acc;
      },
      add_polys);
  MultiPoly rhs = univariate_linear(1, 1);
  for (std::size_t i = 1; i < r; ++i) rhs *= univariate_linear(Rational(r), Rational(i));
  return make_identity(std::move(lhs), std::move(rhs));
}

SpecializationChain postnikov_specialization(std::size_t r, unsigned threads) {
  const Identity multivariate = hook_formula(r, threads);
  const Identity univariate = postnikov_analogue(r, threads);

  Assignment all_equal;
  for (std::size_t i = 1; i < r; ++i) all_equal[i] = VariableRef{0};
  const MultiPoly root_factor = univariate_linear(Rational(r), 1 - static_cast<long>(r));
  const MultiPoly x_as_k[] = {univariate_linear(1, -1)};
  const MultiPoly k_power = pow(univariate_linear(1, 0), static_cast<unsigned>(r - 1));

  auto left = [&](const MultiPoly& p) { return specialize(p, all_equal) * root_factor; };
  auto right = [&](const MultiPoly& p) { return k_power * compose(p, x_as_k, 1); };
  return SpecializationChain{
      make_identity(left(multivariate.lhs), right(univariate.lhs)),
      make_identity(left(multivariate.rhs), right(univariate.rhs)),
  };
}

Identity postnikov_binary(std::size_t n) {
  if (n < 1) throw std::invalid_argument("postnikov_binary: n must be at least 1");
  require_size(n, kMaxBinarySize, "postnikov_binary");
  const Integer n_factorial = factorial(static_cast<unsigned>(n));
  MultiPoly lhs(1);
  for (const auto& shape : enumerate_binary(static_cast<int>(n))) {
    Integer hook_product = 1;
    MultiPoly prod = MultiPoly::constant(1, 1);
    for (std::size_t h : hook_sizes(shape_of(shape))) {
      hook_product *= static_cast<unsigned long>(h);
      prod *= univariate_linear(Rational(h), 1);
    }
    lhs += prod * make_rational(n_factorial, hook_product);
  }
  MultiPoly rhs = MultiPoly::constant(1, make_rational(1, static_cast<long>(n) + 1));
  for (std::size_t i = 0; i < n; ++i) {
    rhs *= univariate_linear(Rational(n + 1 + i), Rational(static_cast<long>(n + 1) - static_cast<long>(i)));
  }
  return make_identity(std::move(lhs), std::move(rhs));
}

std::uint64_t count_linear_extensions(const RootedShape& shape) {
  const std::size_t n = shape.size();
  require_size(n, kMaxLinearExtensionSize, "count_linear_extensions");
  if (n == 0) return 1;
  // ways[mask]: orderings of the vertex set `mask` that respect the tree.
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::size_t mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (std::size_t{1} << v)) continue;
      const int p = shape.parent[v];
      const bool available = p < 0 ? mask == 0 : (mask & (std::size_t{1} << p)) != 0;
      if (available) ways[mask | (std::size_t{1} << v)] += ways[mask];
    }
  }
  return ways.back();
}

KnuthCheck knuth_hook_check(const RootedShape& shape) {
  const std::uint64_t lext = count_linear_extensions(shape);
  Integer hook_product = 1;
  for (std::size_t h : hook_sizes(shape)) hook_product *= static_cast<unsigned long>(h);
  const Rational quotient = make_rational(factorial(static_cast<unsigned>(shape.size())), hook_product);
  const bool equal = is_integer(quotient) && quotient == Rational(Integer(std::to_string(lext)));
  return KnuthCheck{lext, quotient, equal};
}

Rational hook_sum_binary(std::size_t n) {
  if (n < 1) throw std::invalid_argument("hook_sum_binary: n must be at least 1");
  require_size(n, kMaxBinarySize, "hook_sum_binary");
  Rational total = 0;
  for (const auto& shape : enumerate_binary(static_cast<int>(n))) {
    Integer hook_product = 1;
    for (std::size_t h : hook_sizes(shape_of(shape))) hook_product *= static_cast<unsigned long>(h);
    total += make_rational(Integer(1), hook_product);
  }
  return total;
}

namespace {

MultiPoly degree_monomial(const CayleyTree& u, std::size_t r) {
  const auto deg = degree_vector(u);
  MultiPoly::ExponentVector e(r, 0);
  for (std::size_t i = 0; i < deg.size(); ++i) {
    e[static_cast<std::size_t>(u.vertices()[i]) - 1] = static_cast<MultiPoly::Exponent>(deg[i]);
  }
  return MultiPoly::monomial(r, e);
}

void check_cayley_size(std::size_t r, const char* what) {
  if (r < 1) throw std::invalid_argument(std::string(what) + ": r must be at least 1");
  require_size(r, kMaxCayleySize, what);
}

}  // namespace

std::map<IncreasingTree, MultiPoly> fiber_table(std::size_t r, unsigned threads) {
  check_cayley_size(r, "fiber_table");
  using Table = std::map<IncreasingTree, MultiPoly>;
  return parallel_fold(
      cayley_count(r), threads, Table{},
      [r](std::uint64_t first, std::uint64_t last) {
        Table table;
        for_each_cayley(r, first, last, [&](const CayleyTree& u) {
          auto [it, inserted] = table.try_emplace(phi(u), MultiPoly(r));
          it->second += degree_monomial(u, r);
        });
        return table;
      },
      [r](Table acc, Table part) {
        for (auto& [tree, poly] : part) {
          auto [it, inserted] = acc.try_emplace(tree, MultiPoly(r));
          it->second += poly;
        }
        return acc;
      });
}

MultiPoly fiber_sum(const IncreasingTree& t, std::size_t r) {
  if (t.labels() != label_range(1, static_cast<Label>(r))) {
    throw std::invalid_argument("fiber_sum: tree labels must be [r]");
  }
  const auto table = fiber_table(r);
  auto it = table.find(t);
  return it == table.end() ? MultiPoly(r) : it->second;
}

CayleyCheck cayley_identity(std::size_t r, unsigned threads) {
  if (r < 2) throw std::invalid_argument("cayley_identity: r must be at least 2");
  check_cayley_size(r, "cayley_identity");
  const WeightContext ctx{r, threads};
  MultiPoly lhs = parallel_fold(
      cayley_count(r), threads, MultiPoly(r),
      [r](std::uint64_t first, std::uint64_t last) {
        MultiPoly acc(r);
        for_each_cayley(r, first, last, [&](const CayleyTree& u) { acc += degree_monomial(u, r); });
        return acc;
      },
      add_polys);
  const auto labels = label_range(1, static_cast<Label>(r));
  MultiPoly::ExponentVector all(r, 1);
  MultiPoly rhs = pow(ctx.K(labels), static_cast<unsigned>(r - 2)).mul_monomial(all);
  MultiPoly via = parallel_fold(
      increasing_tree_count(r), threads, MultiPoly(r),
      [&](std::uint64_t first, std::uint64_t last) {
        MultiPoly acc(r);
        for_each_increasing(labels, first, last,
                            [&](const IncreasingTree& t) { acc += wt_doubleprime(t, ctx); });
        return acc;
      },
      add_polys);
  const bool eq = lhs == rhs && via == rhs;
  return CayleyCheck{std::move(lhs), std::move(rhs), std::move(via), eq};
}

FiberCheck fiber_check(std::size_t r, unsigned threads) {
  const auto table = fiber_table(r, threads);
  const WeightContext ctx{r, threads};
  const std::vector<Rational> ones(r, Rational(1));
  FiberCheck out;
  out.cayley_trees = cayley_count(r);
  out.fiber_total = MultiPoly(r);
  out.doubleprime_total = MultiPoly(r);
  out.surjective = true;
  Integer covered = 0;
  for_each_increasing(label_range(1, static_cast<Label>(r)), [&](const IncreasingTree& t) {
    ++out.trees;
    const MultiPoly w2 = wt_doubleprime(t, ctx);
    out.doubleprime_total += w2;
    auto it = table.find(t);
    if (it == table.end()) {
      out.surjective = false;
      ++out.mismatches;
      return;
    }
    out.fiber_total += it->second;
    covered += evaluate(it->second, ones).get_num();
    if (it->second != w2 || w2 != top_homogeneous(wt(t, ctx))) ++out.mismatches;
  });
  // Every key is an increasing tree on [r] and the fiber sizes add up to the
  // number of Cayley trees, so each Cayley tree sits in exactly one fiber.
  out.partition = table.size() == out.trees &&
                  covered == Integer(std::to_string(out.cayley_trees));
  return out;
}

}  // namespace hooklab
