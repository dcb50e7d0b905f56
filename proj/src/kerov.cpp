#include "hooklab/kerov.hpp"

#include <stdexcept>
#include <string>

#include "hooklab/budget.hpp"
#include "hooklab/hookformula.hpp"
#include "hooklab/parallel.hpp"

namespace hooklab {

namespace {

void require_nonempty(const IntPartition& mu, const char* what) {
  if (mu.length() == 0) throw std::invalid_argument(std::string(what) + ": empty partition");
}

void require_countable(const IntPartition& mu, const char* what) {
  require_nonempty(mu, what);
  const auto max = budget_ceiling(kMaxFactorizationSize);
  if (static_cast<std::size_t>(mu.size()) > max) {
    throw std::length_error(std::string(what) + ": |mu| = " + std::to_string(mu.size()) +
                            " exceeds the budget " + std::to_string(max));
  }
}

Integer factorial_of(int n) { return factorial(static_cast<unsigned>(n)); }

}  // namespace

FactorizationCount factorization_census(const IntPartition& mu, unsigned threads) {
  require_countable(mu, "count_factorizations");
  const auto n = static_cast<std::size_t>(mu.size());
  const Permutation target = sigma_mu(mu);
  const auto wanted = static_cast<std::size_t>(mu.j() - 1);

  auto merge = [](FactorizationCount a, FactorizationCount b) {
    a.total += b.total;
    for (auto& [type, c] : b.by_type) a.by_type[type] += c;
    a.cycle_counts_ok = a.cycle_counts_ok && b.cycle_counts_ok;
    return a;
  };
  return parallel_fold(
      long_cycle_count(n), threads, FactorizationCount{},
      [&](std::uint64_t first, std::uint64_t last) {
        FactorizationCount part;
        for (std::uint64_t i = first; i < last; ++i) {
          const Permutation s2 = long_cycle_at(n, i);
          const Permutation s1 = target * s2.inverse();
          if (s1.cycle_count() != wanted) continue;
          if (s2.cycle_count() != 1 || s1 * s2 != target) part.cycle_counts_ok = false;
          part.total += 1;
          part.by_type[s1.cycle_type()] += 1;
        }
        return part;
      },
      merge);
}

Integer count_factorizations(const IntPartition& mu, unsigned threads) {
  return factorization_census(mu, threads).total;
}

Rational bedard_goupil(const IntPartition& lambda, const IntPartition& mu) {
  require_nonempty(mu, "bedard_goupil");
  if (lambda.size() != mu.size()) throw std::invalid_argument("bedard_goupil: |lambda| != |mu|");
  if (static_cast<int>(lambda.length()) != mu.j() - 1) {
    throw std::invalid_argument("bedard_goupil: l(lambda) must equal j - 1");
  }
  Integer den = 1;
  for (const auto& [part, m] : lambda.multiplicities()) den *= factorial_of(m);
  const Integer num = factorial_of(static_cast<int>(mu.length()) - 1) * factorial_of(mu.j() - 2) *
                      mu.part_product();
  return make_rational(num, den);
}

Rational bedard_goupil_sum(const IntPartition& mu) {
  require_nonempty(mu, "bedard_goupil_sum");
  Rational sum = 0;
  for (const auto& lambda : partitions_of(mu.size(), static_cast<std::size_t>(mu.j() - 1))) {
    sum += bedard_goupil(lambda, mu);
  }
  return sum;
}

bool binomial_simplification_check(const IntPartition& mu) {
  if (mu.length() == 0) return false;
  Rational sum = 0;
  for (const auto& lambda : partitions_of(mu.size(), static_cast<std::size_t>(mu.j() - 1))) {
    Integer den = 1;
    for (const auto& [part, m] : lambda.multiplicities()) den *= factorial_of(m);
    sum += make_rational(factorial_of(mu.j() - 1), den);
  }
  return sum == Rational(binomial(mu.size() - 1, static_cast<unsigned>(mu.j() - 2)));
}

Rational prop2_value(const IntPartition& mu) {
  require_nonempty(mu, "prop2_value");
  const int l = static_cast<int>(mu.length());
  Rational v = make_rational(mu.part_product() * factorial_of(mu.size() - 1),
                             factorial_of(mu.size() - l + 1));
  return l % 2 == 1 ? v : Rational(-v);
}

Integer factorization_closed_form(const IntPartition& mu) {
  require_nonempty(mu, "factorization_closed_form");
  if (mu.length() == 1) return 1;
  return mu.part_product() *
         falling_factorial(Integer(mu.size() - 1), static_cast<unsigned>(mu.length() - 2));
}

Integer tree_sum_at(const IntPartition& mu, unsigned threads) {
  require_nonempty(mu, "tree_sum_at");
  const std::size_t r = mu.length();
  if (r > budget_ceiling(kMaxIncreasingSize)) throw std::length_error("tree_sum_at: too many parts");
  const auto labels = label_range(1, static_cast<Label>(r));
  auto k = [&](Label l) { return mu.parts()[static_cast<std::size_t>(l) - 1]; };
  return parallel_fold(
      increasing_tree_count(r), threads, Integer(0),
      [&](std::uint64_t first, std::uint64_t last) {
        Integer acc = 0;
        for_each_increasing(labels, first, last, [&](const IncreasingTree& t) {
          const HookTable table = hooks(t);
          Integer w = 1;
          for (std::size_t i = 1; i < table.vertices.size(); ++i) {
            long hook_k = 0;
            for (Label u : table.hook_sets[i]) hook_k += k(u);
            w *= k(*t.parent(table.vertices[i])) *
                 (hook_k - static_cast<long>(table.hook_sizes[i]) + 1);
          }
          acc += w;
        });
        return acc;
      },
      [](Integer a, const Integer& b) { return Integer(a + b); });
}

bool KerovRow::ok() const {
  return brute_count == closed_form && Rational(brute_count) == bedard_goupil_sum &&
         abs(prop2) == Rational(brute_count) && by_type_ok && cycle_counts_ok && binomial_ok &&
         bridge_ok;
}

KerovRow kerov_row(const IntPartition& mu, unsigned threads) {
  require_countable(mu, "kerov_row");
  KerovRow row;
  row.mu = mu;
  row.j = mu.j();
  const FactorizationCount census = factorization_census(mu, threads);
  row.brute_count = census.total;
  row.cycle_counts_ok = census.cycle_counts_ok;
  row.bedard_goupil_sum = bedard_goupil_sum(mu);
  row.prop2 = prop2_value(mu);
  row.closed_form = factorization_closed_form(mu);

  row.by_type_ok = true;
  for (const auto& lambda : partitions_of(mu.size(), static_cast<std::size_t>(mu.j() - 1))) {
    const auto it = census.by_type.find(lambda);
    const Integer brute = it == census.by_type.end() ? Integer(0) : it->second;
    if (Rational(brute) != bedard_goupil(lambda, mu)) row.by_type_ok = false;
  }
  for (const auto& [type, c] : census.by_type) {
    if (static_cast<int>(type.length()) != mu.j() - 1) row.by_type_ok = false;
  }
  row.binomial_ok = binomial_simplification_check(mu);

  const std::size_t r = mu.length();
  std::vector<Rational> point(mu.parts().begin(), mu.parts().end());
  const Rational rhs = evaluate(theorem1_rhs(r), point);
  row.rhs_value = rhs.get_num();
  row.tree_value = tree_sum_at(mu, threads);
  row.bridge_ok = is_integer(rhs) && abs(row.prop2) == Rational(row.brute_count) &&
                  row.brute_count == row.rhs_value && row.rhs_value == row.tree_value;
  return row;
}

bool kerov_tree_bridge(const IntPartition& mu, unsigned threads) {
  return kerov_row(mu, threads).bridge_ok;
}

}  // namespace hooklab
