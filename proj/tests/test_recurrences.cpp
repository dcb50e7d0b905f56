#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hooklab/recurrences.hpp"
#include "hooklab/truncated_series.hpp"
#include "support.hpp"

using namespace hooklab;
using hooklab::testing::c;
using hooklab::testing::k;

namespace {

// Keeps only multilinear monomials.
MultiPoly multilinear_part(const MultiPoly& p) {
  std::vector<std::pair<MultiPoly::ExponentVector, Rational>> terms;
  for (std::size_t t = 0; t < p.size(); ++t) {
    const auto e = p.exponents(t);
    if (std::all_of(e.begin(), e.end(), [](auto x) { return x <= 1; })) {
      terms.emplace_back(MultiPoly::ExponentVector(e.begin(), e.end()), p.coefficient(t));
    }
  }
  return MultiPoly::from_terms(p.nvars(), std::move(terms));
}

// [t_1...t_r] w_1 for nonnegative k, by fixed-point iteration on ordinary
// polynomials in t with truncation after every product.
Rational series_by_polynomials(const std::vector<long>& kvals) {
  const std::size_t r = kvals.size();
  std::vector<MultiPoly> w(r, MultiPoly(r));
  for (std::size_t round = 0; round < r; ++round) {
    MultiPoly base = c(r, 1);
    for (const auto& wi : w) base += wi;
    std::vector<MultiPoly> next;
    for (std::size_t i = 0; i < r; ++i) {
      MultiPoly power = c(r, 1);
      for (long e = 0; e < kvals[i]; ++e) power = multilinear_part(power * base);
      next.push_back(multilinear_part(power * MultiPoly::variable(r, i)));
    }
    w = std::move(next);
  }
  const MultiPoly::ExponentVector all(r, 1);
  return w[0].coefficient_of(all);
}

}  // namespace

TEST_CASE("subset splits and set partitions") {
  CHECK(subset_splits(std::vector<Label>{}).size() == 1);
  CHECK(subset_splits(label_range(3, 6)).size() == 16);
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto parts = set_partitions(label_range(1, static_cast<Label>(n)));
    CHECK(parts.size() == bell_number(n));
    std::set<SetPartition> distinct(parts.begin(), parts.end());
    CHECK(distinct.size() == parts.size());
    for (const auto& p : parts) {
      std::vector<Label> all;
      for (const auto& b : p) {
        CHECK_FALSE(b.empty());
        all.insert(all.end(), b.begin(), b.end());
      }
      std::sort(all.begin(), all.end());
      CHECK(all == label_range(1, static_cast<Label>(n)));
    }
  }
  CHECK(bell_number(5) == 52);
  CHECK(bell_number(6) == 203);
  CHECK(format_split(SubsetSplit{{3}, {4, 5}}) == "X1={3} X2={4,5}");
  CHECK(format_partition(SetPartition{{2, 4}, {3}}) == "{2,4}{3}");
}

TEST_CASE("grafting recurrence") {
  const RecurrenceCheck two = grafting_recurrence(2, 1, true);
  CHECK(two.trace.size() == 1);
  CHECK(two.identity.rhs == k(2, 1) * k(2, 2));
  CHECK(two.ok());
  const RecurrenceCheck three = grafting_recurrence(3, 1, true);
  CHECK(three.trace.size() == 2);
  CHECK(three.identity.rhs == theorem1_rhs(3));
  for (std::size_t r = 2; r <= 7; ++r) CHECK(grafting_recurrence_check(r));
  CHECK(grafting_recurrence(6, 1, true).trace.size() == 16);
}

TEST_CASE("P and Q") {
  CHECK(p_polynomial(2) == c(2, 1));
  CHECK(q_polynomial(2) == c(2, 1));
  std::vector<TraceEntry> trace;
  const MultiPoly p3 = p_polynomial(3, &trace);
  REQUIRE(trace.size() == 2);
  CHECK(p3 == k(3, 1) + k(3, 2) + k(3, 3) - c(3, 1));
  // X1 = {3} contributes k1, X1 = {} contributes k2 + k3 - 1.
  for (const auto& e : trace) {
    if (e.index == "X1={3} X2={}") CHECK(e.summand == k(3, 1));
    if (e.index == "X1={} X2={3}") CHECK(e.summand == k(3, 2) + k(3, 3) - c(3, 1));
  }
  for (std::size_t r = 2; r <= 7; ++r) CHECK(p_equals_q(r).equal);
}

TEST_CASE("constant term and finite difference") {
  CHECK(constant_term(Family::P, 2).lhs == MultiPoly::constant(1, 1));
  const Identity ct3 = constant_term(Family::P, 3);
  CHECK(ct3.lhs == k(2, 1) + k(2, 2) - c(2, 1));
  CHECK(ct3.equal);
  CHECK(finite_difference(Family::P, 2).lhs.is_zero());
  CHECK(finite_difference(Family::P, 2).equal);
  CHECK(finite_difference(Family::Q, 3).lhs == c(3, 1));
  CHECK(finite_difference(Family::Q, 3).equal);
  for (std::size_t r = 2; r <= 7; ++r) {
    CHECK(constant_term_check(r));
    CHECK(finite_difference_check(r));
  }
}

TEST_CASE("root degree recurrence and the Lagrange identity") {
  const RecurrenceCheck three = root_degree_recurrence(3, 1, true);
  CHECK(three.trace.size() == 2);
  CHECK(three.ok());
  std::vector<TraceEntry> trace;
  const Identity mvl3 = mvl_identity(3, &trace);
  CHECK(mvl3.equal);
  const MultiPoly K23 = k(3, 2) + k(3, 3);
  CHECK(mvl3.rhs == k(3, 1) * k(3, 2) * k(3, 3) * (K23 - c(3, 1)) +
                        k(3, 1) * k(3, 1) * k(3, 2) * k(3, 3));
  for (std::size_t r = 2; r <= 7; ++r) {
    CHECK(root_degree_recurrence_check(r));
    CHECK(mvl_identity_check(r));
  }
  CHECK(root_degree_recurrence(6, 1, true).trace.size() == 52);
}

TEST_CASE("recurrence budgets") {
  CHECK_THROWS_AS(grafting_recurrence(9), std::length_error);
  CHECK_THROWS_AS(p_polynomial(1), std::invalid_argument);
  CHECK_THROWS_AS(mvl_identity(9), std::length_error);
}

TEST_CASE("series oracle examples") {
  const std::vector<long> a{1, 1};
  CHECK(lagrange_series_oracle(a).series == 1);
  const std::vector<long> b{2, 1, 1};
  CHECK(lagrange_series_oracle(b).series == 6);
  const std::vector<long> d{1, 2, 3, 4};
  const SeriesOracle o = lagrange_series_oracle(d);
  CHECK(o.series == 72);
  CHECK(o.equal);
  CHECK_FALSE(o.nonpositive_input);
  const std::vector<long> neg{-2, 3, 0};
  const SeriesOracle n = lagrange_series_oracle(neg);
  CHECK(n.nonpositive_input);
  CHECK(n.equal);
}

TEST_CASE("property: series oracle against polynomial iteration") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> kd(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 2 + static_cast<std::size_t>(trial % 3);
    std::vector<long> kvals(r);
    for (auto& v : kvals) v = kd(rng);
    CHECK(Rational(lagrange_series_oracle(kvals).series) == series_by_polynomials(kvals));
  }
}

TEST_CASE("property: series oracle matches the closed form at random integers") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<long> kd(-5, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 2 + static_cast<std::size_t>(trial % 5);
    std::vector<long> kvals(r);
    for (auto& v : kvals) v = kd(rng);
    const SeriesOracle o = lagrange_series_oracle(kvals);
    Integer K = 0;
    for (long v : kvals) K += v;
    Integer expect = kvals[0];
    for (std::size_t i = 0; i + 2 < r; ++i) expect *= K - 1 - static_cast<long>(i);
    CHECK(o.series == expect);
    CHECK(o.equal);
  }
}

TEST_CASE("property: log coefficients") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> kd(-3, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 2 + static_cast<std::size_t>(trial % 4);
    std::vector<long> kvals(r);
    for (auto& v : kvals) v = kd(rng);
    for (const auto& split : subset_splits(label_range(1, static_cast<Label>(r)))) {
      if (split.first.empty()) continue;
      CHECK(log_coefficient_oracle(kvals, split.first).equal);
    }
  }
  const std::vector<long> kv{1, 2};
  CHECK_THROWS(log_coefficient_oracle(kv, std::vector<Label>{3}));
  CHECK_THROWS(log_coefficient_oracle(kv, std::vector<Label>{}));
}

TEST_CASE("truncated series basics") {
  const auto t1 = TruncatedSeries::variable(3, 1);
  const auto t2 = TruncatedSeries::variable(3, 2);
  const auto s = t1 + t2;
  const auto sq = s * s;
  CHECK(sq[0b011] == 2);
  CHECK(sq[0b001] == 0);
  const auto inv = pow1p(s, Integer(-1));
  CHECK(inv * (TruncatedSeries::constant(3, 1) + s) == TruncatedSeries::constant(3, 1));
  CHECK_THROWS(pow1p(TruncatedSeries::constant(3, 1), Integer(2)));
  CHECK(log1p(s)[0b011] == -1);
}
