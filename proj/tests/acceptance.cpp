// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>

#include "hooklab/cli.hpp"
#include "hooklab/hookformula.hpp"
#include "hooklab/kerov.hpp"
#include "hooklab/recurrences.hpp"

using namespace hooklab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note = what;
      pass = false;
    }
  }
};

MultiPoly var(std::size_t r, std::size_t i) { return MultiPoly::variable(r, i - 1); }

// 1. Hook formula for r = 1..8.
Outcome hook_formula_sweep() {
  constexpr double kSmallLimit = 1.0;
  constexpr double kLargeLimit = 60.0;
  Outcome o;
  const auto small_start = Clock::now();
  for (std::size_t r = 1; r <= 6; ++r) o.require(hook_formula(r).equal, "r=" + std::to_string(r));
  const double small = seconds_since(small_start);
  o.require(hook_formula(7).equal, "r=7");
  const auto large_start = Clock::now();
  const Identity eight = hook_formula(8);
  const double large = seconds_since(large_start);
  o.require(eight.equal, "r=8");
  o.require(small < kSmallLimit, "r<=6 took " + std::to_string(small) + " s");
  o.require(large < kLargeLimit, "r=8 took " + std::to_string(large) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << "r<=6 in " << small << " s, r=8 (5040 trees, " << eight.lhs.size() << " terms) in "
      << large << " s";
    o.note = s.str();
  }
  return o;
}

// 2. The 9-vertex example tree against its printed weight.
Outcome figure_fixture() {
  Outcome o;
  const std::size_t r = 9;
  const IncreasingTree t(label_range(1, 9),
                         {{2, 1}, {3, 2}, {4, 1}, {5, 2}, {6, 5}, {7, 4}, {8, 5}, {9, 2}});
  auto k = [&](std::size_t i) { return var(r, i); };
  auto c = [&](long v) { return MultiPoly::constant(r, v); };
  const MultiPoly displayed = k(1) * (k(2) + k(3) + k(5) + k(6) + k(8) + k(9) - c(5)) * k(2) *
                              k(3) * k(1) * (k(4) + k(7) - c(1)) * k(2) *
                              (k(5) + k(6) + k(8) - c(2)) * k(5) * k(6) * k(4) * k(7) * k(5) *
                              k(8) * k(2) * k(9);
  const MultiPoly w = wt(t);
  o.require(w == displayed, "weight differs from the displayed product");
  o.note = std::to_string(w.size()) + " terms, exact match";
  return o;
}

// 3. Equal-parameter identity and its derivation from the multivariate one.
Outcome equal_parameter() {
  Outcome o;
  for (std::size_t r = 1; r <= 8; ++r) {
    o.require(postnikov_analogue(r).equal, "identity at r=" + std::to_string(r));
    const SpecializationChain chain = postnikov_specialization(r);
    o.require(chain.tree_side.equal, "tree-side chain at r=" + std::to_string(r));
    o.require(chain.closed_side.equal, "closed-side chain at r=" + std::to_string(r));
  }
  if (o.pass) o.note = "r=1..8, identity and both specialization chains";
  return o;
}

// 4. Hook length formula on rooted trees, binary hook sums.
Outcome hook_counts() {
  constexpr double kLimit = 10.0;
  Outcome o;
  const auto start = Clock::now();
  std::uint64_t trees = 0;
  for (Label n = 1; n <= 8; ++n) {
    for_each_increasing(label_range(1, n), [&](const IncreasingTree& t) {
      ++trees;
      o.require(knuth_hook_check(shape_of(t)).equal, "linear extensions differ");
    });
  }
  std::uint64_t shapes = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    shapes += catalan(n);
    o.require(hook_sum_binary(n) == 1, "binary hook sum at n=" + std::to_string(n));
    o.require(postnikov_binary(n).equal, "binary identity at n=" + std::to_string(n));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < kLimit, "took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << trees << " rooted trees, " << shapes << " binary shapes in " << elapsed << " s";
    o.note = s.str();
  }
  return o;
}

// 5. Cayley identity and the fiber description.
Outcome cayley_and_fibers() {
  Outcome o;
  for (std::size_t r = 2; r <= 6; ++r) {
    const CayleyCheck c = cayley_identity(r);
    o.require(c.equal && c.via_doubleprime == c.rhs, "Cayley identity at r=" + std::to_string(r));
  }
  for (std::size_t r = 1; r <= 6; ++r) {
    const auto table = fiber_table(r);
    for_each_increasing(label_range(1, static_cast<Label>(r)), [&](const IncreasingTree& t) {
      const MultiPoly dp = wt_doubleprime(t);
      const auto it = table.find(t);
      o.require(it != table.end() && it->second == dp, "fiber sum differs");
      o.require(top_homogeneous(wt(t)) == dp, "top component differs");
    });
    const FiberCheck f = fiber_check(r);
    o.require(f.ok(), "fiber check at r=" + std::to_string(r));
  }
  if (o.pass) o.note = "r<=6 (1296 Cayley trees at r=6), surjective, fibers partition";
  return o;
}

// 6. Grafting recurrence and the P = Q argument.
Outcome grafting_section() {
  Outcome o;
  for (std::size_t r = 2; r <= 7; ++r) {
    const std::string at = " at r=" + std::to_string(r);
    o.require(p_equals_q(r).equal, "P != Q" + at);
    o.require(constant_term(Family::P, r).equal && constant_term(Family::Q, r).equal,
              "constant term" + at);
    o.require(finite_difference(Family::P, r).equal && finite_difference(Family::Q, r).equal,
              "finite difference" + at);
    o.require(grafting_recurrence(r).ok(), "grafting" + at);
  }
  if (o.pass) o.note = "r=2..7";
  return o;
}

// 7. Root-degree recurrence, Lagrange identity, series oracle.
Outcome lagrange_section() {
  Outcome o;
  for (std::size_t r = 2; r <= 7; ++r) {
    o.require(root_degree_recurrence(r).ok(), "root recurrence at r=" + std::to_string(r));
    o.require(mvl_identity(r).equal, "Lagrange identity at r=" + std::to_string(r));
  }
  std::vector<TraceEntry> trace;
  mvl_identity(7, &trace);
  o.require(trace.size() == 203, "expected 203 partitions at r=7");

  std::mt19937 rng(20240917);
  std::uniform_int_distribution<std::size_t> rd(2, 6);
  std::uniform_int_distribution<long> kd(-4, 9);
  for (int i = 0; i < 50; ++i) {
    std::vector<long> kvals(rd(rng));
    for (auto& v : kvals) v = kd(rng);
    const SeriesOracle s = lagrange_series_oracle(kvals);
    o.require(s.equal, "series oracle instance " + std::to_string(i));
  }
  if (o.pass) o.note = "r=2..7, 203 partitions at r=7, 50 series instances";
  return o;
}

// 8. Factorization counts and the tree bridge.
Outcome factorizations() {
  constexpr double kLimit = 30.0;
  Outcome o;
  const auto start = Clock::now();
  std::size_t partitions = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      ++partitions;
      const KerovRow row = kerov_row(mu);
      o.require(row.ok(), "row " + mu.to_string());
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < kLimit, "took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << partitions << " partitions with |mu|<=8 in " << elapsed << " s";
    o.note = s.str();
  }
  return o;
}

// 9. Enumerator counts at the budgets, with duplicate detection.
Outcome counting() {
  Outcome o;
  for (std::size_t r = 1; r <= kMaxIncreasingSize; ++r) {
    std::unordered_set<std::string> seen;
    std::uint64_t n = 0;
    for_each_increasing(label_range(1, static_cast<Label>(r)), [&](const IncreasingTree& t) {
      std::string key;
      for (std::size_t i = 1; i < t.size(); ++i) key.push_back(static_cast<char>(t.parent_index(i)));
      seen.insert(std::move(key));
      ++n;
    });
    Integer expect = factorial(static_cast<unsigned>(r - 1));
    o.require(Integer(std::to_string(n)) == expect && seen.size() == n,
              "increasing r=" + std::to_string(r));
  }
  for (std::size_t r = 1; r <= kMaxCayleySize; ++r) {
    const auto trees = enumerate_cayley(r);
    std::unordered_set<CayleyTree> seen(trees.begin(), trees.end());
    std::uint64_t expect = 1;
    for (std::size_t i = 2; i < r; ++i) expect *= r;
    o.require(trees.size() == expect && seen.size() == expect, "cayley r=" + std::to_string(r));
  }
  for (int n = 0; n <= static_cast<int>(kMaxBinarySize); ++n) {
    const auto shapes = enumerate_binary(n);
    std::unordered_set<BinaryTree> seen(shapes.begin(), shapes.end());
    // Catalan numbers from the convolution recurrence.
    std::vector<std::uint64_t> cat{1};
    for (int m = 1; m <= n; ++m) {
      std::uint64_t s = 0;
      for (int i = 0; i < m; ++i) s += cat[static_cast<std::size_t>(i)] * cat[static_cast<std::size_t>(m - 1 - i)];
      cat.push_back(s);
    }
    o.require(shapes.size() == cat.back() && seen.size() == cat.back(),
              "binary n=" + std::to_string(n));
  }
  if (o.pass) o.note = "increasing r<=10, cayley r<=7, binary n<=12";
  return o;
}

std::vector<nlohmann::json> verify_all(const std::vector<std::string>& extra) {
  std::vector<std::string> args{"hooklab", "verify", "all", "--json"};
  args.insert(args.end(), extra.begin(), extra.end());
  std::ostringstream out;
  std::ostringstream err;
  if (run_cli(args, out, err) != 0) return {};
  std::vector<nlohmann::json> recs;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    auto j = nlohmann::json::parse(line);
    j.erase("elapsed_ms");
    recs.push_back(std::move(j));
  }
  return recs;
}

// 10. Reports are reproducible and independent of the thread count.
Outcome determinism() {
  Outcome o;
  const auto first = verify_all({});
  const auto second = verify_all({});
  const auto threaded = verify_all({"--threads", "4"});
  o.require(!first.empty(), "verify all did not pass");
  o.require(first == second, "two runs differ");
  o.require(first == threaded, "--threads 4 differs");
  if (o.pass) {
    o.note = std::to_string(first.size() - 1) + " verdicts across " +
             std::to_string(first.back()["summary"]["family_count"].get<std::size_t>()) +
             " families, identical three times";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"hook formula r=1..8", hook_formula_sweep},
      {"9-vertex example weight", figure_fixture},
      {"equal-parameter identity r<=8", equal_parameter},
      {"hook length formulas", hook_counts},
      {"Cayley identity and fibers", cayley_and_fibers},
      {"grafting and P=Q", grafting_section},
      {"root recurrence and Lagrange", lagrange_section},
      {"factorization counts", factorizations},
      {"enumerator counts", counting},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.note << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
