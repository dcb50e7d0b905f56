#include <doctest.h>

#include <random>

#include "hooklab/multipoly.hpp"
#include "support.hpp"

using namespace hooklab;
using hooklab::testing::c;
using hooklab::testing::k;
using hooklab::testing::NaivePoly;

TEST_CASE("addition examples") {
  CHECK((k(1, 1) + (-k(1, 1))).is_zero());
  CHECK((k(2, 1) * k(2, 2) + k(2, 1) * k(2, 2)) == Rational(2) * k(2, 1) * k(2, 2));
  const MultiPoly sum = (k(3, 1) + k(3, 2)) + (k(3, 2) + k(3, 3));
  CHECK(sum == k(3, 1) + Rational(2) * k(3, 2) + k(3, 3));
  CHECK(to_string(sum) == "k1 + 2*k2 + k3");
}

TEST_CASE("multiplication examples") {
  CHECK((k(2, 1) + k(2, 2)) * (k(2, 1) - k(2, 2)) == k(2, 1) * k(2, 1) - k(2, 2) * k(2, 2));
  const MultiPoly p = k(3, 1) * k(3, 2) - c(3, 4) * k(3, 3);
  CHECK(c(3, 1) * p == p);
  const MultiPoly triple = k(3, 1) * k(3, 2) * k(3, 3);
  CHECK(triple.size() == 1);
  CHECK(to_string(triple) == "k1*k2*k3");
}

TEST_CASE("falling factorial examples") {
  const MultiPoly K = k(3, 1) + k(3, 2) + k(3, 3);
  CHECK(falling_factorial(K, 0) == c(3, 1));
  const MultiPoly a = k(2, 1) + k(2, 2) - c(2, 1);
  CHECK(falling_factorial(a, 1) == a);
  const MultiPoly b = K - c(3, 1);
  CHECK(falling_factorial(b, 2) == b * (b - c(3, 1)));
  CHECK_THROWS_AS(falling_factorial(b, -1), std::domain_error);
}

TEST_CASE("specialize examples") {
  const MultiPoly rhs2 = k(2, 1) * k(2, 2);
  CHECK(specialize(rhs2, {{0, Rational(2)}, {1, Rational(2)}}) == MultiPoly::constant(0, 4));

  const MultiPoly s = k(3, 1) + k(3, 2) + k(3, 3);
  CHECK(specialize(s, {{2, Rational(0)}}) == k(2, 1) + k(2, 2));

  // k1 k2 k3 (K - 1) with every k_i sent to k1.
  const MultiPoly rhs3 = k(3, 1) * k(3, 2) * k(3, 3) * (s - c(3, 1));
  const MultiPoly uni = specialize(rhs3, {{1, VariableRef{0}}, {2, VariableRef{0}}});
  const MultiPoly x = MultiPoly::variable(1, 0);
  CHECK(uni == x * x * x * (MultiPoly::constant(1, 3) * x - MultiPoly::constant(1, 1)));

  CHECK_THROWS(specialize(s, {{0, VariableRef{1}}, {1, Rational(1)}}));
}

TEST_CASE("top homogeneous component") {
  CHECK(top_homogeneous(k(2, 1) * k(2, 2) + k(2, 1)) == k(2, 1) * k(2, 2));
  const MultiPoly p = k(3, 1) * (k(3, 2) + k(3, 3) - c(3, 1)) * k(3, 2) * k(3, 3);
  CHECK(top_homogeneous(p) == k(3, 1) * k(3, 2) * k(3, 3) * (k(3, 2) + k(3, 3)));
  CHECK(top_homogeneous(c(2, 7)) == c(2, 7));
  CHECK_THROWS_AS(top_homogeneous(MultiPoly(2)), std::domain_error);
}

TEST_CASE("ring mismatch is an error") {
  CHECK_THROWS_AS(k(2, 1) + k(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(k(2, 1) * k(3, 1), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(to_string(MultiPoly(2)) == "0");
  CHECK(to_string(-k(2, 1)) == "-k1");
  CHECK(to_string(Rational(2) * k(3, 1) * k(3, 1) * k(3, 2) - k(3, 3)) == "2*k1^2*k2 - k3");
  CHECK(to_string(make_rational(1, 2) * k(1, 1) - c(1, 3)) == "1/2*k1 - 3");
}

TEST_CASE("property: arithmetic agrees with the naive reference") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const NaivePoly a = hooklab::testing::random_naive(rng, n, 8, 3);
    const NaivePoly b = hooklab::testing::random_naive(rng, n, 8, 3);
    const MultiPoly pa = a.to_multipoly();
    const MultiPoly pb = b.to_multipoly();
    CHECK(pa + pb == (a + b).to_multipoly());
    CHECK(pa * pb == (a * b).to_multipoly());
    CHECK(pa * pb == pb * pa);
    CHECK(pa - pa == MultiPoly(n));
    CHECK((pa + pb) - pb == pa);
  }
}

TEST_CASE("property: canonical form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const MultiPoly p = hooklab::testing::random_naive(rng, n, 10, 4).to_multipoly() *
                        hooklab::testing::random_naive(rng, n, 5, 2).to_multipoly();
    for (std::size_t t = 0; t < p.size(); ++t) {
      CHECK(p.coefficient(t) != 0);
      CHECK(p.exponents(t).size() == n);
      if (t > 0) {
        const auto prev = p.exponents(t - 1);
        const auto cur = p.exponents(t);
        CHECK(std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(), cur.end()));
      }
    }
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const MultiPoly a = hooklab::testing::random_naive(rng, n, 6, 3).to_multipoly();
    const MultiPoly b = hooklab::testing::random_naive(rng, n, 6, 3).to_multipoly();
    const auto x = hooklab::testing::random_point(rng, n);
    CHECK(evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x));
    CHECK(evaluate(a + b, x) == evaluate(a, x) + evaluate(b, x));
  }
}

TEST_CASE("property: compose and specialize agree with evaluation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly p = hooklab::testing::random_naive(rng, 3, 6, 3).to_multipoly();
    // p(k1 + k2, k2, 1 - k1) evaluated at x equals p at the transformed point.
    const std::vector<MultiPoly> images{k(2, 1) + k(2, 2), k(2, 2), c(2, 1) - k(2, 1)};
    const auto x = hooklab::testing::random_point(rng, 2);
    const std::vector<Rational> moved{x[0] + x[1], x[1], 1 - x[0]};
    CHECK(evaluate(compose(p, images, 2), x) == evaluate(p, moved));

    const auto y = hooklab::testing::random_point(rng, 3);
    const MultiPoly partial = specialize(p, {{1, y[1]}});
    const std::vector<Rational> rest{y[0], y[2]};
    CHECK(evaluate(partial, rest) == evaluate(p, y));
  }
}

TEST_CASE("falling factorial matches repeated products") {
  std::mt19937 rng(11);
  for (long m = 0; m <= 5; ++m) {
    const MultiPoly p = hooklab::testing::random_naive(rng, 2, 3, 2).to_multipoly();
    MultiPoly expect = c(2, 1);
    for (long i = 0; i < m; ++i) expect *= p - c(2, i);
    CHECK(falling_factorial(p, m) == expect);
  }
}

TEST_CASE("divide by monomial") {
  const MultiPoly p = k(2, 1) * k(2, 1) * k(2, 2) + k(2, 1) * k(2, 2);
  const std::vector<MultiPoly::Exponent> e{1, 1};
  const auto q = divide_by_monomial(p, e);
  REQUIRE(q.has_value());
  CHECK(*q == k(2, 1) + c(2, 1));
  const std::vector<MultiPoly::Exponent> too_much{2, 1};
  CHECK_FALSE(divide_by_monomial(p, too_much).has_value());
}

TEST_CASE("json round trip and hashing") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = hooklab::testing::random_naive(rng, 3, 8, 3).to_multipoly();
    const auto j = to_json(p);
    CHECK(multipoly_from_json(j) == p);
    CHECK(multipoly_from_json(nlohmann::json::parse(j.dump())) == p);
    CHECK(canonical_hash(p) == canonical_hash(multipoly_from_json(j)));
  }
  CHECK(canonical_hash(k(2, 1)) != canonical_hash(k(3, 1)));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("rationals") {
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(make_rational(4, -6) == make_rational(-2, 3));
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(factorial(6) == 720);
  CHECK(falling_factorial(Integer(9), 2) == 72);
}
