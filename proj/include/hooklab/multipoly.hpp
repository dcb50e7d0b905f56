#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hooklab/rational.hpp"

namespace hooklab {

/*
 * MultiPoly
 * ---------
 * Sparse polynomial in a fixed number of variables with exact rational
 * coefficients. Variable i stands for k_{i+1} in the tree identities (or x
 * when the ring is univariate).
 *
 * Terms are kept sorted by ascending lexicographic order of their exponent
 * vectors, with no zero coefficients. Exponents are stored flat, term after
 * term, so a polynomial with t terms in n variables owns t*n exponents. With
 * that canonical form equality is plain storage equality.
 *
 * Mixing polynomials with different variable counts is an error; nothing is
 * promoted implicitly.
 */
class MultiPoly {
 public:
  using Exponent = std::uint32_t;
  using ExponentVector = std::vector<Exponent>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(std::size_t nvars, std::span<const Exponent> exps,
                            const Rational& c = 1);
  /// Canonicalizes arbitrary input: sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(
      std::size_t nvars, std::vector<std::pair<ExponentVector, Rational>> terms);
  /// Sum of the listed variables plus a constant; the workhorse for hook factors.
  static MultiPoly linear(std::size_t nvars, std::span<const std::size_t> vars,
                          const Rational& c = 0);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return coefs_.size(); }
  bool is_zero() const { return coefs_.empty(); }
  bool is_constant() const;

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars_, nvars_};
  }
  const Rational& coefficient(std::size_t term) const { return coefs_[term]; }
  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient_of(std::span<const Exponent> exps) const;
  Rational constant_term() const;

  /// Maximal total degree; -1 for the zero polynomial.
  long total_degree() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  /// Multiplies every term by the monomial with the given exponents.
  MultiPoly mul_monomial(std::span<const Exponent> exps) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.coefs_ == b.coefs_ && a.exps_ == b.exps_;
  }

 private:
  void check_same_ring(const MultiPoly& other, const char* op) const;
  void push_term(std::span<const Exponent> exps, Rational c);
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract);

  std::size_t nvars_;
  std::vector<Exponent> exps_;
  std::vector<Rational> coefs_;
};

/// Balanced pairwise sum; every part must have nvars variables.
MultiPoly sum_of(std::vector<MultiPoly> parts, std::size_t nvars);

MultiPoly pow(const MultiPoly& p, unsigned m);

/// (p)_m = p(p-1)...(p-m+1); (p)_0 = 1. Negative m throws std::domain_error.
MultiPoly falling_factorial(const MultiPoly& p, long m);

/// Terms of maximal total degree. Throws std::domain_error on zero.
MultiPoly top_homogeneous(const MultiPoly& p);

/// Ring homomorphism: variable i of p is replaced by images[i]. All images
/// must live in the same ring, which becomes the ring of the result.
MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> images,
                  std::size_t target_nvars);

/// Substitution target for specialize: an exact value, or another variable
/// (by original index) that itself stays free.
struct VariableRef {
  std::size_t index;
};
using Substitution = std::variant<Rational, VariableRef>;
using Assignment = std::map<std::size_t, Substitution>;

/// Substitutes the assigned variables. Unassigned variables survive and are
/// renumbered keeping their relative order; assigned ones disappear.
MultiPoly specialize(const MultiPoly& p, const Assignment& assignment);

Rational evaluate(const MultiPoly& p, std::span<const Rational> values);

/// Exact quotient by a monomial, or nullopt when some term is not divisible.
std::optional<MultiPoly> divide_by_monomial(const MultiPoly& p,
                                            std::span<const MultiPoly::Exponent> exps);

// Rendering. Terms print in descending lexicographic order of exponents, so
// k1-heavy terms come first and the constant last.
std::vector<std::string> default_variable_names(std::size_t nvars);
std::string to_string(const MultiPoly& p);
std::string to_string(const MultiPoly& p, std::span<const std::string> names);

/// {"nvars": n, "terms": [{"exp": [...], "num": "...", "den": "..."}]}
nlohmann::json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

/// Hex SHA-256 of the canonical text rendering.
std::string canonical_hash(const MultiPoly& p);
std::string sha256_hex(const std::string& text);

}  // namespace hooklab
