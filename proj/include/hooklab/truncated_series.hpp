#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/*
 * Power series in t_1..t_r truncated to the multilinear window: every
 * retained monomial has exponent 0 or 1 in each variable. The coefficient of
 * prod_{i in S} t_i lives at index mask(S), bit i-1 standing for t_i.
 * Products drop every monomial that leaves the window, which is consistent
 * because a monomial outside the window can never re-enter it.
 */
class TruncatedSeries {
 public:
  static constexpr std::size_t kMaxVariables = 16;

  explicit TruncatedSeries(std::size_t r);

  static TruncatedSeries constant(std::size_t r, const Rational& c);
  /// t_i, 1-based.
  static TruncatedSeries variable(std::size_t r, std::size_t i);

  std::size_t variables() const { return r_; }
  const Rational& operator[](std::uint32_t mask) const { return coefs_[mask]; }
  Rational& operator[](std::uint32_t mask) { return coefs_[mask]; }
  const Rational& constant_term() const { return coefs_[0]; }
  /// Coefficient of t_1 t_2 ... t_r.
  const Rational& top() const { return coefs_.back(); }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// t_i * s, 1-based.
  TruncatedSeries times_variable(std::size_t i) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_same(const TruncatedSeries& other) const;

  std::size_t r_;
  std::vector<Rational> coefs_;
};

/// (1 + s)^k for any integer k; s must have zero constant term.
TruncatedSeries pow1p(const TruncatedSeries& s, const Integer& k);
/// log(1 + s); s must have zero constant term.
TruncatedSeries log1p(const TruncatedSeries& s);

}  // namespace hooklab
