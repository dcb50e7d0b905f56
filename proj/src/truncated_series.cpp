#include "hooklab/truncated_series.hpp"

#include <stdexcept>
#include <string>

namespace hooklab {

TruncatedSeries::TruncatedSeries(std::size_t r) : r_(r) {
  if (r > kMaxVariables) {
    throw std::length_error("TruncatedSeries: at most " + std::to_string(kMaxVariables) +
                            " variables");
  }
  coefs_.assign(std::size_t{1} << r, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(std::size_t r, const Rational& c) {
  TruncatedSeries s(r);
  s.coefs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t r, std::size_t i) {
  if (i < 1 || i > r) throw std::out_of_range("TruncatedSeries::variable: index out of range");
  TruncatedSeries s(r);
  s.coefs_[std::size_t{1} << (i - 1)] = 1;
  return s;
}

void TruncatedSeries::check_same(const TruncatedSeries& other) const {
  if (r_ != other.r_) throw std::invalid_argument("TruncatedSeries: variable count mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_same(other);
  for (std::size_t m = 0; m < coefs_.size(); ++m) coefs_[m] += other.coefs_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_same(other);
  for (std::size_t m = 0; m < coefs_.size(); ++m) coefs_[m] -= other.coefs_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coefs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same(b);
  TruncatedSeries out(a.r_);
  // Subset convolution: c[S] = sum over T subset of S of a[T] b[S \ T].
  for (std::size_t s = 0; s < out.coefs_.size(); ++s) {
    Rational acc = 0;
    for (std::size_t t = s;; t = (t - 1) & s) {
      if (a.coefs_[t] != 0 && b.coefs_[s ^ t] != 0) acc += a.coefs_[t] * b.coefs_[s ^ t];
      if (t == 0) break;
    }
    out.coefs_[s] = std::move(acc);
  }
  return out;
}

TruncatedSeries TruncatedSeries::times_variable(std::size_t i) const {
  if (i < 1 || i > r_) throw std::out_of_range("TruncatedSeries::times_variable: index out of range");
  const std::size_t bit = std::size_t{1} << (i - 1);
  TruncatedSeries out(r_);
  for (std::size_t m = 0; m < coefs_.size(); ++m) {
    if ((m & bit) == 0) out.coefs_[m | bit] = coefs_[m];
  }
  return out;
}

namespace {

void require_no_constant(const TruncatedSeries& s, const char* what) {
  if (s.constant_term() != 0) {
    throw std::domain_error(std::string(what) + ": series must have zero constant term");
  }
}

}  // namespace

TruncatedSeries pow1p(const TruncatedSeries& s, const Integer& k) {
  require_no_constant(s, "pow1p");
  // sum_m binom(k, m) s^m; s^m vanishes in the window once m > r.
  TruncatedSeries result = TruncatedSeries::constant(s.variables(), 1);
  TruncatedSeries power = result;
  Rational binom = 1;
  for (std::size_t m = 1; m <= s.variables(); ++m) {
    power = power * s;
    binom *= Rational(k - static_cast<long>(m - 1)) / static_cast<long>(m);
    TruncatedSeries term = power;
    term *= binom;
    result += term;
  }
  return result;
}

TruncatedSeries log1p(const TruncatedSeries& s) {
  require_no_constant(s, "log1p");
  TruncatedSeries result(s.variables());
  TruncatedSeries power = TruncatedSeries::constant(s.variables(), 1);
  for (std::size_t m = 1; m <= s.variables(); ++m) {
    power = power * s;
    TruncatedSeries term = power;
    term *= make_rational(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
    result += term;
  }
  return result;
}

}  // namespace hooklab
