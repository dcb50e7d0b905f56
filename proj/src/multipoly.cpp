#include "hooklab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hooklab {

namespace {

using Exponent = MultiPoly::Exponent;

int compare_exps(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

long degree_of(std::span<const Exponent> exps) {
  return std::accumulate(exps.begin(), exps.end(), 0L);
}

}  // namespace

void MultiPoly::check_same_ring(const MultiPoly& other, const char* op) const {
  if (nvars_ != other.nvars_) {
    throw std::invalid_argument(std::string("MultiPoly ") + op + ": variable count mismatch (" +
                                std::to_string(nvars_) + " vs " +
                                std::to_string(other.nvars_) + ")");
  }
}

void MultiPoly::push_term(std::span<const Exponent> exps, Rational c) {
  exps_.insert(exps_.end(), exps.begin(), exps.end());
  coefs_.push_back(std::move(c));
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) {
    p.exps_.assign(nvars, 0);
    p.coefs_.push_back(c);
  }
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw std::out_of_range("MultiPoly::variable: index " + std::to_string(index) +
                            " out of range for " + std::to_string(nvars) + " variables");
  }
  ExponentVector e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, e);
}

MultiPoly MultiPoly::monomial(std::size_t nvars, std::span<const Exponent> exps,
                              const Rational& c) {
  if (exps.size() != nvars) {
    throw std::invalid_argument("MultiPoly::monomial: exponent vector has wrong length");
  }
  MultiPoly p(nvars);
  if (c != 0) p.push_term(exps, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars,
                                std::vector<std::pair<ExponentVector, Rational>> terms) {
  for (const auto& t : terms) {
    if (t.first.size() != nvars) {
      throw std::invalid_argument("MultiPoly::from_terms: exponent vector has wrong length");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  MultiPoly p(nvars);
  for (std::size_t i = 0; i < terms.size();) {
    Rational c = terms[i].second;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].first == terms[i].first) {
      c += terms[j].second;
      ++j;
    }
    if (c != 0) p.push_term(terms[i].first, std::move(c));
    i = j;
  }
  return p;
}

MultiPoly MultiPoly::linear(std::size_t nvars, std::span<const std::size_t> vars,
                            const Rational& c) {
  std::vector<std::pair<ExponentVector, Rational>> terms;
  terms.reserve(vars.size() + 1);
  for (std::size_t v : vars) {
    if (v >= nvars) throw std::out_of_range("MultiPoly::linear: variable index out of range");
    ExponentVector e(nvars, 0);
    e[v] = 1;
    terms.emplace_back(std::move(e), Rational(1));
  }
  terms.emplace_back(ExponentVector(nvars, 0), c);
  return from_terms(nvars, std::move(terms));
}

bool MultiPoly::is_constant() const {
  return is_zero() || (size() == 1 && degree_of(exponents(0)) == 0);
}

Rational MultiPoly::coefficient_of(std::span<const Exponent> exps) const {
  if (exps.size() != nvars_) {
    throw std::invalid_argument("MultiPoly::coefficient_of: exponent vector has wrong length");
  }
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = compare_exps(exponents(mid), exps);
    if (c == 0) return coefs_[mid];
    if (c < 0) lo = mid + 1; else hi = mid;
  }
  return 0;
}

Rational MultiPoly::constant_term() const {
  // The zero exponent vector is the lexicographically smallest.
  if (!is_zero() && degree_of(exponents(0)) == 0) return coefs_[0];
  return 0;
}

long MultiPoly::total_degree() const {
  long d = -1;
  for (std::size_t t = 0; t < size(); ++t) d = std::max(d, degree_of(exponents(t)));
  return d;
}

MultiPoly MultiPoly::merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  MultiPoly out(a.nvars_);
  out.exps_.reserve(a.exps_.size() + b.exps_.size());
  out.coefs_.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : j == b.size() ? -1 : compare_exps(a.exponents(i), b.exponents(j));
    if (c < 0) {
      out.push_term(a.exponents(i), a.coefs_[i]);
      ++i;
    } else if (c > 0) {
      out.push_term(b.exponents(j), subtract ? Rational(-b.coefs_[j]) : b.coefs_[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a.coefs_[i] - b.coefs_[j]) : Rational(a.coefs_[i] + b.coefs_[j]);
      if (s != 0) out.push_term(a.exponents(i), std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_ring(other, "add");
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  return *this = merge(*this, other, false);
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_ring(other, "sub");
  if (other.is_zero()) return *this;
  return *this = merge(*this, other, true);
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    exps_.clear();
    coefs_.clear();
    return *this;
  }
  for (auto& q : coefs_) q *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& q : p.coefs_) q = -q;
  return p;
}

MultiPoly MultiPoly::mul_monomial(std::span<const Exponent> exps) const {
  if (exps.size() != nvars_) {
    throw std::invalid_argument("MultiPoly::mul_monomial: exponent vector has wrong length");
  }
  MultiPoly p = *this;
  for (std::size_t t = 0; t < p.size(); ++t) {
    for (std::size_t v = 0; v < nvars_; ++v) p.exps_[t * nvars_ + v] += exps[v];
  }
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b, "mul");
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
  // Shifting by a fixed monomial keeps lexicographic order, so the product
  // is a sum of |small| sorted copies of the larger factor.
  const MultiPoly& big = a.size() >= b.size() ? a : b;
  const MultiPoly& small = a.size() >= b.size() ? b : a;
  std::vector<MultiPoly> parts;
  parts.reserve(small.size());
  for (std::size_t t = 0; t < small.size(); ++t) {
    MultiPoly shifted = big.mul_monomial(small.exponents(t));
    shifted *= small.coefficient(t);
    parts.push_back(std::move(shifted));
  }
  return sum_of(std::move(parts), a.nvars());
}

MultiPoly sum_of(std::vector<MultiPoly> parts, std::size_t nvars) {
  if (parts.empty()) return MultiPoly(nvars);
  for (const auto& p : parts) {
    if (p.nvars() != nvars) throw std::invalid_argument("sum_of: variable count mismatch");
  }
  while (parts.size() > 1) {
    std::vector<MultiPoly> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      next.push_back(parts[i] + parts[i + 1]);
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

MultiPoly pow(const MultiPoly& p, unsigned m) {
  MultiPoly result = MultiPoly::constant(p.nvars(), 1);
  MultiPoly base = p;
  while (m > 0) {
    if (m & 1U) result *= base;
    m >>= 1U;
    if (m > 0) base *= base;
  }
  return result;
}

MultiPoly falling_factorial(const MultiPoly& p, long m) {
  if (m < 0) {
    throw std::domain_error("falling_factorial: negative order " + std::to_string(m) +
                            " is not a polynomial");
  }
  MultiPoly result = MultiPoly::constant(p.nvars(), 1);
  for (long i = 0; i < m; ++i) {
    result *= p - MultiPoly::constant(p.nvars(), Rational(i));
  }
  return result;
}

MultiPoly top_homogeneous(const MultiPoly& p) {
  if (p.is_zero()) throw std::domain_error("top_homogeneous: zero polynomial");
  const long d = p.total_degree();
  std::vector<std::pair<MultiPoly::ExponentVector, Rational>> terms;
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    if (degree_of(e) == d) terms.emplace_back(MultiPoly::ExponentVector(e.begin(), e.end()),
                                              p.coefficient(t));
  }
  return MultiPoly::from_terms(p.nvars(), std::move(terms));
}

MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> images,
                  std::size_t target_nvars) {
  if (images.size() != p.nvars()) {
    throw std::invalid_argument("compose: need one image per variable");
  }
  for (const auto& img : images) {
    if (img.nvars() != target_nvars) {
      throw std::invalid_argument("compose: image lives in the wrong ring");
    }
  }
  // powers[v][e] = images[v]^e, filled on demand.
  std::vector<std::vector<MultiPoly>> powers(p.nvars());
  auto power = [&](std::size_t v, Exponent e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target_nvars, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  std::vector<MultiPoly> parts;
  parts.reserve(p.size());
  for (std::size_t t = 0; t < p.size(); ++t) {
    MultiPoly term = MultiPoly::constant(target_nvars, p.coefficient(t));
    auto e = p.exponents(t);
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (e[v] != 0) term *= power(v, e[v]);
    }
    parts.push_back(std::move(term));
  }
  return sum_of(std::move(parts), target_nvars);
}

MultiPoly specialize(const MultiPoly& p, const Assignment& assignment) {
  const std::size_t n = p.nvars();
  for (const auto& [var, sub] : assignment) {
    if (var >= n) {
      throw std::out_of_range("specialize: variable index " + std::to_string(var) +
                              " out of range for " + std::to_string(n) + " variables");
    }
    if (const auto* ref = std::get_if<VariableRef>(&sub)) {
      if (ref->index >= n) throw std::out_of_range("specialize: target variable out of range");
      if (assignment.contains(ref->index)) {
        throw std::invalid_argument("specialize: target variable must stay free");
      }
    }
  }
  std::vector<std::size_t> new_index(n, 0);
  std::size_t survivors = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!assignment.contains(v)) new_index[v] = survivors++;
  }
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      images.push_back(MultiPoly::variable(survivors, new_index[v]));
    } else if (const auto* value = std::get_if<Rational>(&it->second)) {
      images.push_back(MultiPoly::constant(survivors, *value));
    } else {
      images.push_back(
          MultiPoly::variable(survivors, new_index[std::get<VariableRef>(it->second).index]));
    }
  }
  return compose(p, images, survivors);
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> values) {
  if (values.size() != p.nvars()) {
    throw std::invalid_argument("evaluate: need one value per variable");
  }
  Rational total = 0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    Rational term = p.coefficient(t);
    auto e = p.exponents(t);
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      for (Exponent k = 0; k < e[v]; ++k) term *= values[v];
    }
    total += term;
  }
  return total;
}

std::optional<MultiPoly> divide_by_monomial(const MultiPoly& p,
                                            std::span<const MultiPoly::Exponent> exps) {
  if (exps.size() != p.nvars()) {
    throw std::invalid_argument("divide_by_monomial: exponent vector has wrong length");
  }
  std::vector<std::pair<MultiPoly::ExponentVector, Rational>> terms;
  terms.reserve(p.size());
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    MultiPoly::ExponentVector q(e.begin(), e.end());
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (q[v] < exps[v]) return std::nullopt;
      q[v] -= exps[v];
    }
    terms.emplace_back(std::move(q), p.coefficient(t));
  }
  return MultiPoly::from_terms(p.nvars(), std::move(terms));
}

}  // namespace hooklab
