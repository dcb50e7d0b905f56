#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "hooklab/multipoly.hpp"

namespace hooklab::testing {

inline MultiPoly k(std::size_t r, std::size_t i) { return MultiPoly::variable(r, i - 1); }
inline MultiPoly c(std::size_t r, long v) { return MultiPoly::constant(r, v); }

/// Reference polynomial: a plain map from exponent vector to coefficient,
/// multiplied term by term with no cleverness.
struct NaivePoly {
  std::size_t nvars = 0;
  std::map<std::vector<MultiPoly::Exponent>, Rational> terms;

  void add(const std::vector<MultiPoly::Exponent>& e, const Rational& v) {
    auto& slot = terms[e];
    slot += v;
    if (slot == 0) terms.erase(e);
  }
  NaivePoly operator+(const NaivePoly& o) const {
    NaivePoly out = *this;
    for (const auto& [e, v] : o.terms) out.add(e, v);
    return out;
  }
  NaivePoly operator*(const NaivePoly& o) const {
    NaivePoly out{nvars, {}};
    for (const auto& [ea, va] : terms) {
      for (const auto& [eb, vb] : o.terms) {
        std::vector<MultiPoly::Exponent> e(nvars);
        for (std::size_t i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
        out.add(e, va * vb);
      }
    }
    return out;
  }
  MultiPoly to_multipoly() const {
    std::vector<std::pair<MultiPoly::ExponentVector, Rational>> t(terms.begin(), terms.end());
    return MultiPoly::from_terms(nvars, t);
  }
};

inline NaivePoly random_naive(std::mt19937& rng, std::size_t nvars, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  NaivePoly p{nvars, {}};
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<MultiPoly::Exponent> e(nvars);
    for (auto& x : e) x = static_cast<MultiPoly::Exponent>(exp(rng));
    p.add(e, make_rational(num(rng), den(rng)));
  }
  return p;
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < nvars; ++i) v.push_back(make_rational(num(rng), den(rng)));
  return v;
}

}  // namespace hooklab::testing
