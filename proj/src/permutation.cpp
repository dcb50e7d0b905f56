#include "hooklab/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace hooklab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("Permutation: image array is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i] - 1;
      if (x < 0 || static_cast<std::size_t>(x) >= n || used[static_cast<std::size_t>(x)]) {
        throw std::invalid_argument("Permutation::from_cycles: bad or repeated element");
      }
      used[static_cast<std::size_t>(x)] = true;
      img[static_cast<std::size_t>(x)] = c[(i + 1) % c.size()] - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

namespace {

std::vector<int> cycle_lengths(const std::vector<int>& img) {
  std::vector<int> lengths;
  std::vector<bool> seen(img.size(), false);
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(img[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace

std::size_t Permutation::cycle_count() const { return cycle_lengths(images_).size(); }

IntPartition Permutation::cycle_type() const { return IntPartition(cycle_lengths(images_)); }

std::string Permutation::to_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    s += '(';
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      if (x != start) s += ' ';
      seen[x] = true;
      s += std::to_string(x + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> img(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) img[x] = a(b(static_cast<int>(x)));
  return Permutation(std::move(img));
}

Permutation sigma_mu(const IntPartition& mu) {
  if (mu.length() == 0) throw std::invalid_argument("sigma_mu: empty partition");
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : mu.parts()) {
    std::vector<int> c;
    for (int i = 0; i < part; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(static_cast<std::size_t>(mu.size()), cycles);
}

std::uint64_t long_cycle_count(std::size_t n) {
  if (n == 0) throw std::invalid_argument("long_cycle_count: n must be positive");
  std::uint64_t c = 1;
  for (std::size_t i = 2; i < n; ++i) c *= i;
  return c;
}

Permutation long_cycle_at(std::size_t n, std::uint64_t index) {
  if (index >= long_cycle_count(n)) throw std::out_of_range("long_cycle_at: index out of range");
  // Unrank index among the permutations of {1..n-1} in lex order.
  std::vector<int> pool(n - 1);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> order{0};
  for (std::size_t k = n - 1; k >= 1; --k) {
    const std::uint64_t block = long_cycle_count(k);  // (k-1)!
    const auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    order.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<long>(pick));
  }
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[static_cast<std::size_t>(order[i])] = order[(i + 1) % n];
  return Permutation(std::move(img));
}

}  // namespace hooklab
