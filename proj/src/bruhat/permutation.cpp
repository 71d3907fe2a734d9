#include <algorithm>
#include <numeric>

#include "flagcurve/bruhat/permutation.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::bruhat {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::top(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Permutation(std::move(v));
}

Permutation Permutation::generator(std::size_t n, int j) {
  if (j < 1 || j >= static_cast<int>(n)) throw UsageError("generator index out of range");
  auto p = identity(n);
  std::swap(p.values_[static_cast<std::size_t>(j - 1)], p.values_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::from_word(std::size_t n, const std::vector<int>& letters) {
  auto p = identity(n);
  for (int j : letters) p = p * generator(n, j);
  return p;
}

int Permutation::position_of(int v) const {
  auto it = std::find(values_.begin(), values_.end(), v);
  if (it == values_.end()) throw UsageError("value out of range");
  return static_cast<int>(it - values_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

int Permutation::inversions() const {
  int c = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = i + 1; j < values_.size(); ++j) c += values_[i] > values_[j];
  }
  return c;
}

exact::RationalMatrix Permutation::matrix() const {
  exact::RationalMatrix m(n(), n());
  for (std::size_t i = 0; i < n(); ++i) m(i, static_cast<std::size_t>(values_[i] - 1)) = 1;
  return m;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values_[i]);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw UsageError("permutation sizes differ");
  std::vector<int> v(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) v[i] = b.image(a.values_[i]);
  return Permutation(std::move(v));
}

bool is_reduced(std::size_t n, const ReducedWord& word) {
  for (int j : word) {
    if (j < 1 || j >= static_cast<int>(n)) return false;
  }
  return Permutation::from_word(n, word).inversions() == static_cast<int>(word.size());
}

ReducedWord reduced_word(const Permutation& sigma) {
  // Left multiplication by a_j swaps positions j and j+1. A descent at j
  // gives p = a_j (a_j p) with a_j p shorter, so descents peel off the left.
  ReducedWord word;
  Permutation p = sigma;
  for (;;) {
    int descent = 0;
    for (std::size_t j = 1; j < p.n(); ++j) {
      if (p.values()[j - 1] > p.values()[j]) {
        descent = static_cast<int>(j);
        break;
      }
    }
    if (descent == 0) break;
    word.push_back(descent);
    p = Permutation::generator(p.n(), descent) * p;
  }
  return word;
}

ReducedWord top_word(std::size_t n) {
  ReducedWord w;
  for (int m = 1; m < static_cast<int>(n); ++m) {
    for (int j = m; j >= 1; --j) w.push_back(j);
  }
  return w;
}

std::string word_to_string(const ReducedWord& word) {
  std::string s;
  for (int j : word) s += static_cast<char>('a' + j - 1);
  return s;
}

MultiplicityVector mult_vector(const Permutation& sigma) {
  MultiplicityVector m;
  int partial = 0;
  for (std::size_t k = 1; k < sigma.n(); ++k) {
    partial += sigma.values()[k - 1];
    m.push_back(partial - static_cast<int>(k * (k + 1) / 2));
  }
  return m;
}

bool is_cover(const Permutation& sigma, int j) {
  if (j < 1 || j >= static_cast<int>(sigma.n())) throw UsageError("generator index out of range");
  return sigma.position_of(j) < sigma.position_of(j + 1);
}

MultiplicityVector cover_update(const Permutation& sigma, int j) {
  if (!is_cover(sigma, j)) throw UsageError("sigma a_j does not cover sigma");
  MultiplicityVector m = mult_vector(sigma);
  const int i0 = sigma.position_of(j);
  const int i1 = sigma.position_of(j + 1);
  for (int k = i0; k < i1; ++k) ++m[static_cast<std::size_t>(k - 1)];
  return m;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace flagcurve::bruhat
