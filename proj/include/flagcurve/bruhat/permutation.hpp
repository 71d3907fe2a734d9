#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagcurve/exactnum/matrix.hpp"

namespace flagcurve::bruhat {

// Permutations act on the right: i^{rho sigma} = (i^rho)^sigma. One-line
// values are 1-based: values()[i-1] = i^sigma.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);
  // eta: i -> n + 1 - i
  static Permutation top(std::size_t n);
  // a_j = (j j+1), 1 <= j <= n-1
  static Permutation generator(std::size_t n, int j);
  // a_{i_1} a_{i_2} ... a_{i_l}
  static Permutation from_word(std::size_t n, const std::vector<int>& letters);

  std::size_t n() const { return values_.size(); }
  const std::vector<int>& values() const { return values_; }
  int image(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  // 1-based position holding the value v.
  int position_of(int v) const;

  Permutation inverse() const;
  int inversions() const;
  // P with entry 1 at (i, i^sigma).
  exact::RationalMatrix matrix() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Letters of a word a_{i_1} ... a_{i_l}.
using ReducedWord = std::vector<int>;

bool is_reduced(std::size_t n, const ReducedWord& word);
// Some reduced word for sigma.
ReducedWord reduced_word(const Permutation& sigma);
// Lexicographically first reduced word of eta: a1 a2 a1 a3 a2 a1 ...
ReducedWord top_word(std::size_t n);
std::string word_to_string(const ReducedWord& word);

using MultiplicityVector = std::vector<int>;

// mult_k(sigma) = (1^sigma + ... + k^sigma) - (1 + ... + k), k = 1..n-1.
MultiplicityVector mult_vector(const Permutation& sigma);
// sigma a_j covers sigma in the Bruhat order.
bool is_cover(const Permutation& sigma, int j);
// mult(sigma a_j) from mult(sigma) by the cover rule; UsageError unless a cover.
MultiplicityVector cover_update(const Permutation& sigma, int j);

// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace flagcurve::bruhat
