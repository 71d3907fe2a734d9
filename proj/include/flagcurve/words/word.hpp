#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flagcurve/exactnum/matrix.hpp"

namespace flagcurve::words {

struct Label {
  int index = 0;  // 1..n
  bool primed = false;

  Label opposite() const { return {index, !primed}; }
  std::string to_string() const { return std::to_string(index) + (primed ? "'" : ""); }
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

// Cyclic word on 1..n, 1'..n' with i' antipodal to i, stored in canonical
// rotation (unprimed n at slot 0). Slots increase counter-clockwise.
class AdmissibleWord {
 public:
  // Any rotation is accepted; UsageError unless admissible.
  explicit AdmissibleWord(std::vector<Label> slots);

  std::size_t n() const { return slots_.size() / 2; }
  const std::vector<Label>& slots() const { return slots_; }
  const Label& at(std::size_t slot) const { return slots_[slot % slots_.size()]; }
  std::size_t slot_of(const Label& l) const;

  // Rendered starting right after n', e.g. "12341'2'3'4'".
  std::string to_string() const;

  friend bool operator==(const AdmissibleWord&, const AdmissibleWord&) = default;
  friend auto operator<=>(const AdmissibleWord&, const AdmissibleWord&) = default;

 private:
  std::vector<Label> slots_;
  std::vector<std::size_t> pos_;  // 2*(index-1) + primed -> slot
};

// Parses "143'21'4'32'" (one digit per label, n <= 9, whitespace ignored).
AdmissibleWord parse_word(std::string_view text);

// +1 iff (slot(j) - slot(i)) mod 2n < n, for 1 <= i < j <= n.
int pair_sign(const AdmissibleWord& w, int i, int j);
// Membership in W+: pair_sign(n-1, n) = +1.
bool is_plus(const AdmissibleWord& w);

// rk(w) = 2 Cont(w) + s - 1 in the slot metric (a half-turn is n slots).
int rank(const AdmissibleWord& w);

AdmissibleWord totally_positive_word(std::size_t n);
AdmissibleWord totally_negative_word(std::size_t n);

// All admissible words (or only W+) for 2 <= n <= 8, duplicate-free, in a
// fixed order.
std::vector<AdmissibleWord> enumerate_words(std::size_t n, bool plus_only);

// A 2 x n matrix X in C (v_n = (0, 1), v_{n-1} = (1, y)) with w(X) = w.
// UsageError unless w is in W+.
exact::RationalMatrix witness_matrix(const AdmissibleWord& w);

// X in C3: w(X) by exact angular sorting of +-v_i. DegenerateError if a
// column is zero ("not in C1") or two columns are dependent ("on a wall").
AdmissibleWord word_of_matrix(const exact::RationalMatrix& x);

}  // namespace flagcurve::words
