#include <algorithm>
#include <cctype>
#include <numeric>

#include "flagcurve/errors.hpp"
#include "flagcurve/words/word.hpp"

namespace flagcurve::words {

namespace {

std::size_t code(const Label& l) { return 2 * static_cast<std::size_t>(l.index - 1) + (l.primed ? 1 : 0); }

}  // namespace

AdmissibleWord::AdmissibleWord(std::vector<Label> slots) {
  const std::size_t len = slots.size();
  if (len < 4 || len % 2 != 0) throw UsageError("a word needs 2n letters with n >= 2");
  const std::size_t n = len / 2;
  std::vector<std::size_t> pos(len, len);
  for (std::size_t s = 0; s < len; ++s) {
    const Label& l = slots[s];
    if (l.index < 1 || l.index > static_cast<int>(n)) throw UsageError("label out of range in word");
    if (pos[code(l)] != len) throw UsageError("label " + l.to_string() + " occurs twice");
    pos[code(l)] = s;
  }
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    const std::size_t a = pos[code({i, false})];
    const std::size_t b = pos[code({i, true})];
    if ((a + n) % len != b) {
      throw UsageError("not admissible: " + std::to_string(i) + " and " + std::to_string(i) + "' are not antipodal");
    }
  }
  const std::size_t shift = pos[code({static_cast<int>(n), false})];
  std::rotate(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(shift), slots.end());
  slots_ = std::move(slots);
  pos_.assign(len, 0);
  for (std::size_t s = 0; s < len; ++s) pos_[code(slots_[s])] = s;
}

std::size_t AdmissibleWord::slot_of(const Label& l) const {
  if (l.index < 1 || l.index > static_cast<int>(n())) throw UsageError("label out of range");
  return pos_[code(l)];
}

std::string AdmissibleWord::to_string() const {
  const std::size_t len = slots_.size();
  const std::size_t start = n() + 1;  // right after n'
  std::string s;
  for (std::size_t k = 0; k < len; ++k) s += slots_[(start + k) % len].to_string();
  return s;
}

AdmissibleWord parse_word(std::string_view text) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '1' || c > '9') throw UsageError("unexpected character '" + std::string(1, c) + "' in word");
    Label l{c - '0', false};
    if (i + 1 < text.size() && text[i + 1] == '\'') {
      l.primed = true;
      ++i;
    }
    labels.push_back(l);
  }
  return AdmissibleWord(std::move(labels));
}

int pair_sign(const AdmissibleWord& w, int i, int j) {
  const std::size_t n = w.n();
  if (!(1 <= i && i < j && j <= static_cast<int>(n))) throw UsageError("pair must satisfy 1 <= i < j <= n");
  const std::size_t d = (w.slot_of({j, false}) + 2 * n - w.slot_of({i, false})) % (2 * n);
  // d == n would put j on the slot of i'.
  if (d == n) throw InvariantViolation("distinct labels at antipodal slots");
  return d < n ? 1 : -1;
}

bool is_plus(const AdmissibleWord& w) {
  const int n = static_cast<int>(w.n());
  return pair_sign(w, n - 1, n) > 0;
}

int rank(const AdmissibleWord& w) {
  const std::size_t n = w.n();
  const std::size_t len = 2 * n;
  int s = 0;
  std::size_t cont = 0;
  std::size_t run = 0;
  int previous = 0;
  for (int k = 1; k < static_cast<int>(n); ++k) {
    const std::size_t a = w.slot_of({k, false});
    const std::size_t b = w.slot_of({k + 1, false});
    const int dir = pair_sign(w, k, k + 1);
    const std::size_t length = dir > 0 ? (b + len - a) % len : (a + len - b) % len;
    if (dir != previous) {
      cont += run / n;
      run = 0;
      ++s;
      previous = dir;
    }
    run += length;
  }
  cont += run / n;
  return 2 * static_cast<int>(cont) + s - 1;
}

AdmissibleWord totally_positive_word(std::size_t n) {
  std::vector<Label> slots;
  for (int p = 0; p < 2; ++p) {
    for (int i = 1; i <= static_cast<int>(n); ++i) slots.push_back({i, p == 1});
  }
  return AdmissibleWord(std::move(slots));
}

AdmissibleWord totally_negative_word(std::size_t n) {
  // Swap every even label with its opposite, then read backwards. (For even n
  // even labels and even positions of 1 2 ... n 1' ... n' coincide.)
  std::vector<Label> slots;
  for (int p = 0; p < 2; ++p) {
    for (int i = 1; i <= static_cast<int>(n); ++i) slots.push_back({i, (p == 1) != (i % 2 == 0)});
  }
  std::reverse(slots.begin(), slots.end());
  return AdmissibleWord(std::move(slots));
}

std::vector<AdmissibleWord> enumerate_words(std::size_t n, bool plus_only) {
  if (n < 2) throw UsageError("enumerate_words needs n >= 2");
  if (n > 8) throw UsageError("enumerate_words is capped at n <= 8");
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<AdmissibleWord> out;
  do {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Label> slots(2 * n);
      slots[0] = {static_cast<int>(n), false};
      slots[n] = {static_cast<int>(n), true};
      for (std::size_t s = 0; s + 1 < n; ++s) {
        const Label l{perm[s], ((mask >> s) & 1u) != 0};
        slots[1 + s] = l;
        slots[1 + s + n] = l.opposite();
      }
      AdmissibleWord w(std::move(slots));
      if (!plus_only || is_plus(w)) out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace flagcurve::words
