#include <algorithm>

#include "flagcurve/errors.hpp"
#include "flagcurve/words/word.hpp"

namespace flagcurve::words {

exact::RationalMatrix witness_matrix(const AdmissibleWord& w) {
  if (!is_plus(w)) throw UsageError("witness matrices exist only for words in W+");
  const std::size_t n = w.n();
  exact::RationalMatrix x(2, n);
  // Slot p < n gets the direction (-p, n - 2p): angles strictly increasing
  // through (90, 270) degrees; slot p + n gets the opposite direction.
  for (std::size_t p = 0; p < n; ++p) {
    const Label& l = w.at(p);
    const long sgn = l.primed ? -1 : 1;
    const std::size_t col = static_cast<std::size_t>(l.index - 1);
    x(0, col) = -sgn * static_cast<long>(p);
    x(1, col) = sgn * (static_cast<long>(n) - 2 * static_cast<long>(p));
  }
  // Normalize v_n = (0, 1) and v_{n-1} = (1, y) by positive scalings.
  const exact::Rational yn = x(1, n - 1);
  x(1, n - 1) = 1;
  const exact::Rational xm = x(0, n - 2);
  x(0, n - 2) = 1;
  x(1, n - 2) /= xm;
  if (yn <= 0 || xm <= 0) throw InvariantViolation("witness normalization needs positive scalings");
  return x;
}

namespace {

struct Direction {
  exact::Rational x;
  exact::Rational y;
  Label label;
};

bool upper_half(const Direction& d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

// Counter-clockwise order starting from angle 0.
bool angle_less(const Direction& a, const Direction& b) {
  const bool ua = upper_half(a);
  const bool ub = upper_half(b);
  if (ua != ub) return ua;
  return a.x * b.y - a.y * b.x > 0;
}

}  // namespace

AdmissibleWord word_of_matrix(const exact::RationalMatrix& x) {
  if (x.rows() != 2 || x.cols() < 2) throw UsageError("word_of_matrix needs a 2 x n matrix with n >= 2");
  const std::size_t n = x.cols();
  for (std::size_t i = 0; i < n; ++i) {
    if (x(0, i) == 0 && x(1, i) == 0) throw DegenerateError("not in C1: column " + std::to_string(i + 1) + " is zero");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x(0, i) * x(1, j) - x(1, i) * x(0, j) == 0) {
        throw DegenerateError("not in C3, on a wall: columns " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " are dependent");
      }
    }
  }
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    const int idx = static_cast<int>(i + 1);
    dirs.push_back({x(0, i), x(1, i), {idx, false}});
    dirs.push_back({-x(0, i), -x(1, i), {idx, true}});
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::vector<Label> slots;
  for (const auto& d : dirs) slots.push_back(d.label);
  return AdmissibleWord(std::move(slots));
}

}  // namespace flagcurve::words
