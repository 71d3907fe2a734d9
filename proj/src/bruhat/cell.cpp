#include <numeric>

#include "flagcurve/bruhat/cell.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::bruhat {

std::size_t corner_rank(const exact::RationalMatrix& l, std::size_t i, std::size_t j) {
  const std::size_t n = l.rows();
  if (i > n || j == 0) return 0;
  std::vector<std::size_t> rows(n - i + 1);
  std::iota(rows.begin(), rows.end(), i - 1);
  std::vector<std::size_t> cols(j);
  std::iota(cols.begin(), cols.end(), 0);
  return exact::rank(l.submatrix(rows, cols));
}

Permutation bruhat_cell(const exact::RationalMatrix& l) {
  if (!l.is_square()) throw UsageError("bruhat_cell needs a square matrix");
  const std::size_t n = l.rows();
  // r[i][j] for i in 1..n+1, j in 0..n
  std::vector<std::vector<long>> r(n + 2, std::vector<long>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) r[i][j] = static_cast<long>(corner_rank(l, i, j));
  }
  std::vector<int> values(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (r[i][j] - r[i + 1][j] - r[i][j - 1] + r[i + 1][j - 1] == 1) {
        if (values[i - 1] != 0) throw InvariantViolation("corner ranks do not describe a permutation");
        values[i - 1] = static_cast<int>(j);
      }
    }
  }
  return Permutation(std::move(values));
}

exact::RationalMatrix generator_matrix(std::size_t n, int j, const exact::Rational& tau) {
  if (j < 1 || j >= static_cast<int>(n)) throw UsageError("generator index out of range");
  auto m = exact::identity_matrix(n);
  m(static_cast<std::size_t>(j), static_cast<std::size_t>(j - 1)) = tau;
  return m;
}

}  // namespace flagcurve::bruhat
