#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "flagcurve/curve/positivity.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::curve {

namespace {

using MinorIndex = std::pair<unsigned, unsigned>;  // row mask, column mask

std::vector<std::size_t> bits_of(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

Rational minor_of(const RationalMatrix& m, const MinorIndex& idx) {
  const auto rows = bits_of(idx.first);
  const auto cols = bits_of(idx.second);
  return exact::determinant(m.submatrix(rows, cols));
}

// The minors that do not vanish at the reference point exp(N)|_{t=1}.
// Computed once per n and shared between threads.
const std::vector<MinorIndex>& testable_minors(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<MinorIndex>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  if (n > 16) throw UsageError("total positivity test limited to n <= 16");
  const RationalMatrix ref = exp_at(NilpotentGenerator::unit(n), Rational(1));
  std::vector<MinorIndex> list;
  const unsigned full = 1u << n;
  for (unsigned r = 1; r < full; ++r) {
    for (unsigned c = 1; c < full; ++c) {
      if (std::popcount(r) != std::popcount(c)) continue;
      if (minor_of(ref, {r, c}) != 0) list.emplace_back(r, c);
    }
  }
  // Small minors first: cheap rejections come early.
  std::stable_sort(list.begin(), list.end(), [](const MinorIndex& a, const MinorIndex& b) {
    return std::popcount(a.first) < std::popcount(b.first);
  });
  return cache.emplace(n, std::move(list)).first->second;
}

}  // namespace

bool is_totally_positive(const RationalMatrix& l) {
  if (!is_lower_unitriangular(l)) return false;
  for (const auto& idx : testable_minors(l.rows())) {
    if (minor_of(l, idx) <= 0) return false;
  }
  return true;
}

RationalMatrix sign_conjugate(const RationalMatrix& l) {
  RationalMatrix out = l;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) {
      if ((i + j) % 2 == 1) out(i, j) = -out(i, j);
    }
  }
  return out;
}

bool is_totally_negative(const RationalMatrix& l) { return is_totally_positive(sign_conjugate(l)); }

namespace {

constexpr int kMaxDoublings = 64;

bool holds_from(const RationalMatrix& g, const NilpotentGenerator& n0, const Rational& t, bool positive) {
  Rational probe = t;
  for (int m = 0; m <= 4; ++m) {
    const RationalMatrix x = g * exp_at(n0, probe);
    if (positive ? !is_totally_positive(x) : !is_totally_negative(x)) return false;
    probe *= 2;
  }
  return true;
}

Rational find_threshold(const RationalMatrix& g, const NilpotentGenerator& n0, bool positive) {
  Rational t = positive ? 1 : -1;
  for (int i = 0; i < kMaxDoublings; ++i) {
    if (holds_from(g, n0, t, positive)) return t;
    t *= 2;
  }
  throw InvariantViolation(std::string("no ") + (positive ? "Pos" : "Neg") + " threshold within 64 doublings");
}

}  // namespace

Rational pos_threshold(const RationalMatrix& g, const NilpotentGenerator& n0) {
  require_lower_unitriangular(g, "G");
  if (g.rows() != n0.n()) throw UsageError("G and N0 dimensions differ");
  return find_threshold(g, n0, true);
}

Rational neg_threshold(const RationalMatrix& g, const NilpotentGenerator& n0) {
  require_lower_unitriangular(g, "G");
  if (g.rows() != n0.n()) throw UsageError("G and N0 dimensions differ");
  return find_threshold(g, n0, false);
}

Thresholds positivity_thresholds(const RationalMatrix& g, const NilpotentGenerator& n0) {
  return {neg_threshold(g, n0), pos_threshold(g, n0)};
}

}  // namespace flagcurve::curve
