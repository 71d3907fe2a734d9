#include <algorithm>
#include <map>
#include <mutex>

#include "flagcurve/curve/duality.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::curve {

namespace {

// P_eta A P_eta reverses both row and column order.
RationalMatrix flip(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(n - 1 - i, n - 1 - j);
  }
  return out;
}

}  // namespace

PolynomialCurve dual_curve(const PolynomialCurve& c) {
  const RationalMatrix l_star = flip(exact::inverse(c.l0()).transposed());
  // P_eta N0^T P_eta is again subdiagonal, with the entries in reverse order.
  std::vector<Rational> sub(c.n0().subdiag().rbegin(), c.n0().subdiag().rend());
  return PolynomialCurve(l_star, NilpotentGenerator(std::move(sub)));
}

int duality_sign(const PolynomialCurve& c, std::size_t k) {
  const std::size_t n = c.n();
  if (k < 1 || k + 1 > n) throw UsageError("k must lie in 1..n-1");
  const Polynomial lhs = minor_k(dual_curve(c), k);
  const Polynomial rhs = minor_k(c, n - k).reflected();
  if (lhs == rhs) return 1;
  if (lhs == -rhs) return -1;
  return 0;
}

int reference_duality_sign(std::size_t n, std::size_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, int> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, k}, 0);
  if (inserted) {
    const PolynomialCurve unit(exact::identity_matrix(n), NilpotentGenerator::unit(n));
    it->second = duality_sign(unit, k);
    if (it->second == 0) throw InvariantViolation("duality identity fails for exp(tN)");
  }
  return it->second;
}

}  // namespace flagcurve::curve
