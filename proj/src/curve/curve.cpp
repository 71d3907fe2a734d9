#include <numeric>

#include "flagcurve/curve/curve.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::curve {

PolynomialCurve::PolynomialCurve(RationalMatrix l0, NilpotentGenerator n0) : l0_(std::move(l0)), n0_(std::move(n0)) {
  require_lower_unitriangular(l0_, "L0");
  if (l0_.rows() != n0_.n()) throw UsageError("L0 and N0 dimensions differ");
  gamma_ = l0_ * exp_nilpotent(n0_);
  if (!is_flag_convex()) throw InvariantViolation("curve fails the flag-convexity check");
}

bool PolynomialCurve::is_flag_convex() const {
  const std::size_t n = this->n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int deg = gamma_(i, j).degree();
      if (i < j && deg != -1) return false;
      if (i >= j && deg != static_cast<int>(i - j)) return false;
    }
  }
  // Gamma^{-1} Gamma' = N0  <=>  Gamma' = Gamma N0
  return exact::derivative(gamma_) == gamma_ * n0_.matrix();
}

PolynomialCurve make_curve(const RationalMatrix& l0, const NilpotentGenerator& n0) { return PolynomialCurve(l0, n0); }

namespace {

std::vector<std::size_t> range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> r(count);
  std::iota(r.begin(), r.end(), first);
  return r;
}

}  // namespace

Polynomial southwest_minor(const PolyMatrix& m, std::size_t k) {
  if (k < 1 || k > m.rows()) throw UsageError("minor size out of range");
  const auto rows = range(m.rows() - k, k);
  const auto cols = range(0, k);
  return exact::poly_det(m, rows, cols);
}

Rational southwest_minor(const RationalMatrix& m, std::size_t k) {
  if (k < 1 || k > m.rows()) throw UsageError("minor size out of range");
  const auto rows = range(m.rows() - k, k);
  const auto cols = range(0, k);
  return exact::determinant(m.submatrix(rows, cols));
}

Polynomial minor_k(const PolynomialCurve& c, std::size_t k) {
  if (k < 1 || k + 1 > c.n()) throw UsageError("k must lie in 1..n-1");
  return southwest_minor(c.gamma(), k);
}

std::vector<Polynomial> all_minors(const PolynomialCurve& c) {
  std::vector<Polynomial> out;
  for (std::size_t k = 1; k < c.n(); ++k) out.push_back(minor_k(c, k));
  return out;
}

ProjectedCurve project(const PolynomialCurve& c) {
  const std::size_t n = c.n();
  if (n < 2) throw UsageError("projection needs n >= 2");
  ProjectedCurve pc{n, PolyMatrix(2, n)};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t j = 0; j < n; ++j) pc.rows(r, j) = c.gamma()(n - 2 + r, j);
  }
  return pc;
}

namespace {

void check_pair(std::size_t n, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= n)) throw UsageError("pair Y must satisfy 1 <= i < j <= n");
}

}  // namespace

Polynomial minor_pair(const ProjectedCurve& pc, std::size_t i, std::size_t j) {
  check_pair(pc.n, i, j);
  const auto& r = pc.rows;
  return r(0, i - 1) * r(1, j - 1) - r(1, i - 1) * r(0, j - 1);
}

Rational minor_pair(const RationalMatrix& x, std::size_t i, std::size_t j) {
  check_pair(x.cols(), i, j);
  return x(0, i - 1) * x(1, j - 1) - x(1, i - 1) * x(0, j - 1);
}

}  // namespace flagcurve::curve
