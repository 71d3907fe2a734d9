#include <string>

#include "flagcurve/curve/curve.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::curve {

bool is_lower_unitriangular(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

void require_lower_unitriangular(const RationalMatrix& m, const char* what) {
  if (!is_lower_unitriangular(m)) {
    throw UsageError(std::string(what) + " must be square and lower unitriangular");
  }
}

NilpotentGenerator::NilpotentGenerator(std::vector<Rational> subdiag) : subdiag_(std::move(subdiag)) {
  for (const auto& c : subdiag_) {
    if (c <= 0) throw UsageError("nilpotent generator needs strictly positive subdiagonal entries");
  }
}

NilpotentGenerator NilpotentGenerator::unit(std::size_t n) {
  if (n < 1) throw UsageError("dimension must be positive");
  return NilpotentGenerator(std::vector<Rational>(n - 1, Rational(1)));
}

RationalMatrix NilpotentGenerator::matrix() const {
  RationalMatrix m(n(), n());
  for (std::size_t j = 0; j + 1 < n(); ++j) m(j + 1, j) = subdiag_[j];
  return m;
}

PolyMatrix exp_nilpotent(const NilpotentGenerator& n0) {
  // (t N)^m / m! only touches the m-th subdiagonal, so each entry is a single
  // monomial: t^{i-j} c_j c_{j+1} ... c_{i-1} / (i-j)!
  const std::size_t n = n0.n();
  PolyMatrix e(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = 1;
    for (std::size_t i = j; i < n; ++i) {
      if (i > j) c = c * n0.subdiag()[i - 1] / static_cast<long>(i - j);
      e(i, j) = Polynomial::monomial(c, static_cast<int>(i - j));
    }
  }
  return e;
}

RationalMatrix exp_at(const NilpotentGenerator& n0, const Rational& t) {
  return exact::evaluate(exp_nilpotent(n0), t);
}

}  // namespace flagcurve::curve
