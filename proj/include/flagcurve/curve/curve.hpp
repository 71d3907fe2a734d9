#pragma once

#include <cstddef>
#include <vector>

#include "flagcurve/exactnum/matrix.hpp"
#include "flagcurve/exactnum/polynomial.hpp"

namespace flagcurve::curve {

using exact::PolyMatrix;
using exact::Polynomial;
using exact::Rational;
using exact::RationalMatrix;

// Lower-unitriangular matrices are plain RationalMatrix values; these helpers
// enforce the shape where it matters.
bool is_lower_unitriangular(const RationalMatrix& m);
// UsageError unless m is square and lower unitriangular.
void require_lower_unitriangular(const RationalMatrix& m, const char* what);

// Nilpotent generator with strictly positive subdiagonal (entries (j+1, j)).
class NilpotentGenerator {
 public:
  explicit NilpotentGenerator(std::vector<Rational> subdiag);
  static NilpotentGenerator unit(std::size_t n);

  std::size_t n() const { return subdiag_.size() + 1; }
  const std::vector<Rational>& subdiag() const { return subdiag_; }
  RationalMatrix matrix() const;

  friend bool operator==(const NilpotentGenerator&, const NilpotentGenerator&) = default;

 private:
  std::vector<Rational> subdiag_;
};

// exp(t N) as a finite series.
PolyMatrix exp_nilpotent(const NilpotentGenerator& n0);
// exp(t N) evaluated at a rational t.
RationalMatrix exp_at(const NilpotentGenerator& n0, const Rational& t);

// Gamma(t) = L0 exp(t N0), with the polynomial matrix cached.
class PolynomialCurve {
 public:
  PolynomialCurve(RationalMatrix l0, NilpotentGenerator n0);

  std::size_t n() const { return n0_.n(); }
  const RationalMatrix& l0() const { return l0_; }
  const NilpotentGenerator& n0() const { return n0_; }
  const PolyMatrix& gamma() const { return gamma_; }
  RationalMatrix at(const Rational& t) const { return exact::evaluate(gamma_, t); }

  // Symbolic check that Gamma' = Gamma N0 and the degree pattern holds.
  bool is_flag_convex() const;

 private:
  RationalMatrix l0_;
  NilpotentGenerator n0_;
  PolyMatrix gamma_;
};

PolynomialCurve make_curve(const RationalMatrix& l0, const NilpotentGenerator& n0);

// Southwest k x k minor of a square (polynomial or rational) matrix.
Polynomial southwest_minor(const PolyMatrix& m, std::size_t k);
exact::Rational southwest_minor(const RationalMatrix& m, std::size_t k);
// m_k of the curve, 1 <= k <= n-1.
Polynomial minor_k(const PolynomialCurve& c, std::size_t k);
std::vector<Polynomial> all_minors(const PolynomialCurve& c);

// The last two rows of Gamma.
struct ProjectedCurve {
  std::size_t n = 0;
  PolyMatrix rows;  // 2 x n

  RationalMatrix at(const Rational& t) const { return exact::evaluate(rows, t); }
};

ProjectedCurve project(const PolynomialCurve& c);
// det(v_i, v_j) with 1-based 1 <= i < j <= n.
Polynomial minor_pair(const ProjectedCurve& pc, std::size_t i, std::size_t j);
Rational minor_pair(const RationalMatrix& x, std::size_t i, std::size_t j);

}  // namespace flagcurve::curve
