#pragma once

#include <vector>

#include "flagcurve/curve/curve.hpp"

namespace flagcurve::curve {

struct CurvePiece {
  PolynomialCurve curve;
  Rational lo;
  Rational hi;
};

// Piecewise curve on [a, b]: Gamma(s) T(t - s) on [a, s], Gamma on [s, f],
// Gamma(f) T(t - f) on [f, b], where T(t) = exp(t N) with unit subdiagonal.
// Zero-length pieces are dropped.
struct ExtendedCurve {
  std::vector<CurvePiece> pieces;

  Rational a() const { return pieces.front().lo; }
  Rational b() const { return pieces.back().hi; }
  std::size_t n() const { return pieces.front().curve.n(); }
  RationalMatrix at(const Rational& t) const;
};

// Extends so that Gamma(a) is in Neg and Gamma(b) in Pos (both verified).
ExtendedCurve extend_curve(const PolynomialCurve& c, const Rational& s, const Rational& f);

// Wraps a curve on [lo, hi] without extension.
ExtendedCurve single_piece(const PolynomialCurve& c, const Rational& lo, const Rational& hi);

}  // namespace flagcurve::curve
