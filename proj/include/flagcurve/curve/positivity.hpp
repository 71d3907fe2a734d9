#pragma once

#include "flagcurve/curve/curve.hpp"

namespace flagcurve::curve {

// Pos: every minor that does not vanish at exp(N)|_{t=1} (unit subdiagonal)
// is strictly positive.
bool is_totally_positive(const RationalMatrix& l);
// Neg: P L P in Pos with P = diag(1, -1, 1, ...).
bool is_totally_negative(const RationalMatrix& l);
RationalMatrix sign_conjugate(const RationalMatrix& l);

struct Thresholds {
  Rational t_minus;  // G exp(t_minus N0) in Neg
  Rational t_plus;   // G exp(t_plus N0) in Pos
};

// Verified (not minimal) bounds found by doubling from -1 and 1. Pos is also
// spot-checked at t_plus * 2^m for m <= 4, Neg likewise.
Thresholds positivity_thresholds(const RationalMatrix& g, const NilpotentGenerator& n0);
// The two halves of positivity_thresholds.
Rational pos_threshold(const RationalMatrix& g, const NilpotentGenerator& n0);
Rational neg_threshold(const RationalMatrix& g, const NilpotentGenerator& n0);

}  // namespace flagcurve::curve
