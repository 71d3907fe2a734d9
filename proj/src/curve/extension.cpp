#include "flagcurve/curve/extension.hpp"
#include "flagcurve/curve/positivity.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::curve {

RationalMatrix ExtendedCurve::at(const Rational& t) const {
  for (const auto& p : pieces) {
    if (t <= p.hi) return p.curve.at(t);
  }
  return pieces.back().curve.at(t);
}

namespace {

// Gamma(anchor) T(t - anchor) written as L' exp(t N) with L' = Gamma(anchor) exp(-anchor N).
PolynomialCurve tail_piece(const PolynomialCurve& c, const Rational& anchor) {
  const auto unit = NilpotentGenerator::unit(c.n());
  return PolynomialCurve(c.at(anchor) * exp_at(unit, -anchor), unit);
}

}  // namespace

ExtendedCurve extend_curve(const PolynomialCurve& c, const Rational& s, const Rational& f) {
  if (s > f) throw UsageError("domain must satisfy lo <= hi");
  const auto unit = NilpotentGenerator::unit(c.n());
  ExtendedCurve out;

  const RationalMatrix start = c.at(s);
  if (!is_totally_negative(start)) {
    const Rational a = s + neg_threshold(start, unit);
    out.pieces.push_back({tail_piece(c, s), a, s});
  }
  if (s < f) out.pieces.push_back({c, s, f});

  const RationalMatrix end = c.at(f);
  if (!is_totally_positive(end)) {
    const Rational b = f + pos_threshold(end, unit);
    out.pieces.push_back({tail_piece(c, f), f, b});
  }
  if (out.pieces.empty()) out.pieces.push_back({c, s, f});

  if (!is_totally_negative(out.at(out.a())) || !is_totally_positive(out.at(out.b()))) {
    throw InvariantViolation("extended curve endpoints are not in Neg/Pos");
  }
  return out;
}

ExtendedCurve single_piece(const PolynomialCurve& c, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw UsageError("domain must satisfy lo <= hi");
  return ExtendedCurve{{CurvePiece{c, lo, hi}}};
}

}  // namespace flagcurve::curve
