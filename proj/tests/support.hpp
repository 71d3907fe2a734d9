#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flagcurve/curve/curve.hpp"
#include "flagcurve/exactnum/rational.hpp"

namespace testsupport {

using flagcurve::exact::Rational;
using flagcurve::exact::RationalMatrix;

inline Rational q(long a, long b = 1) { return flagcurve::exact::make_rational(a, b); }

// Portable draws: raw engine output reduced by modulo.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, long num_range, long max_den) {
  return q(draw(rng, -num_range, num_range), draw(rng, 1, max_den));
}

inline RationalMatrix random_lower_uni(std::mt19937_64& rng, std::size_t n, long num_range = 3, long max_den = 4) {
  RationalMatrix m = flagcurve::exact::identity_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m(i, j) = random_rational(rng, num_range, max_den);
  }
  return m;
}

inline flagcurve::curve::NilpotentGenerator random_generator(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> sub;
  for (std::size_t j = 0; j + 1 < n; ++j) sub.push_back(q(draw(rng, 1, 4), draw(rng, 1, 3)));
  return flagcurve::curve::NilpotentGenerator(sub);
}

// The n = 4 sample curve used throughout the word tests: L0 below, unit N.
inline RationalMatrix sample_l0_n4() {
  RationalMatrix m = flagcurve::exact::identity_matrix(4);
  m(2, 0) = q(1, 6);
  m(3, 0) = q(1, 8);
  m(3, 1) = q(1, 5);
  return m;
}

inline flagcurve::curve::PolynomialCurve sample_curve_n4() {
  return flagcurve::curve::PolynomialCurve(sample_l0_n4(), flagcurve::curve::NilpotentGenerator::unit(4));
}

}  // namespace testsupport
