#pragma once

#include <cstdint>
#include <random>

#include "flagcurve/cli/parse.hpp"

namespace flagcurve::cli {

// Portable draw in [lo, hi]: raw engine output reduced by modulo.
long draw(std::mt19937_64& rng, long lo, long hi);

// L0 with nonzero entries p/q, |p| <= 9, q <= 8, and subdiagonal entries in
// [1/4, 6]. Every curve of this form is flag-convex by construction.
CurveSpec random_curve_spec(std::mt19937_64& rng, std::size_t n);

// A small seeded perturbation of the spec: a generator parameter when the
// spec is a word, otherwise a below-diagonal entry of L0.
CurveSpec perturbed(const CurveSpec& spec, std::mt19937_64& rng, int attempt);

}  // namespace flagcurve::cli
