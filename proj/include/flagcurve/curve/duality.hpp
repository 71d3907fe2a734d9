#pragma once

#include "flagcurve/curve/curve.hpp"

namespace flagcurve::curve {

// Gamma_*(t) = P_eta Gamma(-t)^{-T} P_eta, returned as L_* exp(t N_*) with
// L_* = P_eta L0^{-T} P_eta and N_* = P_eta N0^T P_eta.
PolynomialCurve dual_curve(const PolynomialCurve& c);

// The eps in {+1, -1} with m_{dual,k}(t) = eps * m_{n-k}(-t), or 0 if neither
// identity holds.
int duality_sign(const PolynomialCurve& c, std::size_t k);

// Sign observed for unit curves exp(tN); the identity must reproduce it for
// every curve of the same n.
int reference_duality_sign(std::size_t n, std::size_t k);

}  // namespace flagcurve::curve
