#pragma once

#include "flagcurve/bruhat/permutation.hpp"
#include "flagcurve/exactnum/matrix.hpp"

namespace flagcurve::bruhat {

// r(i, j) = rank of rows i..n, columns 1..j (1-based; zero outside the range).
std::size_t corner_rank(const exact::RationalMatrix& l, std::size_t i, std::size_t j);

// The rho with L = U1 P_rho U2 (U1, U2 upper triangular), read off the
// corner ranks.
Permutation bruhat_cell(const exact::RationalMatrix& l);

// lambda_j(tau): identity plus tau at (j+1, j), 1-based.
exact::RationalMatrix generator_matrix(std::size_t n, int j, const exact::Rational& tau);

}  // namespace flagcurve::bruhat
