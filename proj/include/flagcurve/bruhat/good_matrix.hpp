#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagcurve/bruhat/permutation.hpp"
#include "flagcurve/curve/curve.hpp"

namespace flagcurve::bruhat {

using exact::Rational;
using exact::RationalMatrix;

enum class GoodMode { polynomial, along_curve };

struct GoodMatrixOptions {
  GoodMode mode = GoodMode::polynomial;
  // along-curve mode: the interval [t_minus, t_plus] around 0.
  Rational t_minus = -1;
  Rational t_plus = 1;
  // Signs alternate +, -, +, ... unless a seed is given.
  std::optional<std::uint64_t> sign_seed;
  // Use these parameters verbatim instead of searching (still verified).
  std::optional<std::vector<Rational>> taus;
  int halving_cap = 64;
};

struct GoodMatrix {
  ReducedWord word;
  std::vector<Rational> taus;
  RationalMatrix l;  // lambda_{i_1}(tau_1) ... lambda_{i_l}(tau_l)
  Permutation rho;

  // sigma = eta rho labels the zero multiplicities at t = 0.
  Permutation sigma() const { return Permutation::top(rho.n()) * rho; }
};

RationalMatrix product_of_generators(std::size_t n, const ReducedWord& word, const std::vector<Rational>& taus);

// Why `l` fails to be rho-good for the curve L exp(t N0), or nullopt when it
// is good. Checks the cell, the zero multiplicities and that every nonzero
// root of every m_k is real and simple (plus the along-curve conditions).
std::optional<std::string> goodness_failure(const RationalMatrix& l, const Permutation& rho,
                                            const curve::NilpotentGenerator& n0, const GoodMatrixOptions& opt = {});
bool is_good(const RationalMatrix& l, const Permutation& rho, const curve::NilpotentGenerator& n0,
             const GoodMatrixOptions& opt = {});

// Inductive construction L_{k+1} = L_k lambda_{i_{k+1}}(tau), halving |tau|
// until L_{k+1} is good. CertificationError when the cap is hit.
GoodMatrix build_good_matrix(std::size_t n, const ReducedWord& word, const curve::NilpotentGenerator& n0,
                             const GoodMatrixOptions& opt = {});

// True when no two of the minors m_1..m_{n-1} share a root (gcd test).
bool minors_pairwise_distinct(const curve::PolynomialCurve& c);

// Perturbs the generator parameters, last first, by +-|tau|/2^m until the
// minors are pairwise coprime while goodness is kept. No-op if already so.
GoodMatrix distinctify(const GoodMatrix& g, const curve::NilpotentGenerator& n0, const GoodMatrixOptions& opt = {},
                       int retry_cap = 64);

}  // namespace flagcurve::bruhat
