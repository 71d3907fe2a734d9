#pragma once

#include <string>
#include <vector>

#include "flagcurve/curve/curve.hpp"
#include "flagcurve/exactnum/roots.hpp"

namespace flagcurve::bruhat {

struct ItineraryEntry {
  std::size_t k = 0;  // the letter a_k
  exact::RootInterval root;
};

struct Itinerary {
  std::vector<ItineraryEntry> entries;  // strictly time-ordered

  // "a" = a_1, "b" = a_2, ...
  std::string letters() const;
  std::vector<std::size_t> letter_counts(std::size_t n) const;
};

// Letters a_k at the roots of m_k in (lo, hi] (whole line when unbounded).
// DegenerateError unless every root is simple and no two minors share one.
Itinerary itinerary(const curve::PolynomialCurve& c, const exact::Bound& lo = {}, const exact::Bound& hi = {},
                    const std::optional<exact::Rational>& max_width = {});

struct NontransversalityCount {
  std::vector<std::size_t> distinct;           // per k: distinct roots of m_k
  std::vector<std::size_t> with_multiplicity;  // per k: roots counted with multiplicity
  std::size_t total_distinct = 0;
  std::size_t total_with_multiplicity = 0;
};

// Roots of the minors of L1 Gamma in (lo, hi].
NontransversalityCount count_nontransversality(const curve::PolynomialCurve& c, const exact::RationalMatrix& l1,
                                               const exact::Bound& lo = {}, const exact::Bound& hi = {});

}  // namespace flagcurve::bruhat
