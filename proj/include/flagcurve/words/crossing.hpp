#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagcurve/curve/extension.hpp"
#include "flagcurve/exactnum/roots.hpp"
#include "flagcurve/words/moves.hpp"

namespace flagcurve::words {

struct Crossing {
  int i = 0;  // the wall Y = {i, j} whose m_Y vanishes
  int j = 0;
  exact::RootInterval root;
  MoveRecord move;
};

struct CrossingSequence {
  std::size_t n = 0;
  exact::Rational lo;
  exact::Rational hi;
  std::vector<AdmissibleWord> words;  // words.size() == crossings.size() + 1
  std::vector<Crossing> crossings;

  std::vector<int> ranks() const;
};

// Roots of every m_Y on the curve's domain, merged in time order, with the
// word in each gap and the admissible move at each root. DegenerateError for
// multiple roots, roots shared by two walls, or roots at the endpoints.
CrossingSequence crossing_sequence(const curve::ExtendedCurve& c,
                                   const std::optional<exact::Rational>& max_width = {});
CrossingSequence crossing_sequence(const curve::PolynomialCurve& c, const exact::Rational& lo,
                                   const exact::Rational& hi, const std::optional<exact::Rational>& max_width = {});

struct TheoremMainReport {
  std::size_t n = 0;
  int bound = 0;                   // 2(n - 2)
  exact::Rational lo, hi;          // requested domain
  exact::Rational a, b;            // extended domain
  std::size_t m2_root_count = 0;   // distinct roots of m_2 in [lo, hi]
  std::size_t m2_crossings = 0;    // {1,2}-crossings on [a, b]
  std::vector<int> rank_trace;
  std::vector<std::string> failures;
  CrossingSequence sequence;

  bool pass() const { return failures.empty(); }
};

// Extends the curve into Neg/Pos, follows the words across every wall and
// checks that the rank runs from 2(n-2) to 0, never increases and drops by
// exactly 1 at each {1,2}-crossing; hence m_2 has at most 2(n-2) zeros.
TheoremMainReport certify_theorem_main(const curve::PolynomialCurve& c, const exact::Rational& lo,
                                       const exact::Rational& hi);

}  // namespace flagcurve::words
