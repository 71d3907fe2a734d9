#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagcurve/cli/parse.hpp"
#include "flagcurve/cli/report.hpp"

namespace flagcurve::cli {

struct RunConfig {
  std::size_t n = 4;
  std::uint64_t seed = 1;
  std::optional<std::pair<Rational, Rational>> domain;
  Rational precision = exact::make_rational(1, 1000);  // isolating-interval width bound
  std::string format = "json";
  bool perturb = false;
  std::optional<std::string> out;
  int digits = 6;

  json to_json() const;
};

// Minor polynomials, degrees, leading signs and root tables; pair minors m_Y
// too when `pairs` is set.
Report cmd_curve(const RunConfig& cfg, const CurveSpec& spec, bool pairs);

// Time-ordered letters a_k at the roots of the m_k. With cfg.perturb a
// degenerate input is retried with seeded perturbations.
Report cmd_itinerary(const RunConfig& cfg, const CurveSpec& spec);

// Crossing sequence of the projected curve on the domain (extended into
// Neg/Pos first when `extend` is set) plus the rank certificate.
Report cmd_crossings(const RunConfig& cfg, const CurveSpec& spec, bool extend);

// Suites: rankstep, rankmove, counts, theorem-main, theorem-la, duality.
Report cmd_verify(const RunConfig& cfg, const std::string& suite, std::size_t n_lo, std::size_t n_hi,
                  std::size_t samples);

// Actions: enumerate, rank, moves, move, from-matrix, witness; crossing and
// certify run on a curve.
struct WordsArgs {
  std::string action;
  std::string word;
  bool plus_only = false;
  int label = 0;
  std::optional<std::string> direction;
  std::optional<std::string> matrix;  // JSON text or path, for from-matrix
  std::optional<CurveSpec> curve;     // for crossing and certify
  bool extend = false;
};
Report cmd_words(const RunConfig& cfg, const WordsArgs& args);

// SVG of a word (with an optional move) or of a curve's crossing sequence.
struct SvgResult {
  std::string svg;
  Report report;
};
SvgResult cmd_svg_word(const RunConfig& cfg, const std::string& word, std::optional<int> move_label);
SvgResult cmd_svg_curve(const RunConfig& cfg, const CurveSpec& spec, bool extend);

// Full command line. Exit codes: 0 all verdicts pass, 1 some verdict failed,
// 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagcurve::cli
