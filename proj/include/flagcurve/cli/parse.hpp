#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "flagcurve/bruhat/permutation.hpp"
#include "flagcurve/curve/curve.hpp"

namespace flagcurve::cli {

using exact::Rational;
using exact::RationalMatrix;
using nlohmann::json;

// A curve L0 exp(t N0), optionally remembered as a generator product
// lambda_{j_1}(tau_1) ... lambda_{j_l}(tau_l) so it can be perturbed.
struct CurveSpec {
  RationalMatrix l0;
  std::vector<Rational> subdiag;
  std::optional<bruhat::ReducedWord> word;
  std::vector<Rational> taus;

  std::size_t n() const { return l0.rows(); }
  curve::PolynomialCurve make() const;
  json to_json() const;
};

// "j:tau" pairs separated by whitespace, applied left to right.
std::vector<std::pair<int, Rational>> parse_generator_word(std::string_view text);

// Rationals are written as "p/q" strings; plain JSON integers are accepted.
Rational rational_from_json(const json& v);
json rational_to_json(const Rational& q);
RationalMatrix matrix_from_json(const json& v);
json matrix_to_json(const RationalMatrix& m);

// Either literal JSON text or the path of a file holding it.
json load_json_arg(const std::string& text_or_path);

// {"L0": [[...], ...], "N0": [...]} or {"n": 5, "word": "1:1 2:-1", "N0": [...]}.
// N0 (the subdiagonal) defaults to all ones.
CurveSpec curve_spec_from_json(const json& j);
CurveSpec curve_spec_from_word(std::size_t n, std::string_view word, const std::vector<Rational>& subdiag = {});

// Whitespace- or comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace flagcurve::cli
