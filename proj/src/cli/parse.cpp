#include <fstream>
#include <sstream>

#include "flagcurve/bruhat/good_matrix.hpp"
#include "flagcurve/cli/parse.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::cli {

curve::PolynomialCurve CurveSpec::make() const {
  return curve::PolynomialCurve(l0, curve::NilpotentGenerator(subdiag));
}

json CurveSpec::to_json() const {
  json j;
  j["n"] = n();
  j["L0"] = matrix_to_json(l0);
  json sub = json::array();
  for (const auto& c : subdiag) sub.push_back(rational_to_json(c));
  j["N0"] = sub;
  if (word) {
    std::string w;
    for (std::size_t i = 0; i < word->size(); ++i) {
      if (i) w += ' ';
      w += std::to_string((*word)[i]) + ":" + exact::to_string(taus[i]);
    }
    j["word"] = w;
  }
  return j;
}

std::vector<std::pair<int, Rational>> parse_generator_word(std::string_view text) {
  std::vector<std::pair<int, Rational>> out;
  std::istringstream in{std::string(text)};
  std::string item;
  while (in >> item) {
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
      throw UsageError("generator entries must look like j:tau, got '" + item + "'");
    }
    int j = 0;
    try {
      std::size_t used = 0;
      j = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("bad generator index in '" + item + "'");
    }
    out.emplace_back(j, exact::parse_rational(item.substr(colon + 1)));
  }
  return out;
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) return exact::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw UsageError("rationals must be given as \"p/q\" strings or integers");
}

json rational_to_json(const Rational& q) { return exact::to_string(q); }

RationalMatrix matrix_from_json(const json& v) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) throw UsageError("matrix must be a non-empty array of rows");
  const std::size_t rows = v.size();
  const std::size_t cols = v[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols) throw UsageError("matrix rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational_from_json(v[i][j]);
  }
  return m;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json load_json_arg(const std::string& text_or_path) {
  std::string text = text_or_path;
  std::ifstream file(text_or_path);
  if (file) {
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

namespace {

std::vector<Rational> subdiag_from_json(const json& j, std::size_t n) {
  if (!j.contains("N0")) return std::vector<Rational>(n - 1, Rational(1));
  std::vector<Rational> sub;
  for (const auto& v : j.at("N0")) sub.push_back(rational_from_json(v));
  if (sub.size() != n - 1) throw UsageError("N0 must list n-1 subdiagonal entries");
  return sub;
}

}  // namespace

CurveSpec curve_spec_from_word(std::size_t n, std::string_view word, const std::vector<Rational>& subdiag) {
  if (n < 2 || n > 8) throw UsageError("n must lie in [2, 8]");
  CurveSpec spec;
  spec.word = bruhat::ReducedWord{};
  for (const auto& [j, tau] : parse_generator_word(word)) {
    if (j < 1 || j >= static_cast<int>(n)) throw UsageError("generator index out of range for this n");
    spec.word->push_back(j);
    spec.taus.push_back(tau);
  }
  spec.l0 = bruhat::product_of_generators(n, *spec.word, spec.taus);
  spec.subdiag = subdiag.empty() ? std::vector<Rational>(n - 1, Rational(1)) : subdiag;
  if (spec.subdiag.size() != n - 1) throw UsageError("N0 must list n-1 subdiagonal entries");
  return spec;
}

CurveSpec curve_spec_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("curve spec must be a JSON object");
  try {
    if (j.contains("word")) {
      if (!j.contains("n")) throw UsageError("a generator-word spec needs \"n\"");
      const std::size_t n = j.at("n").get<std::size_t>();
      return curve_spec_from_word(n, j.at("word").get<std::string>(), subdiag_from_json(j, n));
    }
    if (!j.contains("L0")) throw UsageError("curve spec needs \"L0\" or \"word\"");
    CurveSpec spec;
    spec.l0 = matrix_from_json(j.at("L0"));
    const std::size_t n = spec.l0.rows();
    if (n < 2 || n > 8) throw UsageError("n must lie in [2, 8]");
    if (j.contains("n") && j.at("n").get<std::size_t>() != n) throw UsageError("\"n\" disagrees with L0");
    curve::require_lower_unitriangular(spec.l0, "L0");
    spec.subdiag = subdiag_from_json(j, n);
    return spec;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed curve spec: ") + e.what());
  }
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  std::vector<Rational> out;
  std::string item;
  while (in >> item) out.push_back(exact::parse_rational(item));
  return out;
}

}  // namespace flagcurve::cli
