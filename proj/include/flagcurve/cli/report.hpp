#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "flagcurve/exactnum/roots.hpp"
#include "flagcurve/words/crossing.hpp"

namespace flagcurve::cli {

using nlohmann::json;

struct Verdict {
  std::string name;
  std::string invariant;  // the property that was checked
  bool passed = false;
  std::string detail;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Report {
  std::string command;
  json echo;     // the effective configuration and inputs
  json payload;  // command-specific results
  std::vector<Verdict> verdicts;

  bool all_pass() const;
  friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& r);
Report report_from_json(const json& j);

// Exact interval plus a decimal rendering of its midpoint.
json root_to_json(const exact::RootInterval& r, int digits);
exact::RootInterval root_from_json(const json& j);
json polynomial_to_json(const exact::Polynomial& p);
exact::Polynomial polynomial_from_json(const json& j);
json move_to_json(const words::MoveRecord& m);
json crossing_sequence_to_json(const words::CrossingSequence& cs, int digits);

std::string render_json(const Report& r);
std::string render_text(const Report& r);
// Only for reports carrying a "root_table": columns k, root_lo, root_hi, multiplicity.
std::string render_csv(const Report& r);
std::string render(const Report& r, const std::string& format);

}  // namespace flagcurve::cli
