#include <sstream>

#include "flagcurve/cli/parse.hpp"
#include "flagcurve/cli/report.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::cli {

bool Report::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.passed) return false;
  }
  return true;
}

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["echo"] = r.echo;
  j["payload"] = r.payload;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"name", v.name}, {"invariant", v.invariant}, {"passed", v.passed}, {"detail", v.detail}});
  }
  j["verdicts"] = verdicts;
  j["all_pass"] = r.all_pass();
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.echo = j.at("echo");
  r.payload = j.at("payload");
  for (const auto& v : j.at("verdicts")) {
    r.verdicts.push_back({v.at("name").get<std::string>(), v.at("invariant").get<std::string>(),
                          v.at("passed").get<bool>(), v.at("detail").get<std::string>()});
  }
  return r;
}

json root_to_json(const exact::RootInterval& r, int digits) {
  return {{"lo", exact::to_string(r.lo)},
          {"hi", exact::to_string(r.hi)},
          {"multiplicity", r.multiplicity},
          {"approx", exact::to_decimal(r.midpoint(), digits)}};
}

exact::RootInterval root_from_json(const json& j) {
  return {exact::parse_rational(j.at("lo").get<std::string>()), exact::parse_rational(j.at("hi").get<std::string>()),
          j.at("multiplicity").get<int>()};
}

json polynomial_to_json(const exact::Polynomial& p) {
  json c = json::array();
  for (const auto& q : p.coefficients()) c.push_back(exact::to_string(q));
  return c;
}

exact::Polynomial polynomial_from_json(const json& j) {
  std::vector<exact::Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return exact::Polynomial(std::move(c));
}

json move_to_json(const words::MoveRecord& m) {
  return {{"label", m.label},
          {"direction", words::to_string(m.direction)},
          {"passed", m.passed.to_string()},
          {"type", words::to_string(m.type)},
          {"word_before", m.before.to_string()},
          {"word_after", m.after.to_string()},
          {"rank_before", m.rank_before},
          {"rank_after", m.rank_after}};
}

json crossing_sequence_to_json(const words::CrossingSequence& cs, int digits) {
  json j;
  j["n"] = cs.n;
  j["lo"] = exact::to_string(cs.lo);
  j["hi"] = exact::to_string(cs.hi);
  json ws = json::array();
  for (const auto& w : cs.words) ws.push_back({{"word", w.to_string()}, {"rank", words::rank(w)}});
  j["words"] = ws;
  json xs = json::array();
  for (const auto& x : cs.crossings) {
    json e = move_to_json(x.move);
    e["Y"] = {x.i, x.j};
    e["root"] = root_to_json(x.root, digits);
    xs.push_back(e);
  }
  j["crossings"] = xs;
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void text_value(std::ostringstream& out, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) text_value(out, k, x, indent + 2);
  } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
    out << pad << key << ":\n";
    for (const auto& x : v) {
      if (x.is_object()) {
        out << pad << "  -";
        for (const auto& [k, y] : x.items()) out << ' ' << k << '=' << (y.is_primitive() ? scalar(y) : y.dump());
        out << '\n';
      } else {
        out << pad << "  - " << x.dump() << '\n';
      }
    }
  } else if (v.is_array()) {
    out << pad << key << ":";
    for (const auto& x : v) out << ' ' << scalar(x);
    out << '\n';
  } else {
    out << pad << key << ": " << scalar(v) << '\n';
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  if (r.payload.is_object()) {
    for (const auto& [k, v] : r.payload.items()) text_value(out, k, v, 0);
  }
  for (const auto& v : r.verdicts) {
    out << (v.passed ? "PASS " : "FAIL ") << v.name << " -- " << v.invariant;
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << '\n';
  }
  out << (r.all_pass() ? "all verdicts pass\n" : "some verdicts failed\n");
  return out.str();
}

std::string render_csv(const Report& r) {
  if (!r.payload.is_object() || !r.payload.contains("root_table")) {
    throw UsageError("csv output is only available for commands that produce a root table");
  }
  std::ostringstream out;
  out << "k,root_lo,root_hi,multiplicity\n";
  for (const auto& row : r.payload.at("root_table")) {
    out << row.at("k").get<int>() << ',' << row.at("lo").get<std::string>() << ',' << row.at("hi").get<std::string>()
        << ',' << row.at("multiplicity").get<int>() << '\n';
  }
  return out.str();
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return render_json(r);
  if (format == "text") return render_text(r);
  if (format == "csv") return render_csv(r);
  throw UsageError("unknown format '" + format + "'");
}

}  // namespace flagcurve::cli
