#include <fstream>
#include <map>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "flagcurve/bruhat/itinerary.hpp"
#include "flagcurve/cli/commands.hpp"
#include "flagcurve/cli/random_curves.hpp"
#include "flagcurve/curve/extension.hpp"
#include "flagcurve/errors.hpp"
#include "flagcurve/exactnum/roots.hpp"
#include "flagcurve/words/svg.hpp"

namespace flagcurve::cli {

json RunConfig::to_json() const {
  json j;
  j["n"] = n;
  j["seed"] = seed;
  if (domain) j["domain"] = {exact::to_string(domain->first), exact::to_string(domain->second)};
  j["precision"] = exact::to_string(precision);
  j["format"] = format;
  j["perturb"] = perturb;
  j["digits"] = digits;
  return j;
}

namespace {

constexpr int kPerturbAttempts = 64;

exact::Bound domain_lo(const RunConfig& cfg) { return cfg.domain ? exact::Bound(cfg.domain->first) : exact::Bound(); }
exact::Bound domain_hi(const RunConfig& cfg) { return cfg.domain ? exact::Bound(cfg.domain->second) : exact::Bound(); }

void check_config(const RunConfig& cfg) {
  if (cfg.precision <= 0) throw UsageError("--precision must be positive");
  if (cfg.domain && !(cfg.domain->first < cfg.domain->second)) throw UsageError("--domain needs lo < hi");
  if (cfg.digits < 0 || cfg.digits > 100) throw UsageError("--digits must lie in [0, 100]");
}

Verdict verdict(std::string name, std::string invariant, bool passed, std::string detail = {}) {
  return {std::move(name), std::move(invariant), passed, std::move(detail)};
}

json roots_json(const exact::Polynomial& p, const RunConfig& cfg, json* table, int k) {
  json out = json::array();
  const exact::RealRootIsolator iso(p);
  for (auto r : iso.isolate(domain_lo(cfg), domain_hi(cfg))) {
    iso.refine(r, cfg.precision);
    r.multiplicity = iso.multiplicity(r);
    json row = root_to_json(r, cfg.digits);
    out.push_back(row);
    if (table) {
      row["k"] = k;
      table->push_back(row);
    }
  }
  return out;
}

// Runs `body` on the spec, retrying with seeded perturbations on degeneracy
// when allowed. Returns the spec that finally worked.
template <typename F>
CurveSpec with_perturbation(const RunConfig& cfg, CurveSpec spec, int& attempts, F&& body) {
  std::mt19937_64 rng(cfg.seed);
  for (attempts = 0;; ++attempts) {
    try {
      body(spec);
      return spec;
    } catch (const DegenerateError&) {
      if (!cfg.perturb || attempts >= kPerturbAttempts) throw;
      spec = perturbed(spec, rng, attempts);
    }
  }
}

}  // namespace

Report cmd_curve(const RunConfig& cfg, const CurveSpec& spec, bool pairs) {
  check_config(cfg);
  const curve::PolynomialCurve c = spec.make();
  const std::size_t n = c.n();
  Report r;
  r.command = "curve";
  r.echo = cfg.to_json();
  r.echo["spec"] = spec.to_json();
  r.payload["n"] = n;
  json minors = json::array();
  json table = json::array();
  bool degrees = true;
  bool leading = true;
  for (std::size_t k = 1; k < n; ++k) {
    const auto m = curve::minor_k(c, k);
    const int expected = static_cast<int>(k * (n - k));
    degrees = degrees && m.degree() == expected;
    leading = leading && m.leading() > 0;
    minors.push_back({{"k", k},
                      {"degree", m.degree()},
                      {"expected_degree", expected},
                      {"leading_sign", exact::sign(m.leading())},
                      {"coefficients", polynomial_to_json(m)},
                      {"polynomial", m.to_string()},
                      {"roots", roots_json(m, cfg, &table, static_cast<int>(k))}});
  }
  r.payload["minors"] = minors;
  r.payload["root_table"] = table;
  if (pairs) {
    const auto pc = curve::project(c);
    json pm = json::array();
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        const auto m = curve::minor_pair(pc, i, j);
        json e = {{"Y", {i, j}}, {"coefficients", polynomial_to_json(m)}, {"polynomial", m.to_string()}};
        e["roots"] = m.is_zero() ? json::array() : roots_json(m, cfg, nullptr, 0);
        pm.push_back(e);
      }
    }
    r.payload["pair_minors"] = pm;
  }
  r.verdicts.push_back(verdict("flag-convex", "Gamma' = Gamma N0 as polynomial matrices", c.is_flag_convex()));
  r.verdicts.push_back(verdict("minor-degrees", "deg m_k = k(n-k) for every k", degrees));
  r.verdicts.push_back(verdict("leading-positive", "leading coefficient of every m_k is positive", leading));
  return r;
}

Report cmd_itinerary(const RunConfig& cfg, const CurveSpec& input) {
  check_config(cfg);
  bruhat::Itinerary it;
  int attempts = 0;
  const CurveSpec spec = with_perturbation(cfg, input, attempts, [&](const CurveSpec& s) {
    it = bruhat::itinerary(s.make(), domain_lo(cfg), domain_hi(cfg), cfg.precision);
  });
  const std::size_t n = spec.n();
  Report r;
  r.command = "itinerary";
  r.echo = cfg.to_json();
  r.echo["spec"] = input.to_json();
  r.payload["n"] = n;
  r.payload["itinerary"] = it.letters();
  r.payload["perturbed"] = attempts > 0;
  if (attempts > 0) r.payload["effective_spec"] = spec.to_json();
  const auto counts = it.letter_counts(n);
  r.payload["letter_counts"] = counts;
  r.payload["total"] = it.entries.size();
  r.payload["maximal_total"] = (n * n * n - n) / 6;
  json entries = json::array();
  json table = json::array();
  for (const auto& e : it.entries) {
    json row = root_to_json(e.root, cfg.digits);
    row["k"] = e.k;
    table.push_back(row);
    row["letter"] = std::string(1, static_cast<char>('a' + e.k - 1));
    entries.push_back(row);
  }
  r.payload["entries"] = entries;
  r.payload["root_table"] = table;
  bool bounded = true;
  for (std::size_t k = 1; k < n; ++k) bounded = bounded && counts[k - 1] <= k * (n - k);
  r.verdicts.push_back(verdict("letter-bound", "letter a_k occurs at most k(n-k) times", bounded));
  bool ordered = true;
  for (std::size_t i = 0; i + 1 < it.entries.size(); ++i) ordered = ordered && it.entries[i].root.hi < it.entries[i + 1].root.lo;
  r.verdicts.push_back(verdict("time-order", "root intervals strictly ordered and disjoint", ordered));
  return r;
}

namespace {

void add_sequence_verdicts(Report& r, const words::CrossingSequence& cs) {
  const auto ranks = cs.ranks();
  bool monotone = true;
  bool step = true;
  bool moves = true;
  for (std::size_t k = 0; k < cs.crossings.size(); ++k) {
    const auto& x = cs.crossings[k];
    monotone = monotone && ranks[k + 1] <= ranks[k];
    if (x.i == 1 && x.j == 2) step = step && ranks[k + 1] == ranks[k] - 1;
    moves = moves && x.move.before == cs.words[k] && x.move.after == cs.words[k + 1] &&
            words::apply_move(x.move.before, x.move.label, x.move.direction).after == x.move.after;
  }
  r.verdicts.push_back(verdict("admissible-moves", "consecutive words differ by one admissible move", moves));
  r.verdicts.push_back(verdict("rank-monotone", "rank never increases along the curve", monotone));
  r.verdicts.push_back(verdict("rank-step", "rank drops by exactly 1 at every {1,2}-crossing", step));
}

std::pair<Rational, Rational> domain_or_default(const RunConfig& cfg) {
  return cfg.domain.value_or(std::pair<Rational, Rational>{Rational(-1), Rational(1)});
}

}  // namespace

Report cmd_crossings(const RunConfig& cfg, const CurveSpec& input, bool extend) {
  check_config(cfg);
  const auto [lo, hi] = domain_or_default(cfg);
  std::optional<words::CrossingSequence> cs;
  int attempts = 0;
  const CurveSpec spec = with_perturbation(cfg, input, attempts, [&](const CurveSpec& s) {
    const auto c = s.make();
    cs = words::crossing_sequence(extend ? curve::extend_curve(c, lo, hi) : curve::single_piece(c, lo, hi),
                                  cfg.precision);
  });
  Report r;
  r.command = "words crossing";
  r.echo = cfg.to_json();
  r.echo["spec"] = input.to_json();
  r.echo["extend"] = extend;
  r.payload = crossing_sequence_to_json(*cs, cfg.digits);
  r.payload["perturbed"] = attempts > 0;
  if (attempts > 0) r.payload["effective_spec"] = spec.to_json();
  add_sequence_verdicts(r, *cs);
  return r;
}

namespace {

Report cmd_certify(const RunConfig& cfg, const CurveSpec& input) {
  check_config(cfg);
  const auto [lo, hi] = domain_or_default(cfg);
  std::optional<words::TheoremMainReport> rep;
  int attempts = 0;
  const CurveSpec spec = with_perturbation(cfg, input, attempts, [&](const CurveSpec& s) {
    rep = words::certify_theorem_main(s.make(), lo, hi);
  });
  Report r;
  r.command = "words certify";
  r.echo = cfg.to_json();
  r.echo["spec"] = input.to_json();
  r.payload["n"] = rep->n;
  r.payload["bound"] = rep->bound;
  r.payload["extended_domain"] = {exact::to_string(rep->a), exact::to_string(rep->b)};
  r.payload["m2_root_count"] = rep->m2_root_count;
  r.payload["m2_crossings"] = rep->m2_crossings;
  r.payload["rank_trace"] = rep->rank_trace;
  r.payload["sequence"] = crossing_sequence_to_json(rep->sequence, cfg.digits);
  r.payload["perturbed"] = attempts > 0;
  if (attempts > 0) r.payload["effective_spec"] = spec.to_json();
  std::string detail;
  for (const auto& f : rep->failures) detail += (detail.empty() ? "" : "; ") + f;
  r.verdicts.push_back(verdict("m2-bound", "m_2 has at most 2(n-2) zeros, certified by the rank trace", rep->pass(),
                               detail));
  return r;
}

words::Direction parse_direction(const std::string& s) {
  if (s == "ccw") return words::Direction::ccw;
  if (s == "cw") return words::Direction::cw;
  throw UsageError("direction must be cw or ccw");
}

}  // namespace

Report cmd_words(const RunConfig& cfg, const WordsArgs& args) {
  check_config(cfg);
  Report r;
  r.command = "words " + args.action;
  r.echo = cfg.to_json();
  if (args.action == "enumerate") {
    const auto all = words::enumerate_words(cfg.n, args.plus_only);
    json ws = json::array();
    for (const auto& w : all) ws.push_back({{"word", w.to_string()}, {"rank", words::rank(w)}});
    r.echo["plus_only"] = args.plus_only;
    r.payload["n"] = cfg.n;
    r.payload["count"] = all.size();
    r.payload["words"] = ws;
    long fact = 1;
    for (long i = 2; i < static_cast<long>(cfg.n); ++i) fact *= i;
    const long expected = (1L << (cfg.n - (args.plus_only ? 2 : 1))) * fact;
    r.verdicts.push_back(verdict("count", args.plus_only ? "|W+| = 2^(n-2) (n-1)!" : "|W| = 2^(n-1) (n-1)!",
                                 static_cast<long>(all.size()) == expected, "expected " + std::to_string(expected)));
    return r;
  }
  if (args.action == "rank" || args.action == "moves" || args.action == "move" || args.action == "witness") {
    if (args.word.empty()) throw UsageError("--word is required for words " + args.action);
    const auto w = words::parse_word(args.word);
    r.echo["word"] = args.word;
    r.payload["word"] = w.to_string();
    r.payload["rank"] = words::rank(w);
    r.payload["plus"] = words::is_plus(w);
    const int n = static_cast<int>(w.n());
    json signs = json::object();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) signs[std::to_string(i) + "," + std::to_string(j)] = words::pair_sign(w, i, j);
    }
    r.payload["pair_signs"] = signs;
    const int rk = words::rank(w);
    r.verdicts.push_back(verdict("rank-range", "0 <= rank <= 2(n-2)", rk >= 0 && rk <= 2 * (n - 2)));
    r.verdicts.push_back(verdict("parity", "pair_sign{1,2} = +1 iff rank is even",
                                 (words::pair_sign(w, 1, 2) > 0) == (rk % 2 == 0)));
    if (args.action == "moves") {
      json ms = json::array();
      bool monotone = true;
      for (const auto& m : words::legal_moves(w)) {
        ms.push_back(move_to_json(m));
        monotone = monotone && m.rank_after <= m.rank_before;
      }
      r.payload["moves"] = ms;
      r.verdicts.push_back(verdict("rank-monotone", "no legal move increases rank", monotone));
    } else if (args.action == "move") {
      const auto dir = args.direction ? parse_direction(*args.direction)
                                      : (args.label >= 1 && args.label < n && words::pair_sign(w, args.label, args.label + 1) > 0
                                             ? words::Direction::ccw
                                             : words::Direction::cw);
      const auto m = words::apply_move(w, args.label, dir);
      r.payload["move"] = move_to_json(m);
      r.verdicts.push_back(verdict("rank-monotone", "the move does not increase rank", m.rank_after <= m.rank_before));
    } else if (args.action == "witness") {
      const auto x = words::witness_matrix(w);
      r.payload["matrix"] = matrix_to_json(x);
      r.verdicts.push_back(verdict("witness", "w(X) equals the word", words::word_of_matrix(x) == w));
    }
    return r;
  }
  if (args.action == "from-matrix") {
    if (!args.matrix) throw UsageError("--matrix is required for words from-matrix");
    const auto x = matrix_from_json(load_json_arg(*args.matrix));
    if (x.rows() != 2) throw UsageError("from-matrix expects a 2 x n matrix");
    const auto w = words::word_of_matrix(x);
    r.echo["matrix"] = matrix_to_json(x);
    r.payload["word"] = w.to_string();
    r.payload["rank"] = words::rank(w);
    r.payload["plus"] = words::is_plus(w);
    bool coherent = true;
    const int n = static_cast<int>(w.n());
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        coherent = coherent && words::pair_sign(w, i, j) ==
                                   exact::sign(curve::minor_pair(x, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      }
    }
    r.verdicts.push_back(verdict("sign-coherence", "pair_sign(w(X), Y) = sign m_Y(X) for all Y", coherent));
    return r;
  }
  if (args.action == "crossing" || args.action == "certify") {
    if (!args.curve) throw UsageError("words " + args.action + " needs a curve (--input or --gens)");
    return args.action == "crossing" ? cmd_crossings(cfg, *args.curve, args.extend) : cmd_certify(cfg, *args.curve);
  }
  throw UsageError("unknown words action '" + args.action + "'");
}

SvgResult cmd_svg_word(const RunConfig& cfg, const std::string& word, std::optional<int> move_label) {
  check_config(cfg);
  const auto w = words::parse_word(word);
  std::optional<words::MoveRecord> move;
  if (move_label) {
    const int j = *move_label;
    if (j < 1 || j >= static_cast<int>(w.n())) throw UsageError("--move label must lie in 1..n-1");
    move = words::apply_move(w, j, words::pair_sign(w, j, j + 1) > 0 ? words::Direction::ccw : words::Direction::cw);
  }
  SvgResult out{words::word_svg(w, move), {}};
  out.report.command = "svg";
  out.report.echo = cfg.to_json();
  out.report.echo["word"] = word;
  out.report.payload["word"] = w.to_string();
  out.report.payload["rank"] = words::rank(w);
  if (move) out.report.payload["move"] = move_to_json(*move);
  return out;
}

SvgResult cmd_svg_curve(const RunConfig& cfg, const CurveSpec& spec, bool extend) {
  Report r = cmd_crossings(cfg, spec, extend);
  // Rebuild the sequence from the effective spec for drawing.
  const CurveSpec used = r.payload.contains("effective_spec") ? curve_spec_from_json(r.payload["effective_spec"]) : spec;
  const auto [lo, hi] = domain_or_default(cfg);
  const auto c = used.make();
  const auto cs =
      words::crossing_sequence(extend ? curve::extend_curve(c, lo, hi) : curve::single_piece(c, lo, hi), cfg.precision);
  r.command = "svg";
  return {words::crossing_svg(cs), std::move(r)};
}

namespace {

struct CurveInput {
  std::string input;
  std::string gens;
  std::string subdiag;
};

void add_curve_options(CLI::App* sub, CurveInput& in) {
  sub->add_option("--input", in.input, "curve spec as JSON text or a path to a JSON file");
  sub->add_option("--gens", in.gens, "generator word, whitespace-separated j:tau pairs");
  sub->add_option("--subdiag", in.subdiag, "subdiagonal of N0 (default all ones)");
}

CurveSpec curve_from(const CurveInput& in, std::size_t n) {
  if (!in.input.empty() && !in.gens.empty()) throw UsageError("give either --input or --gens, not both");
  const std::vector<Rational> sub = in.subdiag.empty() ? std::vector<Rational>{} : parse_rational_list(in.subdiag);
  if (!in.input.empty()) {
    json j = load_json_arg(in.input);
    if (!sub.empty()) {
      json arr = json::array();
      for (const auto& s : sub) arr.push_back(rational_to_json(s));
      j["N0"] = arr;
    }
    return curve_spec_from_json(j);
  }
  // With no input at all, the empty word gives L0 = Id.
  return curve_spec_from_word(n, in.gens, sub);
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + *cfg.out);
    f << text;
  } else {
    out << text;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"flagcurve: zeros of minors along flag-convex curves, words and ranks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> domain;
  std::string precision = "1/1000";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "matrix size")->check(CLI::Range(2, 8));
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--domain", domain, "domain endpoints lo hi (rationals)")->expected(2);
    sub->add_option("--precision", precision, "maximal width of isolating intervals, p/q");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--perturb", cfg.perturb, "retry degenerate inputs with seeded perturbations");
    sub->add_option("--out", out_path, "write output to this path");
    sub->add_option("--digits", cfg.digits, "decimal digits for presentation");
  };

  CurveInput curve_in;
  bool pairs = false;
  auto* curve_cmd = app.add_subcommand("curve", "minor polynomials, degrees, leading signs and roots");
  add_common(curve_cmd);
  add_curve_options(curve_cmd, curve_in);
  curve_cmd->add_flag("--pairs", pairs, "also report the 2x2 minors m_Y of the last two rows");

  auto* itin_cmd = app.add_subcommand("itinerary", "time-ordered letters at the roots of the minors");
  add_common(itin_cmd);
  add_curve_options(itin_cmd, curve_in);

  std::string suite;
  std::vector<std::size_t> n_range;
  std::size_t samples = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  add_common(verify_cmd);
  verify_cmd->add_option("suite", suite, "rankstep | rankmove | counts | theorem-main | theorem-la | duality")
      ->required()
      ->check(CLI::IsMember({"rankstep", "rankmove", "counts", "theorem-main", "theorem-la", "duality"}));
  verify_cmd->add_option("--n-range", n_range, "lo hi (defaults to --n alone)")->expected(2);
  verify_cmd->add_option("--samples", samples, "random samples per n (suite default when omitted)");

  WordsArgs wargs;
  std::string direction;
  std::string matrix;
  auto* words_cmd = app.add_subcommand("words", "admissible words: enumerate, rank, moves, crossings");
  add_common(words_cmd);
  words_cmd->add_option("action", wargs.action, "enumerate | rank | moves | move | from-matrix | witness | crossing | certify")
      ->required()
      ->check(CLI::IsMember({"enumerate", "rank", "moves", "move", "from-matrix", "witness", "crossing", "certify"}));
  words_cmd->add_option("--word", wargs.word, "cyclic word such as 143'21'4'32'");
  words_cmd->add_flag("--plus", wargs.plus_only, "enumerate only words with pair_sign(n-1, n) = +1");
  words_cmd->add_option("--label", wargs.label, "moving label j for 'move'");
  words_cmd->add_option("--direction", direction, "cw | ccw (default: towards j+1)");
  words_cmd->add_option("--matrix", matrix, "2 x n matrix as JSON text or path");
  words_cmd->add_flag("--extend", wargs.extend, "extend the curve into Neg/Pos before following words");
  add_curve_options(words_cmd, curve_in);

  std::string svg_word;
  int svg_move = 0;
  bool svg_extend = false;
  auto* svg_cmd = app.add_subcommand("svg", "SVG of a word or of a curve's crossing sequence");
  add_common(svg_cmd);
  svg_cmd->add_option("--word", svg_word, "draw this word");
  auto* move_opt = svg_cmd->add_option("--move", svg_move, "also draw the move of label j");
  svg_cmd->add_flag("--extend", svg_extend, "extend the curve into Neg/Pos first");
  add_curve_options(svg_cmd, curve_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!domain.empty()) cfg.domain = std::pair{exact::parse_rational(domain[0]), exact::parse_rational(domain[1])};
    cfg.precision = exact::parse_rational(precision);
    if (!out_path.empty()) cfg.out = out_path;

    Report report;
    if (*curve_cmd) {
      report = cmd_curve(cfg, curve_from(curve_in, cfg.n), pairs);
    } else if (*itin_cmd) {
      report = cmd_itinerary(cfg, curve_from(curve_in, cfg.n));
    } else if (*verify_cmd) {
      static const std::map<std::string, std::size_t> default_samples = {
          {"theorem-main", 200}, {"theorem-la", 3}, {"duality", 50}};
      const auto it = default_samples.find(suite);
      if (samples == 0) samples = it == default_samples.end() ? 0 : it->second;
      const std::size_t lo = n_range.empty() ? cfg.n : n_range[0];
      const std::size_t hi = n_range.empty() ? cfg.n : n_range[1];
      report = cmd_verify(cfg, suite, lo, hi, samples);
    } else if (*words_cmd) {
      if (!direction.empty()) wargs.direction = direction;
      if (!matrix.empty()) wargs.matrix = matrix;
      if (wargs.action == "crossing" || wargs.action == "certify") wargs.curve = curve_from(curve_in, cfg.n);
      report = cmd_words(cfg, wargs);
    } else {
      SvgResult res;
      if (!svg_word.empty()) {
        res = cmd_svg_word(cfg, svg_word, move_opt->count() ? std::optional<int>(svg_move) : std::nullopt);
      } else {
        res = cmd_svg_curve(cfg, curve_from(curve_in, cfg.n), svg_extend);
      }
      // The picture goes to --out (or stdout); with --out the report follows on stdout.
      emit(res.svg, cfg, out);
      if (cfg.out) out << render(res.report, cfg.format);
      return res.report.all_pass() ? 0 : 1;
    }
    emit(render(report, cfg.format), cfg, out);
    return report.all_pass() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << (cfg.perturb ? "" : " (try --perturb)") << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace flagcurve::cli
