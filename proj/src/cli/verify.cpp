#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "flagcurve/bruhat/good_matrix.hpp"
#include "flagcurve/bruhat/itinerary.hpp"
#include "flagcurve/cli/commands.hpp"
#include "flagcurve/cli/random_curves.hpp"
#include "flagcurve/curve/duality.hpp"
#include "flagcurve/curve/positivity.hpp"
#include "flagcurve/errors.hpp"
#include "flagcurve/exactnum/roots.hpp"
#include "flagcurve/words/crossing.hpp"

namespace flagcurve::cli {

namespace {

// Evaluates f(0..count-1) on worker threads; results come back in index order
// so the report never depends on scheduling.
template <typename F>
auto parallel_map(std::size_t count, F f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(count);
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::string tag(const std::string& name, std::size_t n) { return name + "[n=" + std::to_string(n) + "]"; }

void add(Report& r, std::string name, std::string invariant, bool passed, std::string detail = {}) {
  r.verdicts.push_back({std::move(name), std::move(invariant), passed, std::move(detail)});
}

std::string first_failures(const std::vector<std::string>& failures, std::size_t limit = 3) {
  std::string out;
  for (std::size_t i = 0; i < failures.size() && i < limit; ++i) out += (i ? "; " : "") + failures[i];
  if (failures.size() > limit) out += "; ... (" + std::to_string(failures.size()) + " total)";
  return out;
}

void suite_rankstep(Report& r, std::size_t n) {
  const auto all = words::enumerate_words(n, true);
  const auto tp = words::totally_positive_word(n);
  const auto tn = words::totally_negative_word(n);
  const int top = 2 * (static_cast<int>(n) - 2);
  std::vector<std::string> parity, interior;
  for (const auto& w : all) {
    const int rk = words::rank(w);
    if ((words::pair_sign(w, 1, 2) > 0) != (rk % 2 == 0)) parity.push_back(w.to_string());
    if (w != tp && w != tn && !(rk > 0 && rk < top)) interior.push_back(w.to_string() + " has rank " + std::to_string(rk));
  }
  r.payload["per_n"].push_back({{"n", n},
                                {"words", all.size()},
                                {"positive_word", tp.to_string()},
                                {"negative_word", tn.to_string()},
                                {"rank_positive", words::rank(tp)},
                                {"rank_negative", words::rank(tn)}});
  add(r, tag("positive-word-rank", n), "rank of the totally positive word is 0", words::rank(tp) == 0);
  add(r, tag("negative-word-rank", n), "rank of the totally negative word is 2(n-2)",
      words::is_plus(tn) && words::rank(tn) == top);
  add(r, tag("interior-rank", n), "every other word in W+ has 0 < rank < 2(n-2)", interior.empty(),
      first_failures(interior));
  add(r, tag("rank-parity", n), "pair_sign{1,2} = +1 iff rank is even, on W+", parity.empty(), first_failures(parity));
}

void suite_rankmove(Report& r, std::size_t n) {
  const auto all = words::enumerate_words(n, true);
  std::size_t moves = 0;
  std::map<std::string, std::size_t> types;
  std::vector<std::string> increases, steps;
  for (const auto& w : all) {
    for (const auto& m : words::legal_moves(w)) {
      ++moves;
      ++types[words::to_string(m.type)];
      const std::string what = w.to_string() + " -> " + m.after.to_string();
      if (m.rank_after > m.rank_before) increases.push_back(what);
      if (m.wall() == std::pair{1, 2} && m.rank_after != m.rank_before - 1) steps.push_back(what);
    }
  }
  r.payload["per_n"].push_back({{"n", n}, {"words", all.size()}, {"moves", moves}, {"move_types", types}});
  add(r, tag("rank-monotone", n), "no legal move increases rank", increases.empty(), first_failures(increases));
  add(r, tag("rank-step", n), "a move across the {1,2} wall lowers rank by exactly 1", steps.empty(),
      first_failures(steps));
}

void suite_counts(Report& r, std::size_t n) {
  const auto unit = curve::NilpotentGenerator::unit(n);
  const auto g = bruhat::distinctify(bruhat::build_good_matrix(n, bruhat::top_word(n), unit), unit);
  const curve::PolynomialCurve c(g.l, unit);
  std::vector<std::size_t> counts;
  bool simple = true;
  std::size_t total = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const auto m = curve::minor_k(c, k);
    const std::size_t real = exact::count_real_roots(m);
    counts.push_back(real);
    simple = simple && exact::is_squarefree(m) && real == k * (n - k);
    total += real;
  }
  const std::size_t expected = (n * n * n - n) / 6;
  json taus = json::array();
  for (const auto& t : g.taus) taus.push_back(rational_to_json(t));
  r.payload["per_n"].push_back(
      {{"n", n}, {"word", bruhat::word_to_string(g.word)}, {"taus", taus}, {"root_counts", counts}, {"total", total}});
  add(r, tag("real-simple-roots", n), "each m_k has exactly k(n-k) real simple roots", simple);
  add(r, tag("pairwise-distinct", n), "no two minors share a root", bruhat::minors_pairwise_distinct(c));
  add(r, tag("total", n), "total number of roots is (n^3-n)/6", total == expected,
      std::to_string(total) + " of " + std::to_string(expected));
}

struct SampleOutcome {
  bool done = false;  // false: every draw was degenerate
  int redraws = 0;
  std::size_t m2_roots = 0;
  std::string failure;
};

constexpr int kRedraws = 16;

void suite_theorem_main(Report& r, std::size_t n, const std::vector<std::uint64_t>& seeds, const Rational& lo,
                        const Rational& hi) {
  const auto outcomes = parallel_map(seeds.size(), [&](std::size_t i) {
    std::mt19937_64 rng(seeds[i]);
    SampleOutcome o;
    for (; o.redraws < kRedraws; ++o.redraws) {
      const CurveSpec spec = random_curve_spec(rng, n);
      try {
        const auto rep = words::certify_theorem_main(spec.make(), lo, hi);
        o.done = true;
        o.m2_roots = rep.m2_root_count;
        if (!rep.pass()) o.failure = "seed " + std::to_string(seeds[i]) + ": " + first_failures(rep.failures);
        return o;
      } catch (const DegenerateError&) {
        continue;
      } catch (const Error& e) {
        o.done = true;
        o.failure = "seed " + std::to_string(seeds[i]) + ": " + e.what();
        return o;
      }
    }
    return o;
  });
  std::vector<std::string> failures;
  std::map<std::size_t, std::size_t> histogram;
  std::size_t certified = 0, skipped = 0, redraws = 0, worst = 0;
  for (const auto& o : outcomes) {
    redraws += static_cast<std::size_t>(o.redraws);
    if (!o.done) {
      ++skipped;
      continue;
    }
    if (!o.failure.empty()) {
      failures.push_back(o.failure);
      continue;
    }
    ++certified;
    ++histogram[o.m2_roots];
    worst = std::max(worst, o.m2_roots);
  }
  json hist = json::object();
  for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
  r.payload["per_n"].push_back({{"n", n},
                                {"samples", seeds.size()},
                                {"certified", certified},
                                {"degenerate_redraws", redraws},
                                {"skipped", skipped},
                                {"max_m2_roots", worst},
                                {"m2_root_histogram", hist}});
  add(r, tag("m2-zero-bound", n), "rank certificate: m_2 has at most 2(n-2) zeros on every sample",
      failures.empty() && skipped == 0 && worst <= 2 * (n - 2),
      failures.empty() ? std::to_string(certified) + " certified, max " + std::to_string(worst)
                       : first_failures(failures));
}

void suite_theorem_la(Report& r, std::size_t n, const std::vector<std::uint64_t>& seeds) {
  const auto outcomes = parallel_map(seeds.size(), [&](std::size_t i) -> std::string {
    std::mt19937_64 rng(seeds[i]);
    std::vector<Rational> sub(n - 1);
    for (auto& s : sub) s = exact::make_rational(draw(rng, 1, 4), draw(rng, 1, 3));
    const curve::NilpotentGenerator n0(sub);
    bruhat::GoodMatrixOptions opt;
    opt.mode = bruhat::GoodMode::along_curve;
    opt.sign_seed = rng();
    const std::string who = "seed " + std::to_string(seeds[i]) + ": ";
    try {
      const auto g = bruhat::build_good_matrix(n, bruhat::top_word(n), n0, opt);
      const curve::PolynomialCurve c(g.l, n0);
      for (std::size_t k = 1; k < n; ++k) {
        const std::size_t cnt = exact::count_real_roots(curve::minor_k(c, k), opt.t_minus, opt.t_plus);
        if (cnt != k * (n - k)) return who + "m_" + std::to_string(k) + " has " + std::to_string(cnt) + " roots";
      }
      if (!curve::is_totally_positive(c.at(opt.t_plus))) return who + "not totally positive at t+";
      if (!curve::is_totally_negative(c.at(opt.t_minus))) return who + "not totally negative at t-";
      return {};
    } catch (const Error& e) {
      return who + e.what();
    }
  });
  std::vector<std::string> failures;
  for (const auto& f : outcomes) {
    if (!f.empty()) failures.push_back(f);
  }
  r.payload["per_n"].push_back({{"n", n}, {"samples", seeds.size()}, {"failures", failures.size()}});
  add(r, tag("roots-in-interval", n),
      "along-curve good matrices: m_k has exactly k(n-k) roots in (t-, t+], Neg at t-, Pos at t+", failures.empty(),
      first_failures(failures));
}

void suite_duality(Report& r, std::size_t n, const std::vector<std::uint64_t>& seeds) {
  const auto outcomes = parallel_map(seeds.size(), [&](std::size_t i) -> std::string {
    std::mt19937_64 rng(seeds[i]);
    const curve::PolynomialCurve c = random_curve_spec(rng, n).make();
    const std::string who = "seed " + std::to_string(seeds[i]) + ": ";
    for (std::size_t k = 1; k < n; ++k) {
      const int eps = curve::duality_sign(c, k);
      if (eps == 0) return who + "identity fails for k=" + std::to_string(k);
      if (eps != curve::reference_duality_sign(n, k)) return who + "sign differs from exp(tN) for k=" + std::to_string(k);
    }
    const auto twice = curve::dual_curve(curve::dual_curve(c));
    if (!(twice.l0() == c.l0() && twice.n0() == c.n0())) return who + "dual is not an involution";
    return {};
  });
  std::vector<std::string> failures;
  for (const auto& f : outcomes) {
    if (!f.empty()) failures.push_back(f);
  }
  std::vector<int> signs;
  for (std::size_t k = 1; k < n; ++k) signs.push_back(curve::reference_duality_sign(n, k));
  r.payload["per_n"].push_back({{"n", n}, {"samples", seeds.size()}, {"signs", signs}});
  add(r, tag("dual-minors", n), "m_{dual,k}(t) = eps m_{n-k}(-t) coefficientwise, eps fixed per (n,k)",
      failures.empty(), first_failures(failures));
}

}  // namespace

Report cmd_verify(const RunConfig& cfg, const std::string& suite, std::size_t n_lo, std::size_t n_hi,
                  std::size_t samples) {
  static const std::map<std::string, std::pair<std::size_t, std::size_t>> caps = {
      {"rankstep", {3, 8}}, {"rankmove", {3, 8}}, {"counts", {2, 7}},
      {"theorem-main", {3, 7}}, {"theorem-la", {2, 6}}, {"duality", {2, 8}}};
  const auto cap = caps.find(suite);
  if (cap == caps.end()) throw UsageError("unknown suite '" + suite + "'");
  if (n_lo > n_hi || n_lo < cap->second.first || n_hi > cap->second.second) {
    throw UsageError("suite " + suite + " supports n in [" + std::to_string(cap->second.first) + ", " +
                     std::to_string(cap->second.second) + "]");
  }
  if (cfg.precision <= 0) throw UsageError("--precision must be positive");
  const auto [lo, hi] = cfg.domain.value_or(std::pair<Rational, Rational>{Rational(-1), Rational(1)});
  if (!(lo < hi)) throw UsageError("--domain needs lo < hi");

  Report r;
  r.command = "verify " + suite;
  r.echo = cfg.to_json();
  r.echo["suite"] = suite;
  r.echo["n_range"] = {n_lo, n_hi};
  r.echo["samples"] = samples;
  r.payload["suite"] = suite;
  r.payload["per_n"] = json::array();

  // Per-sample seeds are drawn sequentially up front, so results do not
  // depend on the number of worker threads.
  std::mt19937_64 master(cfg.seed);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    std::vector<std::uint64_t> seeds(samples);
    for (auto& s : seeds) s = master();
    if (suite == "rankstep") suite_rankstep(r, n);
    else if (suite == "rankmove") suite_rankmove(r, n);
    else if (suite == "counts") suite_counts(r, n);
    else if (suite == "theorem-main") suite_theorem_main(r, n, seeds, lo, hi);
    else if (suite == "theorem-la") suite_theorem_la(r, n, seeds);
    else suite_duality(r, n, seeds);
  }
  return r;
}

}  // namespace flagcurve::cli
