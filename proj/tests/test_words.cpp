#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "flagcurve/curve/extension.hpp"
#include "flagcurve/curve/positivity.hpp"
#include "flagcurve/errors.hpp"
#include "flagcurve/words/crossing.hpp"
#include "flagcurve/words/moves.hpp"
#include "flagcurve/words/svg.hpp"
#include "flagcurve/words/word.hpp"
#include "support.hpp"

using namespace flagcurve;
using namespace flagcurve::words;
using namespace testsupport;

namespace {

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Rank straight from the definition: walk the labels 1..n in order, measure
// each step in slots along its shorter arc, split into monotone runs.
int rank_oracle(const std::string& text) {
  const AdmissibleWord w = parse_word(text);
  const long n = static_cast<long>(w.n());
  std::vector<long> dir;
  std::vector<long> len;
  for (int k = 1; k < n; ++k) {
    const long a = static_cast<long>(w.slot_of({k, false}));
    const long b = static_cast<long>(w.slot_of({k + 1, false}));
    const long ccw = ((b - a) % (2 * n) + 2 * n) % (2 * n);
    dir.push_back(ccw < n ? 1 : -1);
    len.push_back(ccw < n ? ccw : 2 * n - ccw);
  }
  int s = 0;
  long cont = 0;
  for (std::size_t k = 0; k < dir.size();) {
    std::size_t e = k;
    long total = 0;
    while (e < dir.size() && dir[e] == dir[k]) total += len[e++];
    ++s;
    cont += total / n;
    k = e;
  }
  return static_cast<int>(2 * cont + s - 1);
}

}  // namespace

TEST_CASE("word parsing, canonical rotation and rendering") {
  const AdmissibleWord w = parse_word("12341'2'3'4'");
  CHECK(w.slots().front() == Label{4, false});
  CHECK(w.to_string() == "12341'2'3'4'");
  CHECK(parse_word("2'3'4'12341'") == w);
  CHECK_THROWS_AS(parse_word("13241'2'3'4'"), UsageError);
  CHECK_THROWS_AS(parse_word("121'2'3"), UsageError);
  CHECK_THROWS_AS(parse_word("12x1'2'"), UsageError);
  CHECK(parse_word("143'21'4'32'") == parse_word("43'21'4'32'1"));
}

TEST_CASE("pair signs on the n=5 worked example") {
  const AdmissibleWord w = parse_word("13'4'25'1'342'5");
  CHECK(pair_sign(w, 1, 2) == 1);
  CHECK(pair_sign(w, 1, 3) == -1);
  CHECK(pair_sign(w, 1, 4) == -1);
  CHECK(pair_sign(w, 1, 5) == -1);
  CHECK(pair_sign(w, 2, 3) == 1);
  CHECK(pair_sign(w, 2, 4) == 1);
  CHECK(pair_sign(w, 2, 5) == -1);
  CHECK(pair_sign(w, 3, 4) == 1);
  CHECK(pair_sign(w, 3, 5) == 1);
  CHECK(pair_sign(w, 4, 5) == 1);
  CHECK(is_plus(w));
}

TEST_CASE("rank golden values") {
  CHECK(rank(parse_word("123451'2'3'4'5'")) == 0);
  CHECK(rank(parse_word("15'43'21'54'32'")) == 6);
  CHECK(rank(parse_word("145231'4'5'2'3'")) == 2);
  CHECK(rank(parse_word("415234'1'5'2'3'")) == 2);
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(rank(totally_positive_word(n)) == 0);
    CHECK(rank(totally_negative_word(n)) == 2 * (static_cast<int>(n) - 2));
  }
  CHECK(totally_negative_word(4) == parse_word("43'21'4'32'1"));
}

TEST_CASE("enumeration") {
  const auto w3 = enumerate_words(3, false);
  std::set<AdmissibleWord> got(w3.begin(), w3.end());
  std::set<AdmissibleWord> expected;
  for (const char* s : {"123'1'2'3", "12'3'1'23", "1'23'12'3", "1'2'3'123", "213'2'1'3", "2'13'21'3", "21'3'2'13",
                        "2'1'3'213"}) {
    expected.insert(parse_word(s));
  }
  CHECK(w3.size() == 8);
  CHECK(got == expected);
  CHECK(enumerate_words(2, false).size() == 2);
  CHECK(enumerate_words(2, true) == std::vector<AdmissibleWord>{parse_word("121'2'")});
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto all = enumerate_words(n, false);
    const auto plus = enumerate_words(n, true);
    CHECK(static_cast<long>(all.size()) == (1L << (n - 1)) * factorial(static_cast<long>(n) - 1));
    CHECK(static_cast<long>(plus.size()) == (1L << (n - 2)) * factorial(static_cast<long>(n) - 1));
    CHECK(std::set<AdmissibleWord>(all.begin(), all.end()).size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_words(9, false), UsageError);
}

TEST_CASE("rank bounds, parity and the oracle, exhaustive n <= 6") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const int top = 2 * (static_cast<int>(n) - 2);
    for (const auto& w : enumerate_words(n, true)) {
      const int r = rank(w);
      CHECK(r == rank_oracle(w.to_string()));
      CHECK(r >= 0);
      CHECK(r <= top);
      CHECK((pair_sign(w, 1, 2) > 0) == (r % 2 == 0));
    }
  }
}

TEST_CASE("moves: monotone rank and the {1,2} step, exhaustive n <= 6") {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::map<MoveType, int> seen;
    for (const auto& w : enumerate_words(n, true)) {
      for (const auto& m : legal_moves(w)) {
        CHECK(is_plus(m.after));
        CHECK(m.rank_before == rank(w));
        CHECK(m.rank_after == rank(m.after));
        CHECK(m.rank_after <= m.rank_before);
        if (pair_sign(m.after, 1, 2) != pair_sign(w, 1, 2)) {
          CHECK(m.wall() == std::pair{1, 2});
          CHECK(m.rank_after == m.rank_before - 1);
        }
        if (m.type == MoveType::IIIc) CHECK(m.rank_after == m.rank_before);
        // Exactly the pair sign of the crossed wall flips.
        for (int i = 1; i <= static_cast<int>(n); ++i) {
          for (int j = i + 1; j <= static_cast<int>(n); ++j) {
            CHECK((pair_sign(m.after, i, j) != pair_sign(w, i, j)) == (std::pair{i, j} == m.wall()));
          }
        }
        ++seen[m.type];
      }
    }
    if (n >= 5) CHECK(seen.size() == 10);
  }
}

TEST_CASE("apply_move errors and a worked transition") {
  const AdmissibleWord w5 = parse_word("21342'1'3'4'");
  const AdmissibleWord w6 = parse_word("12341'2'3'4'");
  // 2 moves toward 3 and passes 1.
  const MoveRecord m = apply_move(w5, 2, Direction::ccw);
  CHECK(m.after == w6);
  CHECK(m.passed == Label{1, false});
  CHECK(m.type == MoveType::IIa);
  CHECK(m.rank_before == 1);
  CHECK(m.rank_after == 0);
  CHECK_THROWS_AS(apply_move(w5, 2, Direction::cw), UsageError);
  CHECK_THROWS_AS(apply_move(w5, 4, Direction::ccw), UsageError);
  // Label 1 is next to 2 in w6's reading direction: blocked.
  CHECK_THROWS_AS(apply_move(w6, 1, Direction::ccw), UsageError);
}

TEST_CASE("word_of_matrix: samples, witnesses and sign coherence") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const RationalMatrix pos = curve::exp_at(curve::NilpotentGenerator::unit(n), q(1));
    const RationalMatrix neg = curve::exp_at(curve::NilpotentGenerator::unit(n), q(-1));
    auto last_two = [n](const RationalMatrix& m) {
      RationalMatrix x(2, n);
      for (std::size_t k = 0; k < n; ++k) {
        x(0, k) = m(n - 2, k);
        x(1, k) = m(n - 1, k);
      }
      return x;
    };
    CHECK(word_of_matrix(last_two(pos)) == totally_positive_word(n));
    CHECK(word_of_matrix(last_two(neg)) == totally_negative_word(n));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& w : enumerate_words(n, true)) {
      const RationalMatrix x = witness_matrix(w);
      CHECK(x(0, n - 1) == 0);
      CHECK(x(1, n - 1) == 1);
      CHECK(x(0, n - 2) == 1);
      CHECK(word_of_matrix(x) == w);
    }
  }
  std::mt19937_64 rng(31);
  for (std::size_t n = 2; n <= 6; ++n) {
    int tested = 0;
    while (tested < 1000) {
      RationalMatrix x(2, n);
      for (std::size_t k = 0; k + 2 < n; ++k) {
        x(0, k) = random_rational(rng, 9, 5);
        x(1, k) = random_rational(rng, 9, 5);
      }
      x(0, n - 2) = 1;
      x(1, n - 2) = random_rational(rng, 9, 5);
      x(1, n - 1) = 1;
      bool generic = true;
      for (std::size_t i = 0; i < n && generic; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) generic = generic && curve::minor_pair(x, i + 1, j + 1) != 0;
      }
      if (!generic) {
        CHECK_THROWS_AS(word_of_matrix(x), DegenerateError);
        continue;
      }
      const AdmissibleWord w = word_of_matrix(x);
      CHECK(is_plus(w));
      for (int i = 1; i <= static_cast<int>(n); ++i) {
        for (int j = i + 1; j <= static_cast<int>(n); ++j) {
          CHECK(pair_sign(w, i, j) == exact::sign(curve::minor_pair(x, static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
        }
      }
      ++tested;
    }
  }
  RationalMatrix zero(2, 3);
  zero(1, 2) = 1;
  zero(0, 1) = 1;
  CHECK_THROWS_AS(word_of_matrix(zero), DegenerateError);
}

TEST_CASE("crossing sequence of the sample n=4 curve") {
  const auto c = sample_curve_n4();
  const CrossingSequence cs = crossing_sequence(c, q(-1), q(3, 2), q(1, 1000));
  REQUIRE(cs.crossings.size() == 6);
  const std::vector<std::pair<int, int>> walls = {{2, 3}, {2, 4}, {1, 2}, {2, 3}, {1, 3}, {1, 2}};
  const std::vector<double> times = {-0.63, 0, 0.26, 0.63, 0.77, 1.11};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(std::pair{cs.crossings[k].i, cs.crossings[k].j} == walls[k]);
    const double mid = exact::to_double(cs.crossings[k].root.midpoint());
    CHECK(std::abs(mid - times[k]) <= 0.01);
  }
  CHECK(cs.crossings[1].root.contains(q(0)));
  const std::vector<std::string> printed = {"143'21'4'32'", "1423'1'4'2'3", "31243'1'2'4'", "32143'2'1'4'",
                                            "23142'3'1'4'", "21342'1'3'4'", "12341'2'3'4'"};
  REQUIRE(cs.words.size() == 7);
  for (std::size_t k = 0; k < 7; ++k) CHECK(cs.words[k] == parse_word(printed[k]));
  const auto ranks = cs.ranks();
  CHECK(ranks.back() == 0);
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) CHECK(ranks[k + 1] <= ranks[k]);
  for (const auto& x : cs.crossings) CHECK(x.move.after == apply_move(x.move.before, x.move.label, x.move.direction).after);
  CHECK(cs.crossings[5].move.type == MoveType::IIa);

  // A curve that stays in Pos crosses nothing.
  const curve::PolynomialCurve unit(exact::identity_matrix(4), curve::NilpotentGenerator::unit(4));
  const CrossingSequence none = crossing_sequence(unit, q(1), q(5));
  CHECK(none.crossings.empty());
  CHECK(none.words.front() == totally_positive_word(4));
  // The identity puts every wall at t = 0.
  CHECK_THROWS_AS(crossing_sequence(unit, q(-1), q(1)), DegenerateError);
  CHECK_THROWS_AS(crossing_sequence(c, q(0), q(1)), DegenerateError);
}

TEST_CASE("theorem-main certificate") {
  const auto c = sample_curve_n4();
  const TheoremMainReport rep = certify_theorem_main(c, q(-1), q(3, 2));
  CHECK(rep.pass());
  CHECK(rep.m2_root_count == 2);
  CHECK(rep.m2_crossings <= 4);
  CHECK(rep.rank_trace.front() == 4);
  CHECK(rep.rank_trace.back() == 0);
  CHECK(curve::is_totally_negative(curve::extend_curve(c, q(-1), q(3, 2)).at(rep.a)));

  std::mt19937_64 rng(32);
  for (std::size_t n = 3; n <= 5; ++n) {
    int done = 0;
    while (done < 5) {
      const curve::PolynomialCurve r(random_lower_uni(rng, n), random_generator(rng, n));
      try {
        const auto rr = certify_theorem_main(r, q(-1), q(1));
        CHECK(rr.pass());
        CHECK(rr.m2_crossings <= static_cast<std::size_t>(rr.bound));
        ++done;
      } catch (const DegenerateError&) {
      }
    }
  }
}

TEST_CASE("svg output") {
  const auto w = parse_word("143'21'4'32'");
  const std::string s = word_svg(w, legal_moves(w).front());
  CHECK(s.find("<svg") == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find(">3'<") != std::string::npos);
  const auto cs = crossing_sequence(sample_curve_n4(), q(-1), q(3, 2));
  CHECK(crossing_svg(cs).find("{1,2}") != std::string::npos);
}
