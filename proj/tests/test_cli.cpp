#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "flagcurve/cli/commands.hpp"
#include "flagcurve/cli/report.hpp"
#include "flagcurve/curve/curve.hpp"
#include "flagcurve/words/word.hpp"

using namespace flagcurve;
using namespace flagcurve::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flagcurve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

const char* kSampleN5 = "1:1 2:-1 1:1 3:1/8 4:-1/8 3:1/64 2:1/512 1:-1/512 3:1/4096";
const char* kSampleN4 = R"({"L0": [[1,0,0,0],[0,1,0,0],["1/6",0,1,0],["1/8","1/5",0,1]]})";

}  // namespace

TEST_CASE("curve reports degrees, leading signs and roots") {
  const json j = run_json({"curve", "--input", kSampleN4});
  const auto& minors = j["payload"]["minors"];
  REQUIRE(minors.size() == 3);
  CHECK(minors[1]["degree"] == 4);
  for (const auto& m : minors) CHECK(m["leading_sign"] == 1);
  CHECK(j["all_pass"] == true);

  // With L0 = Id the minors are those of exp(tN).
  const json id = run_json({"curve", "--n", "4"});
  const curve::PolynomialCurve unit(exact::identity_matrix(4), curve::NilpotentGenerator::unit(4));
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK(polynomial_from_json(id["payload"]["minors"][k - 1]["coefficients"]) == curve::minor_k(unit, k));
  }
  // The nine-factor product at n = 5 is accepted.
  CHECK(run({"curve", "--n", "5", "--gens", kSampleN5}).code == 0);
}

TEST_CASE("itinerary of the n=5 product and the n=2 case") {
  const json j = run_json({"itinerary", "--n", "5", "--gens", kSampleN5});
  CHECK(j["payload"]["itinerary"] == "dcbcdabacbcbabdcbadc");
  CHECK(j["payload"]["letter_counts"] == json({4, 6, 6, 4}));
  CHECK(j["payload"]["total"] == 20);
  CHECK(run_json({"itinerary", "--n", "2", "--gens", "1:-1"})["payload"]["itinerary"] == "a");
}

TEST_CASE("degenerate input needs --perturb") {
  // Symmetric parameters put a multiple root on m_1.
  const Run bad = run({"itinerary", "--n", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--perturb") != std::string::npos);
  const json ok = run_json({"itinerary", "--n", "3", "--perturb"});
  CHECK(ok["payload"]["perturbed"] == true);
  CHECK(ok["payload"].contains("effective_spec"));
}

TEST_CASE("words actions") {
  CHECK(run_json({"words", "rank", "--word", "15'43'21'54'32'"})["payload"]["rank"] == 6);
  const json e = run_json({"words", "enumerate", "--n", "3"});
  CHECK(e["payload"]["count"] == 8);
  CHECK(run_json({"words", "enumerate", "--n", "5", "--plus"})["payload"]["count"] == 192);

  const json moves = run_json({"words", "moves", "--word", "21342'1'3'4'"});
  CHECK_FALSE(moves["payload"]["moves"].empty());
  const json mv = run_json({"words", "move", "--word", "21342'1'3'4'", "--label", "2"});
  CHECK(mv["payload"]["move"]["word_after"] == "12341'2'3'4'");

  // Last two rows of exp(N) are totally positive; their word is 1..n 1'..n'.
  const auto x = exact::evaluate(curve::exp_nilpotent(curve::NilpotentGenerator::unit(4)), exact::Rational(1));
  RationalMatrix last(2, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    last(0, k) = x(2, k);
    last(1, k) = x(3, k);
  }
  const json fm = run_json({"words", "from-matrix", "--matrix", matrix_to_json(last).dump()});
  CHECK(words::parse_word(fm["payload"]["word"].get<std::string>()) == words::totally_positive_word(4));

  const json w = run_json({"words", "witness", "--word", "13'4'25'1'342'5"});
  CHECK(w["all_pass"] == true);
}

TEST_CASE("crossings and certificate through the CLI") {
  const json cs = run_json({"words", "crossing", "--input", kSampleN4, "--domain", "-1", "3/2"});
  CHECK(cs["payload"]["crossings"].size() == 6);
  const json cert = run_json({"words", "certify", "--input", kSampleN4, "--domain", "-1", "3/2"});
  CHECK(cert["payload"]["m2_root_count"] == 2);
  CHECK(cert["all_pass"] == true);
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", "rankmove", "--n-range", "4", "5"}).code == 0);
  CHECK(run({"verify", "counts", "--n-range", "4", "5"}).code == 0);
  const json d = run_json({"verify", "duality", "--n", "3", "--samples", "5"});
  CHECK(d["verdicts"].size() == 1);
  CHECK(run({"verify", "theorem-main", "--n", "4", "--samples", "5"}).code == 0);
}

TEST_CASE("csv root tables") {
  const Run r = run({"itinerary", "--n", "5", "--gens", kSampleN5, "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,root_lo,root_hi,multiplicity");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 20);
  // CSV has no shape for word enumeration.
  CHECK(run({"words", "enumerate", "--n", "3", "--format", "csv"}).code == 2);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"curve", "--n", "9"}).code == 2);
  CHECK(run({"curve", "--n", "3", "--gens", "1:1/0"}).code == 2);
  CHECK(run({"curve", "--input", "{\"L0\": [[1, 2], [0, 1]]}"}).code == 2);
  CHECK(run({"curve", "--input", "{not json"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "counts", "--n-range", "5", "3"}).code == 2);
  CHECK(run({"words", "rank", "--word", "1231'2'"}).code == 2);
  CHECK(run({"curve", "--n", "3", "--precision", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  const std::vector<std::vector<std::string>> cases = {
      {"verify", "duality", "--n-range", "3", "4", "--samples", "6", "--seed", "11"},
      {"verify", "theorem-main", "--n", "4", "--samples", "4", "--seed", "5"},
      {"itinerary", "--n", "4", "--perturb", "--seed", "3"},
      {"curve", "--input", kSampleN4, "--pairs"},
      {"words", "crossing", "--input", kSampleN4, "--domain", "-1", "3/2"}};
  for (const auto& args : cases) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(to_json(report_from_json(j)) == j);
  }
}

TEST_CASE("--out and svg output") {
  const std::string path = "test_cli_out.svg";
  const Run r = run({"svg", "--word", "21342'1'3'4'", "--move", "2", "--out", path});
  CHECK(r.code == 0);
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str().rfind("<svg", 0) == 0);
  CHECK(json::parse(r.out)["payload"]["move"]["label"] == 2);
  std::remove(path.c_str());

  const Run curve_svg = run({"svg", "--input", kSampleN4, "--domain", "-1", "3/2"});
  CHECK(curve_svg.code == 0);
  CHECK(curve_svg.out.find("<svg") != std::string::npos);
}
