#include <optional>
#include <string>
#include <utility>

#include "flagcurve/curve/curve.hpp"
#include "flagcurve/errors.hpp"
#include "flagcurve/words/crossing.hpp"

namespace flagcurve::words {

std::vector<int> CrossingSequence::ranks() const {
  std::vector<int> out;
  for (const auto& w : words) out.push_back(rank(w));
  return out;
}

namespace {

struct Wall {
  std::size_t piece = 0;
  int i = 0;
  int j = 0;
};

std::string wall_name(int i, int j) { return "m_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

// The admissible move turning `before` into `after` across the wall {i, j};
// the lower moving label wins when both attributions fit.
MoveRecord attribute(const AdmissibleWord& before, const AdmissibleWord& after, int i, int j) {
  std::optional<MoveRecord> best;
  for (auto& m : legal_moves(before)) {
    if (m.after != after || m.wall() != std::pair{i, j}) continue;
    if (!best || m.label < best->label) best = std::move(m);
  }
  if (!best) {
    throw InvariantViolation("crossing " + wall_name(i, j) + " from " + before.to_string() + " to " +
                             after.to_string() + " is not an admissible move");
  }
  return *best;
}

}  // namespace

CrossingSequence crossing_sequence(const curve::ExtendedCurve& c, const std::optional<exact::Rational>& max_width) {
  const std::size_t n = c.n();
  if (n < 2) throw UsageError("crossing sequences need n >= 2");
  const exact::Rational a = c.a();
  const exact::Rational b = c.b();
  if (!(a < b)) throw UsageError("crossing sequences need a domain with lo < hi");

  std::vector<Wall> walls;
  std::vector<exact::RealRootIsolator> isolators;
  std::vector<exact::TaggedRoot> roots;
  for (std::size_t p = 0; p < c.pieces.size(); ++p) {
    const auto& piece = c.pieces[p];
    const curve::ProjectedCurve pc = curve::project(piece.curve);
    std::vector<exact::Polynomial> polys;
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      for (int j = i + 1; j <= static_cast<int>(n); ++j) {
        const exact::Polynomial m = curve::minor_pair(pc, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (m.is_zero()) throw DegenerateError("degenerate (not in C2): " + wall_name(i, j) + " vanishes identically");
        if ((p == 0 && m.evaluate(piece.lo) == 0) || (p + 1 == c.pieces.size() && m.evaluate(piece.hi) == 0)) {
          throw DegenerateError("degenerate: " + wall_name(i, j) + " vanishes at a domain endpoint");
        }
        if (m.is_constant()) continue;
        for (std::size_t w = 0; w < polys.size(); ++w) {
          if (exact::common_real_roots(m, polys[w], piece.lo, piece.hi) != 0) {
            const Wall& other = walls[walls.size() - polys.size() + w];
            throw DegenerateError("degenerate (not in C2): " + wall_name(other.i, other.j) + " and " +
                                  wall_name(i, j) + " vanish simultaneously; perturb L0");
          }
        }
        polys.push_back(m);
        walls.push_back({p, i, j});
        isolators.emplace_back(m);
        const std::size_t owner = isolators.size() - 1;
        for (const auto& r : isolators.back().isolate(piece.lo, piece.hi)) {
          if (isolators.back().multiplicity(r) != 1) {
            throw DegenerateError("degenerate (not in C2): multiple root of " + wall_name(i, j) + "; perturb L0");
          }
          roots.push_back({r, owner});
        }
      }
    }
  }
  roots = exact::merge_roots(isolators, std::move(roots));

  CrossingSequence cs;
  cs.n = n;
  cs.lo = a;
  cs.hi = b;
  auto word_at = [&](const exact::Rational& t) {
    const auto full = c.at(t);
    exact::RationalMatrix x(2, n);
    for (std::size_t k = 0; k < n; ++k) {
      x(0, k) = full(n - 2, k);
      x(1, k) = full(n - 1, k);
    }
    return word_of_matrix(x);
  };
  // Sample the word at a, in every gap between isolating intervals, and at b.
  cs.words.push_back(word_at(a));
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const exact::Rational t = r + 1 < roots.size() ? (roots[r].root.hi + roots[r + 1].root.lo) / 2 : b;
    cs.words.push_back(word_at(t));
  }
  if (roots.empty() && word_at(b) != cs.words.front()) {
    throw InvariantViolation("word changed along the curve without a wall crossing");
  }
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const Wall& wall = walls[roots[r].owner];
    exact::RootInterval root = roots[r].root;
    if (max_width) isolators[roots[r].owner].refine(root, *max_width);
    cs.crossings.push_back({wall.i, wall.j, root, attribute(cs.words[r], cs.words[r + 1], wall.i, wall.j)});
  }
  return cs;
}

CrossingSequence crossing_sequence(const curve::PolynomialCurve& c, const exact::Rational& lo,
                                   const exact::Rational& hi, const std::optional<exact::Rational>& max_width) {
  return crossing_sequence(curve::single_piece(c, lo, hi), max_width);
}

}  // namespace flagcurve::words
