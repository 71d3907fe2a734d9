#include "flagcurve/errors.hpp"
#include "flagcurve/words/moves.hpp"

namespace flagcurve::words {

std::string to_string(Direction d) { return d == Direction::ccw ? "ccw" : "cw"; }

std::string to_string(MoveType t) {
  switch (t) {
    case MoveType::Ia: return "Ia";
    case MoveType::Ib: return "Ib";
    case MoveType::IIa: return "IIa";
    case MoveType::IIb: return "IIb";
    case MoveType::IIIa: return "IIIa";
    case MoveType::IIIb: return "IIIb";
    case MoveType::IIIc: return "IIIc";
    case MoveType::IVa: return "IVa";
    case MoveType::IVb: return "IVb";
    case MoveType::IVc: return "IVc";
  }
  return "?";
}

std::pair<int, int> MoveRecord::wall() const {
  return label < passed.index ? std::pair{label, passed.index} : std::pair{passed.index, label};
}

namespace {

// x lies strictly inside the shorter arc between a and b.
bool between(const AdmissibleWord& w, const Label& x, const Label& a, const Label& b) {
  const std::size_t len = 2 * w.n();
  const std::size_t sa = w.slot_of(a);
  const std::size_t sb = w.slot_of(b);
  const std::size_t sx = w.slot_of(x);
  const std::size_t dab = (sb + len - sa) % len;
  if (dab <= w.n()) {
    const std::size_t dax = (sx + len - sa) % len;
    return 0 < dax && dax < dab;
  }
  const std::size_t dba = (sa + len - sb) % len;
  const std::size_t dbx = (sx + len - sb) % len;
  return 0 < dbx && dbx < dba;
}

}  // namespace

MoveType classify_move(const AdmissibleWord& w, int i, const Label& passed) {
  const int j = passed.index;
  if (i == 1) return passed.primed ? MoveType::Ib : MoveType::Ia;
  if (j == 1) return passed.primed ? MoveType::IIb : MoveType::IIa;
  if (j != i - 1) return passed.primed ? MoveType::IVa : MoveType::IIIa;
  const Label x{i - 2, false};
  if (!passed.primed) {
    if (between(w, x, {i - 1, true}, {i, false})) return MoveType::IIIb;
    if (between(w, x, {i - 1, false}, {i, true})) return MoveType::IIIc;
  } else {
    if (between(w, x, {i - 1, false}, {i, false})) return MoveType::IVb;
    if (between(w, x, {i - 1, true}, {i, true})) return MoveType::IVc;
  }
  throw InvariantViolation("move of " + std::to_string(i) + " past " + passed.to_string() + " in " + w.to_string() +
                           " fits no collision case");
}

MoveRecord apply_move(const AdmissibleWord& w, int j, Direction direction) {
  const std::size_t n = w.n();
  if (j < 1 || j >= static_cast<int>(n)) throw UsageError("moving label must lie in 1..n-1");
  const Direction toward = pair_sign(w, j, j + 1) > 0 ? Direction::ccw : Direction::cw;
  if (direction != toward) {
    throw UsageError("illegal move: label " + std::to_string(j) + " must move " + to_string(toward) + " toward " +
                     std::to_string(j + 1));
  }
  const std::size_t len = 2 * n;
  const std::size_t step = direction == Direction::ccw ? 1 : len - 1;
  const std::size_t a = w.slot_of({j, false});
  const std::size_t b = (a + step) % len;
  const Label passed = w.at(b);
  if (passed == Label{j + 1, false}) {
    throw UsageError("illegal move: label " + std::to_string(j) + " is adjacent to " + std::to_string(j + 1));
  }
  std::vector<Label> slots = w.slots();
  std::swap(slots[a], slots[b]);
  std::swap(slots[(a + n) % len], slots[(b + n) % len]);

  MoveRecord rec{j, direction, passed, classify_move(w, j, passed), w, AdmissibleWord(std::move(slots)), rank(w), 0};
  rec.rank_after = rank(rec.after);
  return rec;
}

std::vector<MoveRecord> legal_moves(const AdmissibleWord& w) {
  std::vector<MoveRecord> out;
  for (int j = 1; j < static_cast<int>(w.n()); ++j) {
    const Direction d = pair_sign(w, j, j + 1) > 0 ? Direction::ccw : Direction::cw;
    const std::size_t len = 2 * w.n();
    const std::size_t b = (w.slot_of({j, false}) + (d == Direction::ccw ? 1 : len - 1)) % len;
    if (w.at(b) == Label{j + 1, false}) continue;
    out.push_back(apply_move(w, j, d));
  }
  return out;
}

}  // namespace flagcurve::words
