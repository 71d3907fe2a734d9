#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagcurve/words/word.hpp"

namespace flagcurve::words {

enum class Direction { cw, ccw };

enum class MoveType { Ia, Ib, IIa, IIb, IIIa, IIIb, IIIc, IVa, IVb, IVc };

std::string to_string(Direction d);
std::string to_string(MoveType t);

struct MoveRecord {
  int label = 0;  // the moving label j (j' moves with it)
  Direction direction = Direction::ccw;
  Label passed;  // the neighbour that j swaps with
  MoveType type = MoveType::Ia;
  AdmissibleWord before;
  AdmissibleWord after;
  int rank_before = 0;
  int rank_after = 0;

  // The wall crossed: {j, index of the passed label}, ascending.
  std::pair<int, int> wall() const;
};

// Label j in 1..n-1 moves one slot along the shorter arc toward j+1
// (counter-clockwise iff pair_sign(j, j+1) = +1); j' moves the same way.
// UsageError naming the blocking condition when the move is illegal.
MoveRecord apply_move(const AdmissibleWord& w, int j, Direction direction);

std::vector<MoveRecord> legal_moves(const AdmissibleWord& w);

// Collision case analysis for label i passing `passed`.
MoveType classify_move(const AdmissibleWord& w, int i, const Label& passed);

}  // namespace flagcurve::words
