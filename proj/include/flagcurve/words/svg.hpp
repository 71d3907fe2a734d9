#pragma once

#include <optional>
#include <string>

#include "flagcurve/words/crossing.hpp"

namespace flagcurve::words {

// One circle with the 2n labels read counter-clockwise and the antipodal
// chords i -- i'. When a move is given its arrow is drawn too.
std::string word_svg(const AdmissibleWord& w, const std::optional<MoveRecord>& move = {});

// A row of circles, one per word of the sequence, with the crossed wall and
// the rank under each.
std::string crossing_svg(const CrossingSequence& cs);

}  // namespace flagcurve::words
