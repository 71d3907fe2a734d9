#include <cmath>
#include <numbers>
#include <sstream>

#include "flagcurve/words/svg.hpp"

namespace flagcurve::words {

namespace {

constexpr double kRadius = 70.0;
constexpr double kCell = 200.0;

struct Point {
  double x;
  double y;
};

// Slot 0 (label n) sits at the top; slots advance counter-clockwise. SVG's y
// axis points down, hence the sign flip.
Point slot_point(std::size_t slot, std::size_t len, double cx, double cy, double r) {
  const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(slot) / static_cast<double>(len);
  return {cx + r * std::cos(angle), cy - r * std::sin(angle)};
}

void draw_word(std::ostringstream& out, const AdmissibleWord& w, const std::optional<MoveRecord>& move, double cx,
               double cy) {
  const std::size_t len = 2 * w.n();
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kRadius
      << "\" fill=\"none\" stroke=\"#888\"/>\n";
  for (int i = 1; i <= static_cast<int>(w.n()); ++i) {
    const Point p = slot_point(w.slot_of({i, false}), len, cx, cy, kRadius);
    const Point q = slot_point(w.slot_of({i, true}), len, cx, cy, kRadius);
    out << "<line x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << q.x << "\" y2=\"" << q.y
        << "\" stroke=\"#ccc\"/>\n";
  }
  for (std::size_t s = 0; s < len; ++s) {
    const Point p = slot_point(s, len, cx, cy, kRadius);
    const Point t = slot_point(s, len, cx, cy, kRadius + 14);
    const Label& l = w.at(s);
    out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"3\" fill=\"" << (l.primed ? "#fff" : "#000")
        << "\" stroke=\"#000\"/>\n";
    out << "<text x=\"" << t.x << "\" y=\"" << t.y + 4 << "\" font-size=\"12\" text-anchor=\"middle\">"
        << l.to_string() << "</text>\n";
  }
  if (move) {
    const std::size_t from = w.slot_of({move->label, false});
    const std::size_t to = w.slot_of(move->passed);
    const Point p = slot_point(from, len, cx, cy, kRadius - 12);
    const Point q = slot_point(to, len, cx, cy, kRadius - 12);
    out << "<line x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << q.x << "\" y2=\"" << q.y
        << "\" stroke=\"#c00\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
  }
  out << "<text x=\"" << cx << "\" y=\"" << cy + kRadius + 34 << "\" font-size=\"12\" text-anchor=\"middle\">"
      << w.to_string() << "  rk=" << rank(w) << "</text>\n";
}

std::string header(double width, double height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n"
      << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
      << "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"#c00\"/></marker></defs>\n";
  return out.str();
}

}  // namespace

std::string word_svg(const AdmissibleWord& w, const std::optional<MoveRecord>& move) {
  std::ostringstream out;
  out << header(kCell, kCell + 30);
  draw_word(out, w, move, kCell / 2, kCell / 2);
  out << "</svg>\n";
  return out.str();
}

std::string crossing_svg(const CrossingSequence& cs) {
  std::ostringstream out;
  const std::size_t count = cs.words.size();
  out << header(kCell * static_cast<double>(count), kCell + 50);
  for (std::size_t k = 0; k < count; ++k) {
    std::optional<MoveRecord> move;
    if (k < cs.crossings.size()) move = cs.crossings[k].move;
    const double cx = kCell * (static_cast<double>(k) + 0.5);
    draw_word(out, cs.words[k], move, cx, kCell / 2);
    if (k < cs.crossings.size()) {
      const auto& x = cs.crossings[k];
      out << "<text x=\"" << kCell * static_cast<double>(k + 1) << "\" y=\"" << kCell + 40
          << "\" font-size=\"11\" text-anchor=\"middle\">{" << x.i << "," << x.j << "} "
          << to_string(x.move.type) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace flagcurve::words
