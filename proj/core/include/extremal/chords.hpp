#pragma once

#include <unordered_map>
#include <vector>

#include "extremal/report.hpp"
#include "extremal/surface.hpp"

namespace extremal {

/// A line not on the surface that passes through star points; it always
/// carries exactly q+1 of them.
struct StarChord {
  Line line;
  std::vector<int> star_points;  // sorted surface point ids
};

struct ChordResult {
  bool on_surface = false;  // span(p1,p2) is a line of X
  StarChord chord;          // valid when !on_surface
};

/// Span of two distinct star points: either a line of X or a star chord.
ChordResult chord(const Surface& x, int p1, int p2);

/// The common line of all star planes centered along l; skew to l, and an
/// involution: dual(dual(l)) = l.
StarChord dual_chord(const Surface& x, const StarChord& l);

struct ChordSet {
  std::vector<StarChord> chords;
  std::unordered_map<Line, int, LineHash> index;
  std::vector<int> dual;  // chord id -> chord id of its dual

  int id(const Line& l) const {
    auto it = index.find(l);
    return it == index.end() ? -1 : it->second;
  }
};

/// All star chords, deduplicated; q^4(q^2-q+1)(q^2+1) of them.
ChordSet enumerate_chords(const Surface& x);

/// Chord census and duality checks.
Report verify_chords(const Surface& x, const ChordSet& cs);

}  // namespace extremal
