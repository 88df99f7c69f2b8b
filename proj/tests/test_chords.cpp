#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extremal/chords.hpp"
#include "fixtures.hpp"

using namespace extremal;
using fixtures::fermat;

namespace {

const ChordSet& chords_q2() {
  static ChordSet cs = enumerate_chords(fermat(2));
  return cs;
}

}  // namespace

TEST_CASE("chord census q=2") {
  const Surface& x = fermat(2);
  const ChordSet& cs = chords_q2();
  CHECK(cs.chords.size() == 240);  // q^4(q^2-q+1)(q^2+1)
  CHECK(verify_chords(x, cs).pass());
  for (const StarChord& c : cs.chords) {
    CHECK(c.star_points.size() == x.q() + 1);
    CHECK(x.line_id(c.line) == -1);  // not a line of X
  }
}

TEST_CASE("chord census q=3") {
  const Surface& x = fermat(3);
  ChordSet cs = enumerate_chords(x);
  CHECK(cs.chords.size() == 5670);  // 81 * 7 * 10
  CHECK(verify_chords(x, cs).pass());
}

TEST_CASE("chord of two star points") {
  const Surface& x = fermat(2);
  // Two star points on a common surface line span that line.
  int l0p0 = x.line_points[0][0], l0p1 = x.line_points[0][1];
  ChordResult on = chord(x, l0p0, l0p1);
  CHECK(on.on_surface);

  // Two star points not on a common line span a chord with q+1 star points.
  int p2 = -1;
  for (std::size_t p = 0; p < x.points.size(); ++p) {
    bool shares = false;
    for (int li : x.lines_through[l0p0])
      for (int pi : x.line_points[li]) shares |= (pi == static_cast<int>(p));
    if (!shares && static_cast<int>(p) != l0p0) {
      p2 = static_cast<int>(p);
      break;
    }
  }
  REQUIRE(p2 >= 0);
  ChordResult off = chord(x, l0p0, p2);
  CHECK_FALSE(off.on_surface);
  CHECK(off.chord.star_points.size() == 3);
  CHECK(chords_q2().id(off.chord.line) >= 0);
}

TEST_CASE("duality is a fixed-point-free involution") {
  const Surface& x = fermat(2);
  const ChordSet& cs = chords_q2();
  for (std::size_t i = 0; i < cs.chords.size(); ++i) {
    int d = cs.dual[i];
    CHECK(d != static_cast<int>(i));
    CHECK(cs.dual[d] == static_cast<int>(i));
    // A chord and its dual are skew.
    CHECK(incidence(x.F(), cs.chords[i].line, cs.chords[d].line).kind ==
          IncidenceKind::Skew);
  }
}

TEST_CASE("V(x,y) and V(z,w) are dual chords of the Fermat surface") {
  const Surface& x = fermat(2);
  const ChordSet& cs = chords_q2();
  const Field& F = x.F();
  Line vxy = line_through(F, make_point(F, {0, 0, 1, 0}), make_point(F, {0, 0, 0, 1}));
  Line vzw = line_through(F, make_point(F, {1, 0, 0, 0}), make_point(F, {0, 1, 0, 0}));
  int i = cs.id(vxy), j = cs.id(vzw);
  REQUIRE(i >= 0);
  REQUIRE(j >= 0);
  CHECK(cs.dual[i] == j);
  CHECK(cs.dual[j] == i);
}
