#include "extremal/chords.hpp"

#include <algorithm>
#include <stdexcept>

namespace extremal {

ChordResult chord(const Surface& x, int p1, int p2) {
  const Field& F = x.F();
  const int np = static_cast<int>(x.points.size());
  if (p1 < 0 || p1 >= np || p2 < 0 || p2 >= np || p1 == p2)
    throw std::invalid_argument("chord needs two distinct star points");
  Line l = line_through(F, x.points[p1], x.points[p2]);
  if (x.line_id(l) >= 0) return {true, {}};
  ChordResult r;
  r.chord.line = l;
  for (const Point& p : points_on_line(F, l)) {
    int pid = x.point_id(p);
    if (pid >= 0) r.chord.star_points.push_back(pid);
  }
  std::sort(r.chord.star_points.begin(), r.chord.star_points.end());
  if (r.chord.star_points.size() != x.q() + 1)
    throw std::logic_error("chord does not carry q+1 star points");
  return r;
}

StarChord dual_chord(const Surface& x, const StarChord& l) {
  const Field& F = x.F();
  const Plane& h1 = x.tangent[l.star_points[0]];
  const Plane& h2 = x.tangent[l.star_points[1]];
  Line d = plane_meet(F, h1, h2);
  for (int pid : l.star_points)
    if (!line_in_plane(F, d, x.tangent[pid]))
      throw std::logic_error("dual chord escapes a star plane along the chord");
  if (incidence(F, l.line, d).kind != IncidenceKind::Skew)
    throw std::logic_error("dual chord is not skew to the chord");
  StarChord out;
  out.line = d;
  for (const Point& p : points_on_line(F, d)) {
    int pid = x.point_id(p);
    if (pid >= 0) out.star_points.push_back(pid);
  }
  std::sort(out.star_points.begin(), out.star_points.end());
  if (out.star_points.size() != x.q() + 1)
    throw std::logic_error("dual chord does not carry q+1 star points");
  return out;
}

ChordSet enumerate_chords(const Surface& x) {
  ChordSet cs;
  const int np = static_cast<int>(x.points.size());
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      ChordResult r = chord(x, i, j);
      if (r.on_surface) continue;
      if (cs.index.emplace(r.chord.line, static_cast<int>(cs.chords.size())).second)
        cs.chords.push_back(std::move(r.chord));
    }
  cs.dual.resize(cs.chords.size());
  for (std::size_t i = 0; i < cs.chords.size(); ++i) {
    StarChord d = dual_chord(x, cs.chords[i]);
    int di = cs.id(d.line);
    if (di < 0) throw std::logic_error("dual of a chord is not itself a chord");
    cs.dual[i] = di;
  }
  return cs;
}

Report verify_chords(const Surface& x, const ChordSet& cs) {
  const long long q = x.q();
  Report rep;
  rep.add("chords", "q^4(q^2-q+1)(q^2+1)",
          q * q * q * q * (q * q - q + 1) * (q * q + 1),
          static_cast<long long>(cs.chords.size()));

  bool pts_per_chord = true;
  for (const StarChord& c : cs.chords)
    if (static_cast<long long>(c.star_points.size()) != q + 1) pts_per_chord = false;
  rep.add_bool("star_points_per_chord", "q+1 on every chord", pts_per_chord);

  // Ordered star-point pairs spanning chords; cross-checks the orbit count.
  rep.add("ordered_chord_pairs", "q^5(q^3+1)(q^2+1)",
          q * q * q * q * q * (q * q * q + 1) * (q * q + 1),
          static_cast<long long>(cs.chords.size()) * (q + 1) * q);

  bool involution = true, fixed_free = true;
  for (std::size_t i = 0; i < cs.chords.size(); ++i) {
    if (cs.dual[cs.dual[i]] != static_cast<int>(i)) involution = false;
    if (cs.dual[i] == static_cast<int>(i)) fixed_free = false;
  }
  rep.add_bool("duality_involution", "dual(dual(l)) = l", involution);
  rep.add_bool("duality_fixed_point_free", "dual(l) != l", fixed_free);

  // Stars centered along a chord share no lines; chords avoid the star
  // planes of their own star points.
  bool disjoint_stars = true, off_star_planes = true;
  for (const StarChord& c : cs.chords) {
    for (std::size_t a = 0; a < c.star_points.size() && disjoint_stars; ++a) {
      const auto& la = x.lines_through[c.star_points[a]];
      for (std::size_t b = a + 1; b < c.star_points.size(); ++b) {
        for (int li : la)
          for (int lj : x.lines_through[c.star_points[b]])
            if (li == lj) disjoint_stars = false;
      }
    }
    for (int pid : c.star_points)
      if (line_in_plane(x.F(), c.line, x.tangent[pid])) off_star_planes = false;
  }
  rep.add_bool("stars_along_chord_disjoint", "stars centered on a chord share no lines",
               disjoint_stars);
  rep.add_bool("chord_off_own_star_planes",
               "a chord never lies in a star plane centered on it", off_star_planes);
  return rep;
}

}  // namespace extremal
