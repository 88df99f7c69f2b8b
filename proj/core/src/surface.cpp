#include "extremal/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

// (u^[q])^T A v for 4-vectors
FE pairing(const Field& F, const Mat& a, const FE* u, const FE* v) {
  FE acc = 0;
  for (int i = 0; i < 4; ++i) {
    if (u[i] == 0) continue;
    FE row = 0;
    for (int j = 0; j < 4; ++j) {
      FE c = a.at(i, j);
      if (c != 0 && v[j] != 0) row = F.add(row, F.mul(c, v[j]));
    }
    if (row != 0) acc = F.add(acc, F.mul(F.frobq(u[i]), row));
  }
  return acc;
}

Plane tangent_plane(const Surface& x, int pid) {
  const Field& F = x.F();
  const Point& p = x.points[pid];
  // Gradient covector of (x^[q])^T A x at p is (p^[q])^T A, i.e. A^T p^[q].
  std::array<FE, 4> n{0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) {
    FE acc = 0;
    for (int i = 0; i < 4; ++i)
      acc = F.add(acc, F.mul(x.form.a.at(i, j), F.frobq(p.x[i])));
    n[j] = acc;
  }
  bool nonzero = false;
  for (FE v : n)
    if (v != 0) nonzero = true;
  if (nonzero) {
    Plane h = make_plane(F, n);
    if (on_plane(F, p, h)) return h;
  }
  // Fallback: search for the unique plane through p whose section is
  // degenerate. Not expected to trigger for Hermitian models.
  for (const Plane& h : all_planes(F)) {
    if (!on_plane(F, p, h)) continue;
    if (is_degenerate(F, restrict_to_plane(F, x.form, h)).degenerate) return h;
  }
  throw std::logic_error("no tangent plane found at surface point");
}

}  // namespace

Surface build_surface(const Field& F, Model model, const Mat* custom) {
  Surface x;
  x.field = &F;
  x.model = model;
  switch (model) {
    case Model::Fermat:
      x.form = fermat_form(F, 4);
      break;
    case Model::AntiDiagonal:
      x.form = antidiagonal_form(F);
      break;
    case Model::Custom: {
      if (custom == nullptr || custom->rows != 4 || custom->cols != 4)
        throw std::invalid_argument("custom model needs a 4x4 matrix");
      x.form = FrobeniusForm(4, *custom);
      break;
    }
  }
  if (form_rank(F, x.form) != 4)
    throw std::invalid_argument("singular surface: form matrix has rank < 4");
  if (!is_hermitian(F, x.form))
    throw std::invalid_argument(
        "non-Hermitian form: star points need not be rational, model rejected");

  for (const Point& p : all_points(F)) {
    if (evaluate(F, x.form, p) == 0) {
      x.point_index.emplace(key(p), static_cast<int>(x.points.size()));
      x.points.push_back(p);
    }
  }

  // Lines by point pairs: both points are on X, so containment reduces to the
  // two cross pairings vanishing.
  const int np = static_cast<int>(x.points.size());
  for (int i = 0; i < np; ++i) {
    const FE* u = x.points[i].x.data();
    for (int j = i + 1; j < np; ++j) {
      const FE* v = x.points[j].x.data();
      if (pairing(F, x.form.a, u, v) != 0 || pairing(F, x.form.a, v, u) != 0) continue;
      Line l = line_through(F, x.points[i], x.points[j]);
      if (x.line_index.emplace(l, static_cast<int>(x.lines.size())).second)
        x.lines.push_back(l);
    }
  }

  const int nl = static_cast<int>(x.lines.size());
  x.line_points.resize(nl);
  x.lines_through.resize(np);
  for (int li = 0; li < nl; ++li) {
    for (const Point& p : points_on_line(F, x.lines[li])) {
      int pid = x.point_id(p);
      if (pid < 0) throw std::logic_error("line of X carries a point off X");
      x.line_points[li].push_back(pid);
      x.lines_through[pid].push_back(li);
    }
  }

  x.meets.assign(nl, DynBitset(nl));
  for (int pid = 0; pid < np; ++pid) {
    const auto& through = x.lines_through[pid];
    for (std::size_t a = 0; a < through.size(); ++a)
      for (std::size_t b = a + 1; b < through.size(); ++b) {
        x.meets[through[a]].set(through[b]);
        x.meets[through[b]].set(through[a]);
      }
  }

  x.tangent.resize(np);
  x.is_star_point.assign(np, false);
  for (int pid = 0; pid < np; ++pid) {
    x.tangent[pid] = tangent_plane(x, pid);
    FrobeniusForm sec = restrict_to_plane(F, x.form, x.tangent[pid]);
    x.is_star_point[pid] = is_degenerate(F, sec).degenerate;
  }
  return x;
}

Star star_at(const Surface& x, int pid) {
  if (pid < 0 || pid >= static_cast<int>(x.points.size()))
    throw std::invalid_argument("point is not on the surface");
  Star st;
  st.center = pid;
  st.plane = x.tangent[pid];
  st.lines = x.lines_through[pid];
  if (st.lines.size() != x.q() + 1)
    throw std::logic_error("tangent section at a surface point is not a star");
  for (int li : st.lines)
    if (!line_in_plane(x.F(), x.lines[li], st.plane))
      throw std::logic_error("star line escapes the tangent plane");
  return st;
}

Report verify_census(const Surface& x) {
  const Field& F = x.F();
  const long long q = x.q();
  const int np = static_cast<int>(x.points.size());
  const int nl = static_cast<int>(x.lines.size());
  Report rep;

  rep.add("points", "q^5+q^3+q^2+1", q * q * q * q * q + q * q * q + q * q + 1, np);
  rep.add("lines", "(q^3+1)(q+1)", (q * q * q + 1) * (q + 1), nl);
  {
    long long d = q + 1;
    rep.add("lines_degree_identity", "d^2(d^2-3d+3)", d * d * (d * d - 3 * d + 3),
            (q * q * q + 1) * (q + 1));
  }

  bool star_flags = true;
  for (int pid = 0; pid < np; ++pid)
    if (!x.is_star_point[pid]) star_flags = false;
  rep.add("star_points", "all F_{q^2}-points of X are star points", np,
          star_flags ? np : -1);

  bool pts_per_line = true, meets_per_line = true, skew_per_line = true;
  for (int li = 0; li < nl; ++li) {
    if (static_cast<long long>(x.line_points[li].size()) != q * q + 1) pts_per_line = false;
    long long m = x.meets[li].count();
    if (m != q * (q * q + 1)) meets_per_line = false;
    if (nl - 1 - m != q * q * q * q) skew_per_line = false;
  }
  rep.add_bool("star_points_per_line", "q^2+1 on every line", pts_per_line);
  rep.add_bool("meeting_lines_per_line", "q(q^2+1) for every line", meets_per_line);
  rep.add_bool("skew_lines_per_line", "q^4 for every line", skew_per_line);

  bool stars_ok = true;
  std::unordered_map<std::uint64_t, int> star_planes;
  for (int pid = 0; pid < np; ++pid) {
    if (x.lines_through[pid].size() != static_cast<std::size_t>(q + 1)) stars_ok = false;
    star_planes.emplace(key(x.tangent[pid]), pid);
  }
  rep.add_bool("lines_per_star", "q+1 through every star point", stars_ok);
  rep.add("stars", "(q^3+1)(q^2+1)", (q * q * q + 1) * (q * q + 1),
          static_cast<long long>(star_planes.size()));

  bool star_plane_pts = true;
  for (const auto& [k, pid] : star_planes) {
    const Plane& h = x.tangent[pid];
    long long cnt = 0;
    for (int i = 0; i < np; ++i)
      if (on_plane(F, x.points[i], h)) ++cnt;
    if (cnt != q * q * q + q * q + 1) star_plane_pts = false;
  }
  rep.add_bool("star_points_per_star_plane", "q^3+q^2+1 on every star plane",
               star_plane_pts);

  bool transversals = true;
  for (int i = 0; i < nl && transversals; ++i)
    for (int j = i + 1; j < nl; ++j) {
      if (x.meets[i].test(j)) continue;
      if (x.meets[i].count_and(x.meets[j]) != q * q + 1) { transversals = false; break; }
    }
  rep.add_bool("transversals_per_skew_pair", "q^2+1 common transversals", transversals);

  // Triangle-freeness: any line meeting two concurrent lines passes through
  // their common point.
  bool triangle_free = true;
  for (int i = 0; i < nl && triangle_free; ++i) {
    x.meets[i].for_each([&](int j) {
      if (j <= i || !triangle_free) return;
      Incidence ij = incidence(F, x.lines[i], x.lines[j]);
      DynBitset common = x.meets[i];
      common &= x.meets[j];
      common.for_each([&](int k) {
        if (!triangle_free || k == i || k == j) return;
        Incidence ki = incidence(F, x.lines[k], x.lines[i]);
        Incidence kj = incidence(F, x.lines[k], x.lines[j]);
        if (!(ki.at == kj.at && ki.at == ij.at)) triangle_free = false;
      });
    });
  }
  rep.add_bool("triangle_free", "no three lines pairwise meet in distinct points",
               triangle_free);

  long long star_sections = 0, smooth_sections = 0, other_sections = 0;
  for (const Plane& h : all_planes(F)) {
    SectionClass c = classify_section(F, restrict_to_plane(F, x.form, h));
    if (c == SectionClass::Star)
      ++star_sections;
    else if (c == SectionClass::SmoothExtremalCurve)
      ++smooth_sections;
    else
      ++other_sections;
  }
  rep.add("star_plane_sections", "(q^3+1)(q^2+1)", (q * q * q + 1) * (q * q + 1),
          star_sections);
  rep.add("other_plane_sections", "0 (every section smooth or star)", 0, other_sections);
  {
    long long s = q * q;
    rep.add("total_planes", "s^3+s^2+s+1", s * s * s + s * s + s + 1,
            star_sections + smooth_sections + other_sections);
  }
  return rep;
}

}  // namespace extremal
