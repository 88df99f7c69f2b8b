#include "extremal/proj.hpp"

#include <stdexcept>

namespace extremal {

namespace {

std::array<FE, 4> normalize4(const Field& F, std::array<FE, 4> v) {
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (v[i] != 0) { lead = i; break; }
  if (lead < 0) throw std::invalid_argument("zero vector is not projective");
  FE s = F.inv(v[lead]);
  for (int i = 0; i < 4; ++i) v[i] = F.mul(v[i], s);
  return v;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Point make_point(const Field& F, std::array<FE, 4> coords) {
  return Point{normalize4(F, coords)};
}

Plane make_plane(const Field& F, std::array<FE, 4> covector) {
  return Plane{normalize4(F, covector)};
}

Transform make_transform(const Field& F, std::array<FE, 16> m) {
  Mat mm(4, 4);
  for (int i = 0; i < 16; ++i) mm.a[i] = m[i];
  if (rank(F, mm) != 4) throw std::invalid_argument("transform matrix is singular");
  int lead = 0;
  while (m[lead] == 0) ++lead;
  FE s = F.inv(m[lead]);
  for (int i = 0; i < 16; ++i) m[i] = F.mul(m[i], s);
  return Transform{m};
}

Transform identity_transform() {
  Transform g;
  for (int i = 0; i < 4; ++i) g.m[i * 4 + i] = 1;
  return g;
}

std::uint64_t key(const Point& p) {
  return (std::uint64_t(p.x[0]) << 48) | (std::uint64_t(p.x[1]) << 32) |
         (std::uint64_t(p.x[2]) << 16) | std::uint64_t(p.x[3]);
}

std::uint64_t key(const Plane& h) {
  return (std::uint64_t(h.n[0]) << 48) | (std::uint64_t(h.n[1]) << 32) |
         (std::uint64_t(h.n[2]) << 16) | std::uint64_t(h.n[3]);
}

std::uint64_t key(const Line& l) {
  std::uint64_t h = 0;
  for (FE v : l.b) h = mix(h, v);
  return h;
}

std::uint64_t key(const Transform& g) {
  std::uint64_t h = 0;
  for (FE v : g.m) h = mix(h, v);
  return h;
}

Line line_through(const Field& F, const Point& p1, const Point& p2) {
  if (p1 == p2) throw std::invalid_argument("line through equal points is undefined");
  Mat m(2, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = p1.x[j];
    m.at(1, j) = p2.x[j];
  }
  if (rref(F, m) != 2) throw std::invalid_argument("points do not span a line");
  Line l;
  for (int i = 0; i < 8; ++i) l.b[i] = m.a[i];
  return l;
}

bool on_line(const Field& F, const Point& p, const Line& l) {
  Mat m(3, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = l.b[j];
    m.at(1, j) = l.b[4 + j];
    m.at(2, j) = p.x[j];
  }
  return rank(F, m) == 2;
}

bool on_plane(const Field& F, const Point& p, const Plane& h) {
  FE s = 0;
  for (int j = 0; j < 4; ++j) s = F.add(s, F.mul(h.n[j], p.x[j]));
  return s == 0;
}

bool line_in_plane(const Field& F, const Line& l, const Plane& h) {
  for (int r = 0; r < 2; ++r) {
    FE s = 0;
    for (int j = 0; j < 4; ++j) s = F.add(s, F.mul(h.n[j], l.b[r * 4 + j]));
    if (s != 0) return false;
  }
  return true;
}

std::vector<Point> points_on_line(const Field& F, const Line& l) {
  std::vector<Point> pts;
  pts.reserve(F.size() + 1);
  std::array<FE, 4> u{l.b[0], l.b[1], l.b[2], l.b[3]};
  std::array<FE, 4> v{l.b[4], l.b[5], l.b[6], l.b[7]};
  pts.push_back(make_point(F, v));  // [0:1] point
  for (std::uint32_t t = 0; t < F.size(); ++t) {
    std::array<FE, 4> w;
    for (int j = 0; j < 4; ++j) w[j] = F.add(u[j], F.mul(static_cast<FE>(t), v[j]));
    pts.push_back(make_point(F, w));
  }
  return pts;
}

Incidence incidence(const Field& F, const Line& a, const Line& b) {
  if (a == b) return {IncidenceKind::Equal, {}};
  Mat m(4, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = a.b[j];
    m.at(1, j) = a.b[4 + j];
    m.at(2, j) = b.b[j];
    m.at(3, j) = b.b[4 + j];
  }
  if (rank(F, m) == 4) return {IncidenceKind::Skew, {}};
  // rank 3: unique common point. Solve for coefficients with sum of the two
  // spans equal: x in span(a) with x in span(b) -- intersect via nullspace of
  // the stacked dual conditions. Compute directly: find (s,t,u,v) with
  // s*a1 + t*a2 + u*b1 + v*b2 = 0; the point is s*a1 + t*a2.
  Mat sys(4, 4);
  for (int r = 0; r < 4; ++r) {
    sys.at(r, 0) = a.b[r];
    sys.at(r, 1) = a.b[4 + r];
    sys.at(r, 2) = b.b[r];
    sys.at(r, 3) = b.b[4 + r];
  }
  Mat ns = nullspace(F, sys);
  if (ns.rows < 1) throw std::logic_error("rank-3 line pair with empty nullspace");
  std::array<FE, 4> pt{0, 0, 0, 0};
  for (int j = 0; j < 4; ++j)
    pt[j] = F.add(F.mul(ns.at(0, 0), a.b[j]), F.mul(ns.at(0, 1), a.b[4 + j]));
  return {IncidenceKind::Meet, make_point(F, pt)};
}

Plane plane_span(const Field& F, const Line& l, const Point& p) {
  if (on_line(F, p, l)) throw std::invalid_argument("point lies on the line; plane not unique");
  Mat m(3, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = l.b[j];
    m.at(1, j) = l.b[4 + j];
    m.at(2, j) = p.x[j];
  }
  Mat ns = nullspace(F, m);
  if (ns.rows != 1) throw std::logic_error("span of line and point is not a plane");
  return make_plane(F, {ns.at(0, 0), ns.at(0, 1), ns.at(0, 2), ns.at(0, 3)});
}

Line plane_meet(const Field& F, const Plane& h1, const Plane& h2) {
  if (h1 == h2) throw std::invalid_argument("planes are equal; intersection is not a line");
  Mat m(2, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = h1.n[j];
    m.at(1, j) = h2.n[j];
  }
  Mat ns = nullspace(F, m);
  if (ns.rows != 2) throw std::logic_error("plane intersection is not a line");
  Point p1 = make_point(F, {ns.at(0, 0), ns.at(0, 1), ns.at(0, 2), ns.at(0, 3)});
  Point p2 = make_point(F, {ns.at(1, 0), ns.at(1, 1), ns.at(1, 2), ns.at(1, 3)});
  return line_through(F, p1, p2);
}

Point apply(const Field& F, const Transform& g, const Point& p) {
  std::array<FE, 4> y{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      y[i] = F.add(y[i], F.mul(g.m[i * 4 + j], p.x[j]));
  return make_point(F, y);
}

Line apply(const Field& F, const Transform& g, const Line& l) {
  Point p1 = apply(F, g, make_point(F, {l.b[0], l.b[1], l.b[2], l.b[3]}));
  Point p2 = apply(F, g, make_point(F, {l.b[4], l.b[5], l.b[6], l.b[7]}));
  return line_through(F, p1, p2);
}

Plane apply(const Field& F, const Transform& g, const Plane& h) {
  Transform gi = inverse(F, g);
  std::array<FE, 4> n{0, 0, 0, 0};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      n[j] = F.add(n[j], F.mul(h.n[i], gi.m[i * 4 + j]));
  return make_plane(F, n);
}

Transform compose(const Field& F, const Transform& g, const Transform& h) {
  std::array<FE, 16> m{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      FE v = g.m[i * 4 + k];
      if (v == 0) continue;
      for (int j = 0; j < 4; ++j)
        m[i * 4 + j] = F.add(m[i * 4 + j], F.mul(v, h.m[k * 4 + j]));
    }
  return make_transform(F, m);
}

Transform inverse(const Field& F, const Transform& g) {
  Mat m(4, 4);
  for (int i = 0; i < 16; ++i) m.a[i] = g.m[i];
  Mat mi = inverse(F, m);
  std::array<FE, 16> out{};
  for (int i = 0; i < 16; ++i) out[i] = mi.a[i];
  return make_transform(F, out);
}

std::vector<Point> all_points(const Field& F) {
  std::vector<Point> pts;
  const std::uint32_t s = F.size();
  pts.reserve(static_cast<std::size_t>(s) * s * s + s * s + s + 1);
  for (std::uint32_t a = 0; a < s; ++a)
    for (std::uint32_t b = 0; b < s; ++b)
      for (std::uint32_t c = 0; c < s; ++c)
        pts.push_back(Point{{1, static_cast<FE>(a), static_cast<FE>(b), static_cast<FE>(c)}});
  for (std::uint32_t b = 0; b < s; ++b)
    for (std::uint32_t c = 0; c < s; ++c)
      pts.push_back(Point{{0, 1, static_cast<FE>(b), static_cast<FE>(c)}});
  for (std::uint32_t c = 0; c < s; ++c)
    pts.push_back(Point{{0, 0, 1, static_cast<FE>(c)}});
  pts.push_back(Point{{0, 0, 0, 1}});
  return pts;
}

std::vector<Plane> all_planes(const Field& F) {
  std::vector<Point> pts = all_points(F);
  std::vector<Plane> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(Plane{p.x});
  return out;
}

}  // namespace extremal
