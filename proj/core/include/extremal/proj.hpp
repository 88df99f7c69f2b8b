#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "extremal/gf.hpp"
#include "extremal/linalg.hpp"

namespace extremal {

/// Point of PG(3,q^2): homogeneous coordinates normalized so the first
/// nonzero coordinate is 1. Equality is representation equality.
struct Point {
  std::array<FE, 4> x{0, 0, 0, 0};
  bool operator==(const Point&) const = default;
};

/// Plane of PG(3,q^2) as a normalized covector (vanishing locus).
struct Plane {
  std::array<FE, 4> n{0, 0, 0, 0};
  bool operator==(const Plane&) const = default;
};

/// Line of PG(3,q^2) as a 2x4 basis in reduced row-echelon form, which is a
/// unique representative per line.
struct Line {
  std::array<FE, 8> b{0, 0, 0, 0, 0, 0, 0, 0};
  bool operator==(const Line&) const = default;
};

/// Projective transformation: invertible 4x4 matrix, scaled so the first
/// nonzero entry is 1.
struct Transform {
  std::array<FE, 16> m{};
  bool operator==(const Transform&) const = default;
};

Point make_point(const Field& F, std::array<FE, 4> coords);
Plane make_plane(const Field& F, std::array<FE, 4> covector);
Transform make_transform(const Field& F, std::array<FE, 16> matrix);
Transform identity_transform();

std::uint64_t key(const Point& p);
std::uint64_t key(const Plane& h);
std::uint64_t key(const Line& l);   // mixed hash of the canonical form
std::uint64_t key(const Transform& g);

struct PointHash {
  std::size_t operator()(const Point& p) const { return std::hash<std::uint64_t>{}(key(p)); }
};
struct LineHash {
  std::size_t operator()(const Line& l) const { return std::hash<std::uint64_t>{}(key(l)); }
};
struct PlaneHash {
  std::size_t operator()(const Plane& h) const { return std::hash<std::uint64_t>{}(key(h)); }
};

/// Canonical line through two distinct points.
Line line_through(const Field& F, const Point& p1, const Point& p2);

bool on_line(const Field& F, const Point& p, const Line& l);
bool on_plane(const Field& F, const Point& p, const Plane& h);
bool line_in_plane(const Field& F, const Line& l, const Plane& h);

/// The q^2+1 points of a line.
std::vector<Point> points_on_line(const Field& F, const Line& l);

enum class IncidenceKind { Equal, Meet, Skew };
struct Incidence {
  IncidenceKind kind;
  Point at;  // valid only when kind == Meet
};
Incidence incidence(const Field& F, const Line& a, const Line& b);

/// Unique plane through a line and a point off it.
Plane plane_span(const Field& F, const Line& l, const Point& p);
/// Intersection line of two distinct planes.
Line plane_meet(const Field& F, const Plane& h1, const Plane& h2);

Point apply(const Field& F, const Transform& g, const Point& p);
Line apply(const Field& F, const Transform& g, const Line& l);
/// Planes transform by the inverse-transpose rule, preserving incidence.
Plane apply(const Field& F, const Transform& g, const Plane& h);

Transform compose(const Field& F, const Transform& g, const Transform& h);
Transform inverse(const Field& F, const Transform& g);

/// All q^6+q^4+q^2+1 points of PG(3,q^2), in a deterministic order.
std::vector<Point> all_points(const Field& F);
std::vector<Plane> all_planes(const Field& F);

}  // namespace extremal
