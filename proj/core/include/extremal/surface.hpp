#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "extremal/bitset.hpp"
#include "extremal/forms.hpp"
#include "extremal/gf.hpp"
#include "extremal/proj.hpp"
#include "extremal/report.hpp"

namespace extremal {

enum class Model { Fermat, AntiDiagonal, Custom };

/// The q+1 lines of the surface through a common center, all lying in the
/// tangent plane there.
struct Star {
  int center = -1;
  Plane plane;
  std::vector<int> lines;
};

/// Smooth extremal surface over F_{q^2} with cached rational points, lines,
/// line incidence, and tangent planes. Immutable after build_surface.
struct Surface {
  const Field* field = nullptr;
  Model model = Model::Fermat;
  FrobeniusForm form;

  std::vector<Point> points;
  std::unordered_map<std::uint64_t, int> point_index;
  std::vector<Line> lines;
  std::unordered_map<Line, int, LineHash> line_index;

  std::vector<std::vector<int>> line_points;    // surface point ids per line
  std::vector<std::vector<int>> lines_through;  // line ids per point
  std::vector<DynBitset> meets;                 // symmetric, zero diagonal
  std::vector<Plane> tangent;                   // per point
  std::vector<bool> is_star_point;              // tangent section is a star

  const Field& F() const { return *field; }
  std::uint32_t q() const { return field->q(); }

  int point_id(const Point& p) const {
    auto it = point_index.find(key(p));
    return it == point_index.end() ? -1 : it->second;
  }
  int line_id(const Line& l) const {
    auto it = line_index.find(l);
    return it == line_index.end() ? -1 : it->second;
  }
  bool lines_meet(int i, int j) const { return meets[i].test(j); }
};

/// Build the surface and all caches. A custom matrix must be rank 4 and
/// Hermitian; anything else is rejected.
Surface build_surface(const Field& F, Model model, const Mat* custom = nullptr);

/// The star centered at a surface point.
Star star_at(const Surface& x, int point_idx);

/// Full verification of the point/line/star censuses and incidence structure.
Report verify_census(const Surface& x);

}  // namespace extremal
