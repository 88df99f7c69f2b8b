#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extremal/surface.hpp"
#include "fixtures.hpp"

using namespace extremal;
using fixtures::fermat;
using fixtures::field;

TEST_CASE("q=2 Fermat census") {
  const Surface& x = fermat(2);
  CHECK(verify_census(x).pass());
  CHECK(x.points.size() == 45);
  CHECK(x.lines.size() == 27);
  // At q=2 every surface point is a star point (Eckardt point of the cubic).
  for (bool s : x.is_star_point) CHECK(s);
  for (std::size_t i = 0; i < x.lines.size(); ++i) {
    CHECK(x.line_points[i].size() == 5);  // q^2+1 points per line
    int meet = 0;
    for (std::size_t j = 0; j < x.lines.size(); ++j)
      if (i != j && x.lines_meet(static_cast<int>(i), static_cast<int>(j))) ++meet;
    CHECK(meet == 10);             // q(q^2+1)
    CHECK(27 - 1 - meet == 16);    // q^4 skew lines
  }
}

TEST_CASE("q=3 Fermat census") {
  const Surface& x = fermat(3);
  CHECK(verify_census(x).pass());
  CHECK(x.points.size() == 280);  // q^5+q^3+q^2+1
  CHECK(x.lines.size() == 112);   // (q^3+1)(q+1)
  int stars = 0;
  for (bool s : x.is_star_point)
    if (s) ++stars;
  CHECK(stars == 280);  // (q^3+1)(q^2+1) = 280 at q=3
  int meet = 0;
  for (std::size_t j = 1; j < x.lines.size(); ++j)
    if (x.lines_meet(0, static_cast<int>(j))) ++meet;
  CHECK(meet == 30);            // q(q^2+1)
  CHECK(112 - 1 - meet == 81);  // q^4
}

TEST_CASE("stars") {
  const Surface& x = fermat(2);
  for (std::size_t p = 0; p < x.points.size(); ++p) {
    if (!x.is_star_point[p]) continue;
    Star s = star_at(x, static_cast<int>(p));
    CHECK(s.lines.size() == x.q() + 1);
    CHECK(s.plane == x.tangent[p]);
    for (int li : s.lines) {
      CHECK(line_in_plane(x.F(), x.lines[li], s.plane));
      bool through = false;
      for (int pi : x.line_points[li]) through |= (pi == static_cast<int>(p));
      CHECK(through);
    }
  }
}

TEST_CASE("anti-diagonal model") {
  const Surface& x = fixtures::antidiagonal_q2();
  CHECK(verify_census(x).pass());
  CHECK(x.points.size() == 45);
  CHECK(x.lines.size() == 27);
  // The two distinguished star points of the model are on the surface.
  CHECK(x.point_id(make_point(x.F(), {1, 0, 0, 0})) >= 0);
  CHECK(x.point_id(make_point(x.F(), {0, 0, 0, 1})) >= 0);
}

TEST_CASE("custom model validation") {
  const Field& F = field(2, 1);
  Mat identity(4, 4);
  for (int i = 0; i < 4; ++i) identity.at(i, i) = 1;
  Surface x = build_surface(F, Model::Custom, &identity);
  CHECK(x.points.size() == 45);

  Mat rank3(4, 4);
  for (int i = 0; i < 3; ++i) rank3.at(i, i) = 1;
  CHECK_THROWS_AS(build_surface(F, Model::Custom, &rank3), std::invalid_argument);

  Mat non_hermitian(4, 4);
  for (int i = 0; i < 4; ++i) non_hermitian.at(i, i) = 1;
  non_hermitian.at(0, 1) = F.generator();
  CHECK_THROWS_AS(build_surface(F, Model::Custom, &non_hermitian), std::invalid_argument);
}

TEST_CASE("transversal count across skew pairs") {
  const Surface& x = fermat(2);
  // Any two skew lines of X have exactly q^2+1 common transversals among all
  // lines of PG(3,q^2); restricted to lines of X the count is part of
  // verify_census. Here: spot-check the lines-of-X transversal count d = 3.
  int a = 0, b = -1;
  for (std::size_t j = 1; j < x.lines.size(); ++j)
    if (!x.lines_meet(0, static_cast<int>(j))) {
      b = static_cast<int>(j);
      break;
    }
  REQUIRE(b > 0);
  int common = 0;
  for (std::size_t j = 0; j < x.lines.size(); ++j)
    if (x.lines_meet(a, static_cast<int>(j)) && x.lines_meet(b, static_cast<int>(j)))
      ++common;
  CHECK(common == 5);  // q^2+1 transversals inside X for a skew pair
}
