#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extremal/forms.hpp"
#include "fixtures.hpp"

using namespace extremal;
using fixtures::field;

namespace {

FrobeniusForm form3(const Field& F, std::array<int, 9> entries) {
  Mat a(3, 3);
  for (int i = 0; i < 9; ++i) a.a[i] = F.from_int(entries[i]);
  return FrobeniusForm(3, a);
}

Point pt(const Field& F, FE a, FE b, FE c, FE d) { return make_point(F, {a, b, c, d}); }

Transform random_transform(const Field& F, std::mt19937& rng) {
  for (;;) {
    std::array<FE, 16> m;
    for (FE& v : m) v = static_cast<FE>(rng() % F.size());
    Mat a(4, 4);
    std::copy(m.begin(), m.end(), a.a.begin());
    if (det(F, a) != 0) return make_transform(F, m);
  }
}

}  // namespace

TEST_CASE("evaluate worked examples") {
  const Field& F = field(2, 1);
  FrobeniusForm fermat = fermat_form(F, 4);
  CHECK(evaluate(F, fermat, pt(F, 1, 1, 1, 1)) == 0);  // 1+1+1+1 = 0 in char 2
  CHECK(evaluate(F, fermat, pt(F, 1, 0, 0, 0)) != 0);
  FrobeniusForm anti = antidiagonal_form(F);
  CHECK(evaluate(F, anti, pt(F, 1, 0, 0, 0)) == 0);
  CHECK(evaluate(F, anti, pt(F, 0, 0, 0, 1)) == 0);
}

TEST_CASE("line_on_form") {
  const Field& F = field(2, 1);
  FrobeniusForm fermat = fermat_form(F, 4);
  FE w = F.generator();  // w^3 = 1 = -1 in char 2
  Line l = line_through(F, pt(F, w, 1, 0, 0), pt(F, 0, 0, w, 1));
  CHECK(line_on_form(F, fermat, l));
  Line vxy = line_through(F, pt(F, 0, 0, 1, 0), pt(F, 0, 0, 0, 1));
  CHECK_FALSE(line_on_form(F, fermat, vxy));
  FrobeniusForm zero(4, Mat(4, 4));
  CHECK(line_on_form(F, zero, vxy));
}

TEST_CASE("rank") {
  const Field& F = field(2, 1);
  CHECK(form_rank(F, fermat_form(F, 4)) == 4);
  // Matrix of x^q y + y^q z.
  CHECK(form_rank(F, form3(F, {0, 1, 0, 0, 0, 1, 0, 0, 0})) == 2);
  CHECK(form_rank(F, FrobeniusForm(4, Mat(4, 4))) == 0);
}

TEST_CASE("change_coords evaluation identity") {
  const Field& F = field(2, 1);
  FrobeniusForm anti = antidiagonal_form(F);

  FrobeniusForm same = change_coords(F, anti, identity_transform());
  CHECK(same.a.a == anti.a.a);

  // Swap x <-> w fixes the anti-diagonal form.
  Transform swap_xw =
      make_transform(F, {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0});
  CHECK(change_coords(F, anti, swap_xw).a.a == anti.a.a);

  // evaluate(g*F, x) == evaluate(F, g x), exhaustively over PG(3,4).
  std::mt19937 rng(7);
  std::vector<Point> pts = all_points(F);
  for (int trial = 0; trial < 10; ++trial) {
    Transform g = random_transform(F, rng);
    FrobeniusForm pulled = change_coords(F, anti, g);
    for (const Point& p : pts)
      REQUIRE((evaluate(F, pulled, p) == 0) == (evaluate(F, anti, apply(F, g, p)) == 0));
    // Rank and degeneracy are invariant under invertible coordinate changes.
    CHECK(form_rank(F, pulled) == 4);
    CHECK_FALSE(is_degenerate(F, pulled).degenerate);
  }
}

TEST_CASE("is_hermitian") {
  const Field& F = field(2, 1);
  CHECK(is_hermitian(F, fermat_form(F, 4)));
  CHECK(is_hermitian(F, antidiagonal_form(F)));
  Mat a(4, 4);
  for (int i = 0; i < 4; ++i) a.at(i, i) = 1;
  a.at(0, 1) = F.generator();  // w^q = w^2 != w
  CHECK_FALSE(is_hermitian(F, FrobeniusForm(4, a)));
}

TEST_CASE("is_degenerate") {
  const Field& F = field(2, 1);
  // x^q y + y^q x with a zero third row and column: degenerate, witness e3.
  Degeneracy dg = is_degenerate(F, form3(F, {0, 1, 0, 1, 0, 0, 0, 0, 0}));
  CHECK(dg.degenerate);
  CHECK(dg.witness == std::vector<FE>{0, 0, 1});
  // x^{q+1} + y^q z: ker A = <e2> but A^T e2 != 0, so non-degenerate.
  CHECK_FALSE(is_degenerate(F, form3(F, {1, 0, 0, 0, 0, 1, 0, 0, 0})).degenerate);
  CHECK_FALSE(is_degenerate(F, fermat_form(F, 3)).degenerate);
}

TEST_CASE("restrict_to_plane") {
  const Field& F = field(2, 1);
  // Anti-diagonal form on H = V(x) restricts to y^q z + z^q y: a star.
  FrobeniusForm r1 =
      restrict_to_plane(F, antidiagonal_form(F), make_plane(F, {1, 0, 0, 0}));
  CHECK(is_degenerate(F, r1).degenerate);
  CHECK(classify_section(F, r1) == SectionClass::Star);

  // Fermat on V(w) restricts to the smooth Hermitian curve I_3.
  FrobeniusForm r2 =
      restrict_to_plane(F, fermat_form(F, 4), make_plane(F, {0, 0, 0, 1}));
  CHECK(classify_section(F, r2) == SectionClass::SmoothExtremalCurve);

  // Restriction commutes with evaluation: the projective zero counts of the
  // restriction and of the ambient form on the plane agree (compared via
  // affine nonzero vectors, each projective point giving s-1 of them).
  for (const Plane& h : all_planes(F)) {
    FrobeniusForm r = restrict_to_plane(F, fermat_form(F, 4), h);
    long long zero4 = 0, zero3 = 0;
    for (const Point& p : all_points(F))
      if (on_plane(F, p, h) && evaluate(F, fermat_form(F, 4), p) == 0) ++zero4;
    for (std::uint32_t a = 0; a < F.size(); ++a)
      for (std::uint32_t b = 0; b < F.size(); ++b)
        for (std::uint32_t c = 0; c < F.size(); ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          FE v[3] = {static_cast<FE>(a), static_cast<FE>(b), static_cast<FE>(c)};
          if (evaluate_vec(F, r, v) == 0) ++zero3;
        }
    CHECK(zero3 == zero4 * (static_cast<long long>(F.size()) - 1));
  }
}

TEST_CASE("classify_section reference matrices") {
  const Field& F = field(2, 1);
  CHECK(classify_section(F, fermat_form(F, 3)) == SectionClass::SmoothExtremalCurve);
  CHECK(classify_section(F, form3(F, {1, 0, 0, 0, 0, 1, 0, 0, 0})) ==
        SectionClass::CuspidalCurve);
  CHECK(classify_section(F, form3(F, {0, 1, 0, 0, 0, 1, 0, 0, 0})) ==
        SectionClass::LinePlusTangentCurve);
  CHECK(classify_section(F, form3(F, {0, 1, 0, 1, 0, 0, 0, 0, 0})) == SectionClass::Star);

  // Classification is invariant under invertible 3x3 coordinate changes.
  std::mt19937 rng(11);
  auto random3 = [&](const Field& Fx) {
    for (;;) {
      Mat g(3, 3);
      for (FE& v : g.a) v = static_cast<FE>(rng() % Fx.size());
      if (det(Fx, g) != 0) return g;
    }
  };
  for (int trial = 0; trial < 25; ++trial) {
    Mat g = random3(F);
    for (auto [mat, cls] : std::initializer_list<std::pair<std::array<int, 9>, SectionClass>>{
             {{1, 0, 0, 0, 1, 0, 0, 0, 1}, SectionClass::SmoothExtremalCurve},
             {{1, 0, 0, 0, 0, 1, 0, 0, 0}, SectionClass::CuspidalCurve},
             {{0, 1, 0, 0, 0, 1, 0, 0, 0}, SectionClass::LinePlusTangentCurve},
             {{0, 1, 0, 1, 0, 0, 0, 0, 0}, SectionClass::Star}}) {
      CHECK(classify_section(F, change_coords(F, form3(F, mat), g)) == cls);
    }
  }
}
