#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "extremal/doubles.hpp"
#include "fixtures.hpp"

using namespace extremal;
using fixtures::fermat;

namespace {

struct Layers {
  ChordSet cs;
  ConfigSet cfgs;
  ConfigChords cc;
};

const Layers& layers_q2() {
  static Layers l = [] {
    const Surface& x = fermat(2);
    Layers r{enumerate_chords(x), enumerate_configs(x), {}};
    r.cc = compute_config_chords(x, r.cfgs, r.cs);
    return r;
  }();
  return l;
}

}  // namespace

TEST_CASE("exhaustive search finds the 36 double sixes") {
  const Surface& x = fermat(2);
  const Layers& l = layers_q2();
  DoubleSearch res =
      search_doubles(x, l.cfgs, l.cs, l.cc, SearchMode::Exhaustive);
  CHECK(res.doubles.size() == 36);
  for (const Double2d& dd : res.doubles) {
    CHECK(validate_double(x, dd.set_a, dd.set_b).ok);
    CHECK(decompose(x, dd).size() == 10);  // ten quadric pairs per double six
  }

  // The chord-pair construction reaches the same 36.
  DoubleSearch cp =
      search_doubles(x, l.cfgs, l.cs, l.cc, SearchMode::ChordPairsOnly);
  CHECK(cp.doubles.size() == 36);
  std::vector<Double2d> a = res.doubles, b = cp.doubles;
  auto less = [](const Double2d& u, const Double2d& v) {
    return std::tie(u.set_a, u.set_b) < std::tie(v.set_a, v.set_b);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  CHECK(a == b);
}

TEST_CASE("validate_double rejects tampered sets") {
  const Surface& x = fermat(2);
  const Layers& l = layers_q2();
  Double2d dd = search_doubles(x, l.cfgs, l.cs, l.cc, SearchMode::Exhaustive).doubles[0];
  CHECK(validate_double(x, dd.set_a, dd.set_b).ok);

  std::vector<int> bad = dd.set_b;
  bad[0] = dd.set_a[0];  // sides no longer disjoint
  DoubleCheck c1 = validate_double(x, dd.set_a, bad);
  CHECK_FALSE(c1.ok);
  CHECK_FALSE(c1.reason.empty());

  std::vector<int> short_side(dd.set_b.begin(), dd.set_b.end() - 1);
  CHECK_FALSE(validate_double(x, dd.set_a, short_side).ok);
}

TEST_CASE("mu pairs on the Fermat surface") {
  const Surface& x = fermat(2);
  const Field& F = x.F();
  std::vector<FE> mus = F.solve_norm(F.neg(F.one()));
  REQUIRE(mus.size() == 3);
  for (std::size_t i = 0; i < mus.size(); ++i)
    for (std::size_t j = i + 1; j < mus.size(); ++j) {
      Double2d dd = mu_pair(x, mus[i], mus[j]);
      CHECK(validate_double(x, dd.set_a, dd.set_b).ok);
      CHECK(decompose(x, dd).size() >= 1);
    }
  CHECK_THROWS(mu_pair(x, mus[0], mus[0]));  // equal roots share lines
}

TEST_CASE("chord-pair census") {
  const Surface& x = fermat(2);
  const Layers& l = layers_q2();
  ChordPairCensus census = chord_pairs(x, l.cfgs, l.cs, l.cc);
  // (q^3+1)(q^2+1)(q-1)^2 q^7 / 16 = 360 at q=2.
  CHECK(census.pairs.size() == 360);
  for (const QuadricPair& qp : census.pairs) {
    CHECK(qp.chords.size() == 4);
    // The four shared chords close under duality.
    for (int c : qp.chords) {
      int d = l.cs.dual[c];
      CHECK(std::binary_search(qp.chords.begin(), qp.chords.end(), d));
    }
  }
  // Every configuration has q^3(q-1)^2/4 = 2 partners.
  for (int partners : census.partners) CHECK(partners == 2);
}

TEST_CASE("chord-pair census q=3") {
  const Surface& x = fermat(3);
  ChordSet cs = enumerate_chords(x);
  ConfigSet cfgs = enumerate_configs(x);
  ConfigChords cc = compute_config_chords(x, cfgs, cs);
  ChordPairCensus census = chord_pairs(x, cfgs, cs, cc);
  CHECK(census.pairs.size() == 153090);  // 28*10*4*2187/16
  for (int partners : census.partners) CHECK(partners == 27);  // q^3(q-1)^2/4
}

TEST_CASE("ell_bound values") {
  CHECK(ell_bound(3) == 3);
  CHECK(ell_bound(4) == 4);
  CHECK(ell_bound(11) == 5);
}

TEST_CASE("verify_doubles q=2") {
  const Surface& x = fermat(2);
  const Layers& l = layers_q2();
  CHECK(verify_doubles(x, l.cfgs, l.cs, l.cc).pass());
}

TEST_CASE("characteristic-3 quartic fixture") {
  // Two quadrics cutting the q=3 Fermat quartic in disjoint 8-line
  // configurations that assemble into a double eight.
  const Surface& x = fermat(3);
  const Field& F = x.F();
  const FE m1 = F.neg(F.one());

  QuadricForm q1 = make_quadric(F, {0, 0, 0, 1, 0, m1, 0, 0, 0, 0});  // xw - yz
  QuadricForm q2 = make_quadric(F, {1, 1, 1, m1, m1, 1, 1, 1, m1, m1});
  auto c1 = quadric_config(x, q1);
  auto c2 = quadric_config(x, q2);
  REQUIRE(c1.has_value());
  REQUIRE(c2.has_value());

  // The two roots of T^2 - T - 1 in F_9, pinned to their encodings under the
  // deterministic modulus and re-verified here.
  FE a = 5, abar = 8;
  REQUIRE(F.mul(a, a) == F.add(a, F.one()));
  REQUIRE(F.mul(abar, abar) == F.add(abar, F.one()));
  REQUIRE(F.frobq(a) == abar);

  auto line4 = [&](std::array<FE, 4> u, std::array<FE, 4> v) {
    return line_through(F, make_point(F, u), make_point(F, v));
  };
  // The eight lines of the second configuration, four per ruling.
  std::vector<Line> ruling_n = {
      line4({0, a, 1, 0}, {a, 0, 0, 1}),
      line4({0, abar, 1, 0}, {abar, 0, 0, 1}),
      line4({1, 0, 1, 1}, {0, 1, m1, 1}),
      line4({1, 0, m1, m1}, {0, 1, 1, m1}),
  };
  std::vector<Line> ruling_p = {
      line4({F.neg(a), 1, 0, 0}, {0, 0, abar, 1}),
      line4({F.neg(abar), 1, 0, 0}, {0, 0, a, 1}),
      line4({1, 0, 1, 1}, {0, 1, 1, m1}),
      line4({1, 0, m1, 1}, {0, 1, 1, 1}),
  };
  std::vector<int> c2_lines = c2->ruling_l;
  c2_lines.insert(c2_lines.end(), c2->ruling_m.begin(), c2->ruling_m.end());
  for (const Line& l : ruling_n) {
    int id = x.line_id(l);
    REQUIRE(id >= 0);
    CHECK(std::count(c2_lines.begin(), c2_lines.end(), id) == 1);
  }
  for (const Line& l : ruling_p) {
    int id = x.line_id(l);
    REQUIRE(id >= 0);
    CHECK(std::count(c2_lines.begin(), c2_lines.end(), id) == 1);
  }

  // Q1 and Q2 share no line of X.
  std::vector<int> c1_lines = c1->ruling_l;
  c1_lines.insert(c1_lines.end(), c1->ruling_m.begin(), c1->ruling_m.end());
  for (int id : c1_lines) CHECK(std::count(c2_lines.begin(), c2_lines.end(), id) == 0);

  // Together they assemble into a valid double eight with one decomposition.
  auto dd = pair_to_double(x, *c1, *c2);
  REQUIRE(dd.has_value());
  CHECK(validate_double(x, dd->set_a, dd->set_b).ok);
  CHECK(decompose(x, *dd).size() == 1);
}
