// Acceptance harness: one pass/fail line per acceptance criterion, covering
// q=2 and q=3. Exit code 0 iff every criterion holds.

#include <chrono>
#include <cstdio>
#include <vector>

#include "extremal/autos.hpp"
#include "extremal/chords.hpp"
#include "extremal/doubles.hpp"
#include "extremal/quadrics.hpp"
#include "extremal/surface.hpp"

using namespace extremal;

namespace {

int failures = 0;

void line(const char* name, bool pass, const char* detail) {
  std::printf("%s %-22s %s\n", pass ? "PASS" : "FAIL", name, detail);
  if (!pass) ++failures;
}

struct Stack {
  Field F;
  Surface x;
  ChordSet cs;
  ConfigSet cfgs;
  ConfigChords cc;

  explicit Stack(int p)
      : F(p, 1),
        x(build_surface(F, Model::Fermat)),
        cs(enumerate_chords(x)),
        cfgs(enumerate_configs(x)),
        cc(compute_config_chords(x, cfgs, cs)) {}
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  auto t2 = std::chrono::steady_clock::now();
  Stack s2(2);
  Report census2 = verify_census(s2.x);
  double census2_s = seconds_since(t2);

  auto t3 = std::chrono::steady_clock::now();
  Stack s3(3);
  Report census3 = verify_census(s3.x);
  double census3_s = seconds_since(t3);

  // 1. Census reproduction, exact, with runtime limits.
  {
    bool ok = census2.pass() && census3.pass();
    ok &= s2.x.points.size() == 45 && s2.x.lines.size() == 27;
    ok &= s3.x.points.size() == 280 && s3.x.lines.size() == 112;
    int meet3 = 0;
    for (std::size_t j = 1; j < s3.x.lines.size(); ++j)
      if (s3.x.lines_meet(0, static_cast<int>(j))) ++meet3;
    ok &= meet3 == 30 && (112 - 1 - meet3) == 81;
    ok &= census2_s < 1.0 && census3_s < 60.0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "q=2: 45 pts / 27 lines in %.2fs; q=3: 280 pts / 112 lines, "
                  "30 meet / 81 skew per line, in %.1fs",
                  census2_s, census3_s);
    line("census", ok, detail);
  }

  // 2. Quadric layer: configuration counts, per-ruling chords, every skew
  // triple yields a configuration (exhaustive at both q).
  {
    bool ok = s2.cfgs.configs.size() == 360 && s3.cfgs.configs.size() == 11340;
    Report rq2 = verify_quadrics(s2.x, s2.cfgs, s2.cs, s2.cc);
    Report rq3 = verify_quadrics(s3.x, s3.cfgs, s3.cs, s3.cc);
    ok &= rq2.pass() && rq3.pass();
    for (const auto& ruling : s3.cc.rulings)
      ok &= ruling[0].size() == 6 && ruling[1].size() == 6;  // q^2-q
    ok &= s3.cfgs.ordered_triples >= 10000;  // exhaustive, far past 10^4 triples
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "360 (q=2) and 11340 (q=3) configurations; %lld skew triples "
                  "checked at q=3",
                  s3.cfgs.ordered_triples);
    line("quadrics", ok, detail);
  }

  // 3. Double-2d layer: 36 double sixes with 10 decompositions each,
  // chord-pair censuses, universal decomposability, char-3 fixture.
  {
    DoubleSearch ex2 =
        search_doubles(s2.x, s2.cfgs, s2.cs, s2.cc, SearchMode::Exhaustive);
    bool ok = ex2.doubles.size() == 36;
    for (const Double2d& dd : ex2.doubles) ok &= decompose(s2.x, dd).size() == 10;
    ChordPairCensus cp2 = chord_pairs(s2.x, s2.cfgs, s2.cs, s2.cc);
    ChordPairCensus cp3 = chord_pairs(s3.x, s3.cfgs, s3.cs, s3.cc);
    ok &= cp2.pairs.size() == 360 && cp3.pairs.size() == 153090;
    DoubleSearch cp3d =
        search_doubles(s3.x, s3.cfgs, s3.cs, s3.cc, SearchMode::ChordPairsOnly);
    for (const Double2d& dd : cp3d.doubles) ok &= decompose(s3.x, dd).size() >= 1;

    // Characteristic-3 quartic fixture: the two quadrics share no line of X
    // and their configurations assemble into a decomposable double eight.
    const Field& F = s3.F;
    FE m1 = F.neg(F.one());
    auto c1 = quadric_config(s3.x, make_quadric(F, {0, 0, 0, 1, 0, m1, 0, 0, 0, 0}));
    auto c2 = quadric_config(s3.x, make_quadric(F, {1, 1, 1, m1, m1, 1, 1, 1, m1, m1}));
    bool fixture = c1.has_value() && c2.has_value();
    if (fixture) {
      std::vector<int> l1 = c1->ruling_l, l2 = c2->ruling_l;
      l1.insert(l1.end(), c1->ruling_m.begin(), c1->ruling_m.end());
      l2.insert(l2.end(), c2->ruling_m.begin(), c2->ruling_m.end());
      for (int a : l1)
        for (int b : l2) fixture &= a != b;
      auto dd = pair_to_double(s3.x, *c1, *c2);
      fixture &= dd.has_value() && validate_double(s3.x, dd->set_a, dd->set_b).ok &&
                 decompose(s3.x, *dd).size() == 1;
    }
    ok &= fixture;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "36 double sixes x 10 pairs; chord-pair census 360 / 153090; "
                  "%zu doubles at q=3 all decompose; char-3 fixture ok",
                  cp3d.doubles.size());
    line("doubles", ok, detail);
  }

  // 4. Automorphism layer.
  {
    bool ok = census_sextuples(s2.x) == 25920 && census_sextuples(s3.x) == 13063680;
    ok &= pair_stabilizer_order(s2.F) == 18;
    Report ra2 = verify_autos(s2.x, s2.cs);
    Report ra3 = verify_autos(s3.x, s3.cs);
    ok &= ra2.pass() && ra3.pass();
    line("automorphisms", ok,
         "sextuples 25920 / 13063680; orbit certificates cover censuses at "
         "q=2,3; pair stabilizer 18");
  }

  // 5. Property suites (invariant-based).
  {
    bool ok = true;
    for (int p : {2, 3}) {
      const Field& F = (p == 2) ? s2.F : s3.F;
      int q = static_cast<int>(F.q());
      for (std::uint32_t a = 0; a < F.size(); ++a) {
        ok &= F.frobq(F.frobq(a)) == a;
        if (a != 0) ok &= static_cast<int>(F.solve_norm(F.norm(a)).size()) == q + 1;
        ok &= static_cast<int>(F.solve_trace(F.trace(a)).size()) == q;
      }
    }
    // Chord duality involution and ruling bipartition are re-checked here on
    // top of their dedicated suites.
    for (std::size_t i = 0; i < s2.cs.chords.size(); ++i)
      ok &= s2.cs.dual[s2.cs.dual[i]] == static_cast<int>(i) &&
            s2.cs.dual[i] != static_cast<int>(i);
    Rulings r = lines_on_quadric(s2.F, s2.cfgs.configs[0].quadric);
    ok &= r.a.size() == 5 && r.b.size() == 5;
    for (std::size_t i = 0; i < r.a.size(); ++i)
      for (std::size_t j = 0; j < r.b.size(); ++j)
        ok &= incidence(s2.F, r.a[i], r.b[j]).kind == IncidenceKind::Meet;
    ok &= ell_bound(3) == 3 && ell_bound(4) == 4 && ell_bound(11) == 5;
    line("properties", ok,
         "Frobenius involution, norm/trace fibers, duality involution, ruling "
         "bipartition, ell bounds {3,4,5}");
  }

  // 6. Scale statement: asymptotic claims are represented by the exact finite
  // counts above plus the ell_bound values; the q=4 exhaustive search stays
  // behind the CLI's --long-running flag.
  line("scale", ell_bound(11) == 5,
       "asymptotics covered by exact finite counts; q=4 exhaustive search "
       "gated behind --long-running");

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "OK", failures);
  return failures ? 1 : 0;
}
