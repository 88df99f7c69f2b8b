#include "extremal/quadrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace extremal {

namespace {

// Upper-triangular coefficient order: (0,0),(0,1),(0,2),(0,3),(1,1),(1,2),
// (1,3),(2,2),(2,3),(3,3).
constexpr int kMono[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                              {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

FE eval_vec(const Field& F, const QuadricForm& qf, const FE* x) {
  FE acc = 0;
  for (int k = 0; k < 10; ++k) {
    if (qf.c[k] == 0) continue;
    FE m = F.mul(x[kMono[k][0]], x[kMono[k][1]]);
    if (m != 0) acc = F.add(acc, F.mul(qf.c[k], m));
  }
  return acc;
}

}  // namespace

std::uint64_t key(const QuadricForm& qf) {
  std::uint64_t h = 1469598103934665603ull;
  for (FE c : qf.c) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t QuadricHash::operator()(const QuadricForm& q) const {
  return static_cast<std::size_t>(key(q));
}

QuadricForm make_quadric(const Field& F, const std::array<FE, 10>& coeffs) {
  int lead = -1;
  for (int k = 0; k < 10; ++k)
    if (coeffs[k] != 0) { lead = k; break; }
  if (lead < 0) throw std::invalid_argument("zero quadratic form");
  QuadricForm qf;
  FE inv = F.inv(coeffs[lead]);
  for (int k = 0; k < 10; ++k) qf.c[k] = F.mul(coeffs[k], inv);
  return qf;
}

FE quadric_eval(const Field& F, const QuadricForm& qf, const Point& p) {
  return eval_vec(F, qf, p.x.data());
}

Mat polar_form(const Field& F, const QuadricForm& qf) {
  // B(e_i,e_j) = c_ij off the diagonal, 2 c_ii on it (zero in char 2).
  Mat b(4, 4);
  for (int k = 0; k < 10; ++k) {
    int i = kMono[k][0], j = kMono[k][1];
    if (i == j)
      b.at(i, i) = F.add(qf.c[k], qf.c[k]);
    else
      b.at(i, j) = b.at(j, i) = qf.c[k];
  }
  return b;
}

bool line_on_quadric(const Field& F, const QuadricForm& qf, const Line& l) {
  // A quadratic restricted to a line vanishes iff it vanishes at 3 points.
  const FE* u = l.b.data();
  const FE* v = l.b.data() + 4;
  FE w[4];
  for (int j = 0; j < 4; ++j) w[j] = F.add(u[j], v[j]);
  return eval_vec(F, qf, u) == 0 && eval_vec(F, qf, v) == 0 && eval_vec(F, qf, w) == 0;
}

QuadricForm quadric_through(const Field& F, const Line& l1, const Line& l2, const Line& l3) {
  const Line* ls[3] = {&l1, &l2, &l3};
  Mat sys(9, 10);
  int r = 0;
  for (const Line* l : ls) {
    const FE* u = l->b.data();
    const FE* v = l->b.data() + 4;
    FE w[4];
    for (int j = 0; j < 4; ++j) w[j] = F.add(u[j], v[j]);
    const FE* pts[3] = {u, v, w};
    for (const FE* x : pts) {
      for (int k = 0; k < 10; ++k) sys.at(r, k) = F.mul(x[kMono[k][0]], x[kMono[k][1]]);
      ++r;
    }
  }
  Mat ns = nullspace(F, sys);
  if (ns.rows != 1)
    throw std::invalid_argument("no unique quadric through the three lines");
  std::array<FE, 10> c;
  for (int k = 0; k < 10; ++k) c[k] = ns.at(0, k);
  QuadricForm qf = make_quadric(F, c);
  if (rank(F, polar_form(F, qf)) != 4)
    throw std::invalid_argument("quadric through the lines is not smooth");
  for (const Line* l : ls)
    if (!line_on_quadric(F, qf, *l))
      throw std::logic_error("solved quadric misses an input line");
  return qf;
}

Rulings lines_on_quadric(const Field& F, const QuadricForm& qf) {
  Mat b = polar_form(F, qf);
  if (rank(F, b) != 4) throw std::invalid_argument("quadric is not of polar rank 4");

  std::vector<Point> on_q;
  for (const Point& p : all_points(F))
    if (quadric_eval(F, qf, p) == 0) on_q.push_back(p);

  // Lines through p on Q are exactly spans of p with other Q-points of the
  // polar (tangent) plane at p: the restriction to such a span has a double
  // zero at p plus one more, hence vanishes.
  std::vector<Line> ls;
  std::unordered_map<Line, int, LineHash> seen;
  for (const Point& p : on_q) {
    std::array<FE, 4> n{};
    for (int i = 0; i < 4; ++i) {
      FE acc = 0;
      for (int j = 0; j < 4; ++j) acc = F.add(acc, F.mul(b.at(i, j), p.x[j]));
      n[i] = acc;
    }
    Plane t = make_plane(F, n);
    for (const Point& r : on_q) {
      if (r == p || !on_plane(F, r, t)) continue;
      Line l = line_through(F, p, r);
      if (seen.emplace(l, static_cast<int>(ls.size())).second) ls.push_back(l);
    }
  }
  const std::size_t per_ruling = F.size() + 1;
  if (ls.size() != 2 * per_ruling)
    throw std::invalid_argument("quadric does not carry 2(q^2+1) rational lines");

  Rulings rul;
  rul.a.push_back(ls[0]);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    Incidence inc = incidence(F, ls[0], ls[i]);
    if (inc.kind == IncidenceKind::Skew)
      rul.a.push_back(ls[i]);
    else
      rul.b.push_back(ls[i]);
  }
  if (rul.a.size() != per_ruling || rul.b.size() != per_ruling)
    throw std::logic_error("ruling bipartition is not balanced");
  for (std::size_t i = 0; i < per_ruling; ++i)
    for (std::size_t j = i + 1; j < per_ruling; ++j) {
      if (incidence(F, rul.a[i], rul.a[j]).kind != IncidenceKind::Skew ||
          incidence(F, rul.b[i], rul.b[j]).kind != IncidenceKind::Skew)
        throw std::logic_error("lines within a ruling are not pairwise skew");
    }
  for (const Line& la : rul.a)
    for (const Line& lb : rul.b)
      if (incidence(F, la, lb).kind != IncidenceKind::Meet)
        throw std::logic_error("lines in opposite rulings fail to meet");
  return rul;
}

std::optional<QuadricConfiguration> quadric_config(const Surface& x, const QuadricForm& qf) {
  const Field& F = x.F();
  std::vector<int> on;
  for (std::size_t li = 0; li < x.lines.size(); ++li)
    if (line_on_quadric(F, qf, x.lines[li])) on.push_back(static_cast<int>(li));
  const std::size_t d = x.q() + 1;
  if (on.size() != 2 * d) return std::nullopt;

  QuadricConfiguration cfg;
  cfg.quadric = qf;
  cfg.ruling_l.push_back(on[0]);
  for (std::size_t i = 1; i < on.size(); ++i)
    (x.lines_meet(on[0], on[i]) ? cfg.ruling_m : cfg.ruling_l).push_back(on[i]);
  if (cfg.ruling_l.size() != d || cfg.ruling_m.size() != d) return std::nullopt;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (x.lines_meet(cfg.ruling_l[i], cfg.ruling_l[j]) ||
          x.lines_meet(cfg.ruling_m[i], cfg.ruling_m[j]))
        return std::nullopt;
  for (int li : cfg.ruling_l)
    for (int mi : cfg.ruling_m)
      if (!x.lines_meet(li, mi)) return std::nullopt;
  std::sort(cfg.ruling_l.begin(), cfg.ruling_l.end());
  std::sort(cfg.ruling_m.begin(), cfg.ruling_m.end());
  return cfg;
}

ConfigSet enumerate_configs(const Surface& x) {
  const Field& F = x.F();
  ConfigSet out;
  const int nl = static_cast<int>(x.lines.size());
  for (int i = 0; i < nl; ++i)
    for (int j = i + 1; j < nl; ++j) {
      if (x.lines_meet(i, j)) continue;
      for (int k = j + 1; k < nl; ++k) {
        if (x.lines_meet(i, k) || x.lines_meet(j, k)) continue;
        out.ordered_triples += 6;
        QuadricForm qf = quadric_through(F, x.lines[i], x.lines[j], x.lines[k]);
        if (!out.index.emplace(qf, static_cast<int>(out.configs.size())).second) continue;
        auto cfg = quadric_config(x, qf);
        if (!cfg)
          throw std::logic_error("skew triple of surface lines is not in a configuration");
        out.configs.push_back(std::move(*cfg));
      }
    }
  const long long q = x.q();
  const long long expected = (q * q * q + 1) * (q * q + 1) * q * q * q * q / 2;
  if (static_cast<long long>(out.configs.size()) != expected)
    throw std::logic_error("quadric configuration count mismatch");
  return out;
}

RulingChords chords_in_rulings(const Surface& x, const QuadricConfiguration& cfg) {
  const Field& F = x.F();
  Rulings rul = lines_on_quadric(F, cfg.quadric);
  // Align ruling a with cfg.ruling_l.
  const Line& l0 = x.lines[cfg.ruling_l[0]];
  bool a_is_l = false;
  for (const Line& l : rul.a)
    if (l == l0) a_is_l = true;
  if (!a_is_l) std::swap(rul.a, rul.b);

  RulingChords rc;
  auto sift = [&](const std::vector<Line>& ruling, std::vector<Line>& chords) {
    for (const Line& l : ruling) {
      if (x.line_id(l) >= 0) continue;
      int stars = 0;
      for (const Point& p : points_on_line(F, l))
        if (x.point_id(p) >= 0) ++stars;
      if (stars != static_cast<int>(x.q()) + 1)
        throw std::logic_error("off-surface ruling line is not a star chord");
      chords.push_back(l);
    }
  };
  sift(rul.a, rc.a);
  sift(rul.b, rc.b);
  return rc;
}

ConfigChords compute_config_chords(const Surface& x, const ConfigSet& cfgs,
                                   const ChordSet& cs) {
  ConfigChords cc;
  cc.rulings.resize(cfgs.configs.size());
  cc.chord_configs.resize(cs.chords.size());
  for (std::size_t ci = 0; ci < cfgs.configs.size(); ++ci) {
    RulingChords rc = chords_in_rulings(x, cfgs.configs[ci]);
    auto to_ids = [&](const std::vector<Line>& side, std::vector<int>& out) {
      for (const Line& l : side) {
        int id = cs.id(l);
        if (id < 0) throw std::logic_error("ruling chord missing from the chord set");
        out.push_back(id);
        cc.chord_configs[id].push_back(static_cast<int>(ci));
      }
      std::sort(out.begin(), out.end());
    };
    to_ids(rc.a, cc.rulings[ci][0]);
    to_ids(rc.b, cc.rulings[ci][1]);
  }
  for (auto& v : cc.chord_configs) std::sort(v.begin(), v.end());
  return cc;
}

Report verify_quadrics(const Surface& x, const ConfigSet& cfgs, const ChordSet& cs,
                       const ConfigChords& cc) {
  const Field& F = x.F();
  const long long q = x.q();
  Report rep;

  rep.add("configurations", "(q^3+1)(q^2+1)q^4/2",
          (q * q * q + 1) * (q * q + 1) * q * q * q * q / 2,
          static_cast<long long>(cfgs.configs.size()));
  rep.add("ordered_triples_per_config", "2(q+1)q(q-1)", 2 * (q + 1) * q * (q - 1),
          cfgs.configs.empty()
              ? -1
              : cfgs.ordered_triples / static_cast<long long>(cfgs.configs.size()));
  rep.add("ordered_skew_triples", "configs * 2(q+1)q(q-1)",
          static_cast<long long>(cfgs.configs.size()) * 2 * (q + 1) * q * (q - 1),
          cfgs.ordered_triples);

  bool chord_counts = true, cross_meet_off = true, dual_same_ruling = true;
  for (std::size_t ci = 0; ci < cfgs.configs.size(); ++ci) {
    const auto& [ra, rb] = cc.rulings[ci];
    if (static_cast<long long>(ra.size()) != q * q - q ||
        static_cast<long long>(rb.size()) != q * q - q)
      chord_counts = false;
    for (int ia : ra)
      for (int ib : rb) {
        Incidence inc = incidence(F, cs.chords[ia].line, cs.chords[ib].line);
        if (inc.kind != IncidenceKind::Meet || x.point_id(inc.at) >= 0)
          cross_meet_off = false;
      }
    // Dual of an in-quadric chord lies on the quadric, in the same ruling.
    for (const auto& side : cc.rulings[ci])
      for (int ia : side)
        if (!std::binary_search(side.begin(), side.end(), cs.dual[ia]))
          dual_same_ruling = false;
  }
  rep.add_bool("chords_per_ruling", "q^2-q in each ruling", chord_counts);
  rep.add_bool("cross_ruling_chords_meet_off_x",
               "opposite-ruling chords meet outside the surface", cross_meet_off);
  rep.add_bool("dual_chord_same_ruling",
               "dual of an in-quadric chord is on the quadric, same ruling",
               dual_same_ruling);

  // Two chords on a common configuration quadric (one per ruling) share
  // exactly q+1 such quadrics.
  bool shared_quadrics = true;
  for (std::size_t ci = 0; ci < cfgs.configs.size() && shared_quadrics; ++ci) {
    for (int ia : cc.rulings[ci][0])
      for (int ib : cc.rulings[ci][1]) {
        const auto& u = cc.chord_configs[ia];
        const auto& v = cc.chord_configs[ib];
        std::vector<int> common;
        std::set_intersection(u.begin(), u.end(), v.begin(), v.end(),
                              std::back_inserter(common));
        if (static_cast<long long>(common.size()) != q + 1) shared_quadrics = false;
      }
  }
  rep.add_bool("quadrics_through_chord_pair",
               "q+1 configuration quadrics through two opposite-ruling chords",
               shared_quadrics);
  return rep;
}

}  // namespace extremal
