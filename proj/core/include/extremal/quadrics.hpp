#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "extremal/chords.hpp"
#include "extremal/report.hpp"
#include "extremal/surface.hpp"

namespace extremal {

/// Quadratic form on PG(3,q^2), stored as the 10 upper-triangular
/// coefficients c[i][j] (i <= j) of sum c_ij x_i x_j, scaled so the first
/// nonzero coefficient is 1. Polar form via B(x,y) = f(x+y)-f(x)-f(y),
/// which stays valid in characteristic 2.
struct QuadricForm {
  std::array<FE, 10> c{};
  bool operator==(const QuadricForm&) const = default;
};

std::uint64_t key(const QuadricForm& qf);
struct QuadricHash {
  std::size_t operator()(const QuadricForm& q) const;
};

QuadricForm make_quadric(const Field& F, const std::array<FE, 10>& coeffs);
FE quadric_eval(const Field& F, const QuadricForm& qf, const Point& p);
/// Matrix of the polar bilinear form B(x,y).
Mat polar_form(const Field& F, const QuadricForm& qf);
bool line_on_quadric(const Field& F, const QuadricForm& qf, const Line& l);

/// The unique quadric through three pairwise skew lines. Throws if the
/// 10-coefficient solution space is not 1-dimensional or the polar form is
/// not of rank 4.
QuadricForm quadric_through(const Field& F, const Line& l1, const Line& l2, const Line& l3);

/// The 2(q^2+1) rational lines of a rank-4 (hyperbolic) quadric, split into
/// the two rulings: lines in one ruling are pairwise skew, lines in opposite
/// rulings meet.
struct Rulings {
  std::vector<Line> a, b;
};
Rulings lines_on_quadric(const Field& F, const QuadricForm& qf);

/// The 2d lines of X on a quadric, d per ruling.
struct QuadricConfiguration {
  QuadricForm quadric;
  std::vector<int> ruling_l, ruling_m;  // sorted surface line ids
};
std::optional<QuadricConfiguration> quadric_config(const Surface& x, const QuadricForm& qf);

struct ConfigSet {
  std::vector<QuadricConfiguration> configs;
  std::unordered_map<QuadricForm, int, QuadricHash> index;
  long long ordered_triples = 0;  // skew line triples seen while enumerating
};
/// All quadric configurations on X, from skew triples of its lines;
/// count = (q^3+1)(q^2+1)q^4 / 2.
ConfigSet enumerate_configs(const Surface& x);

/// Star chords lying in the rulings of a configuration's quadric:
/// q^2-q per ruling.
struct RulingChords {
  std::vector<Line> a, b;
};
RulingChords chords_in_rulings(const Surface& x, const QuadricConfiguration& cfg);

/// Ruling chords of every configuration resolved to ChordSet ids, plus the
/// inverse chord -> configurations map. Shared by the quadric checks and the
/// quadric-pair census.
struct ConfigChords {
  // [config][0|1] -> sorted chord ids; slot 0 is the ruling of ruling_l
  std::vector<std::array<std::vector<int>, 2>> rulings;
  std::vector<std::vector<int>> chord_configs;  // chord id -> sorted config ids
};
ConfigChords compute_config_chords(const Surface& x, const ConfigSet& cfgs, const ChordSet& cs);

Report verify_quadrics(const Surface& x, const ConfigSet& cfgs, const ChordSet& cs,
                       const ConfigChords& cc);

}  // namespace extremal
