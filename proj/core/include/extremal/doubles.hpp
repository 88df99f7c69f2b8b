#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/quadrics.hpp"
#include "extremal/report.hpp"
#include "extremal/surface.hpp"

namespace extremal {

/// Double 2d configuration: two disjoint skew 2d-sets of surface lines where
/// every line meets exactly d+2 lines of the other set. Canonical form: both
/// sides sorted, lexicographically smaller side first.
struct Double2d {
  std::vector<int> set_a, set_b;

  void canonicalize();
  bool operator==(const Double2d&) const = default;
};

struct Double2dHash {
  std::size_t operator()(const Double2d& d) const;
};

struct DoubleCheck {
  bool ok = false;
  std::string reason;  // first violated condition when !ok
  Double2d dd;
};

/// Check the skewness and d+2-marginal conditions of a candidate double 2d.
DoubleCheck validate_double(const Surface& x, std::vector<int> set_a,
                            std::vector<int> set_b);

/// The double 2(q+1) built from two distinct (q+1)-st roots of unity on the
/// Fermat model: A = L_{mu1} u M_{mu2}, B = L_{mu2} u M_{mu1}.
Double2d mu_pair(const Surface& x, FE mu1, FE mu2);

/// Try to split two line-disjoint configurations into a double 2d by pairing
/// a ruling of one with a ruling of the other; both cross pairings are tried.
std::optional<Double2d> pair_to_double(const Surface& x, const QuadricConfiguration& c1,
                                       const QuadricConfiguration& c2);

/// An unordered configuration pair whose quadrics intersect in four star
/// chords (two dual pairs in opposite rulings).
struct QuadricPair {
  int c1 = -1, c2 = -1;
  std::vector<int> chords;  // the 4 shared chord ids, sorted
};

struct ChordPairCensus {
  std::vector<QuadricPair> pairs;
  std::vector<int> partners;  // per configuration
};

/// All configuration pairs sharing a line off X; each must be of the
/// four-star-chord kind. Total (q^3+1)(q^2+1)(q-1)^2 q^7 / 16.
ChordPairCensus chord_pairs(const Surface& x, const ConfigSet& cfgs, const ChordSet& cs,
                            const ConfigChords& cc);

enum class SearchMode { Exhaustive, ChordPairsOnly };

struct DoubleSearch {
  std::vector<Double2d> doubles;
  long long quadric_pairs = 0;  // chord-pairs mode: generating pairs seen
};

/// Find double 2d's. Exhaustive mode runs a pruned DFS over skew cliques and
/// is guarded to q <= 3 unless allow_long_running is set.
DoubleSearch search_doubles(const Surface& x, const ConfigSet& cfgs, const ChordSet& cs,
                            const ConfigChords& cc, SearchMode mode,
                            bool allow_long_running = false);

/// All double 2d's whose lowest line index is `root`. The exhaustive search
/// is the union over all roots; callers can checkpoint per root.
std::vector<Double2d> search_doubles_with_min(const Surface& x, int root);

/// All unordered configuration pairs realizing a double 2d: one ruling from
/// each side of the double per quadric.
std::vector<std::pair<QuadricConfiguration, QuadricConfiguration>> decompose(
    const Surface& x, const Double2d& dd);

/// Lower bound for the number of shared transversals used in the d >= 11
/// argument: ceil(ceil((d+1)(d+2)/(2d-1)) * d/(2d-2)).
int ell_bound(int d);

Report verify_doubles(const Surface& x, const ConfigSet& cfgs, const ChordSet& cs,
                      const ConfigChords& cc);

}  // namespace extremal
