#pragma once

#include <string>
#include <vector>

#include "extremal/chords.hpp"
#include "extremal/report.hpp"
#include "extremal/surface.hpp"

namespace extremal {

/// Projective transformations preserving the surface's form up to scalar,
/// with a provenance tag (permutation | torus | unipotent | diagonal) each.
struct AutGenerators {
  std::vector<Transform> gens;
  std::vector<std::string> provenance;

  void add(Transform g, std::string tag) {
    gens.push_back(g);
    provenance.push_back(std::move(tag));
  }
};

/// (g^[q])^T A g = lambda A for some nonzero scalar.
bool is_unitary(const Field& F, const Transform& g, const FrobeniusForm& f);

/// Standard-model generators: coordinate symmetries and torus scalings for
/// both models; for the anti-diagonal model also the unipotent families
/// fixing [0:0:0:1] and [1:0:0:0] and the hyperbolic torus diag(a,1,1,a^-q).
AutGenerators generators(const Surface& x);

/// A smaller sublist that already generates enough for orbit closure; used to
/// keep BFS frontiers cheap. Falls back to nothing smaller than `gens` when
/// the family is already small.
AutGenerators reduced_generators(const Surface& x);

long long orbit_line(const Surface& x, const AutGenerators& gens, const Line& seed);
long long orbit_point(const Surface& x, const AutGenerators& gens, const Point& seed);
long long orbit_skew_pair(const Surface& x, const AutGenerators& gens, int l1, int l2);
long long orbit_skew_triple(const Surface& x, const AutGenerators& gens, int l1, int l2,
                            int l3);

/// q^6 (q^2-1)(q^3+1)(q^4-1), the order of PU(4, F_{q^2}).
long long aut_group_order(long long q);

/// Ordered sextuples (L1,L2,L3,M1,M2,M3): the L's pairwise skew, the M's
/// distinct lines meeting all three L's. Equals the group order.
long long census_sextuples(const Surface& x);

/// Order of the projective stabilizer of the star-point pair
/// ([1:0:0:0],[0:0:0:1]) on the anti-diagonal model, by enumerating the
/// block matrices diag(a11, h, a44); expected q(q^2-1)^2.
long long pair_stabilizer_order(const Field& F);

/// |PU(4, F_4)| by exhaustive orthonormal-column backtracking; q=2 only.
long long pu4_order_bruteforce(const Field& F);

Report verify_autos(const Surface& x, const ChordSet& cs);

}  // namespace extremal
