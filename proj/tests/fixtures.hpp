#pragma once

// Shared lazily-built fixtures so each test binary constructs a given field
// or surface at most once.

#include "extremal/gf.hpp"
#include "extremal/surface.hpp"

namespace fixtures {

inline const extremal::Field& field(int p, int e) {
  static extremal::Field f21(2, 1), f31(3, 1), f22(2, 2), f51(5, 1);
  if (p == 2 && e == 1) return f21;
  if (p == 3 && e == 1) return f31;
  if (p == 2 && e == 2) return f22;
  return f51;
}

inline const extremal::Surface& fermat(int p, int e = 1) {
  static extremal::Surface x2 = extremal::build_surface(field(2, 1), extremal::Model::Fermat);
  static extremal::Surface x3 = extremal::build_surface(field(3, 1), extremal::Model::Fermat);
  return p == 2 ? x2 : x3;
}

inline const extremal::Surface& antidiagonal_q2() {
  static extremal::Surface x =
      extremal::build_surface(field(2, 1), extremal::Model::AntiDiagonal);
  return x;
}

}  // namespace fixtures
