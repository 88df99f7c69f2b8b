#include "extremal/forms.hpp"

#include <stdexcept>

namespace extremal {

const char* to_string(SectionClass c) {
  switch (c) {
    case SectionClass::SmoothExtremalCurve: return "smooth_extremal_curve";
    case SectionClass::CuspidalCurve: return "cuspidal_curve";
    case SectionClass::LinePlusTangentCurve: return "line_plus_tangent_curve";
    case SectionClass::Star: return "star";
    case SectionClass::NonReducedDouble: return "non_reduced_double";
    case SectionClass::NonReducedPower: return "non_reduced_power";
  }
  return "?";
}

FrobeniusForm fermat_form(const Field& F, int n) {
  Mat a(n, n);
  for (int i = 0; i < n; ++i) a.at(i, i) = F.one();
  return {n, a};
}

FrobeniusForm antidiagonal_form(const Field& F) {
  Mat a(4, 4);
  a.at(0, 3) = F.one();
  a.at(1, 2) = F.one();
  a.at(2, 1) = F.one();
  a.at(3, 0) = F.one();
  return {4, a};
}

FE evaluate_vec(const Field& F, const FrobeniusForm& f, const FE* x) {
  FE acc = 0;
  for (int i = 0; i < f.n; ++i) {
    if (x[i] == 0) continue;
    FE row = 0;
    for (int j = 0; j < f.n; ++j) {
      FE c = f.a.at(i, j);
      if (c != 0 && x[j] != 0) row = F.add(row, F.mul(c, x[j]));
    }
    if (row != 0) acc = F.add(acc, F.mul(F.frobq(x[i]), row));
  }
  return acc;
}

FE evaluate(const Field& F, const FrobeniusForm& f, const Point& pt) {
  if (f.n != 4) throw std::invalid_argument("point evaluation needs a 4-variable form");
  return evaluate_vec(F, f, pt.x.data());
}

namespace {

// (u^[q])^T A v
FE bilinear(const Field& F, const FrobeniusForm& f, const FE* u, const FE* v) {
  FE acc = 0;
  for (int i = 0; i < f.n; ++i) {
    if (u[i] == 0) continue;
    FE row = 0;
    for (int j = 0; j < f.n; ++j) {
      FE c = f.a.at(i, j);
      if (c != 0 && v[j] != 0) row = F.add(row, F.mul(c, v[j]));
    }
    if (row != 0) acc = F.add(acc, F.mul(F.frobq(u[i]), row));
  }
  return acc;
}

}  // namespace

bool line_on_form(const Field& F, const FrobeniusForm& f, const Line& l) {
  if (f.n != 4) throw std::invalid_argument("line containment needs a 4-variable form");
  const FE* u = l.b.data();
  const FE* v = l.b.data() + 4;
  return bilinear(F, f, u, u) == 0 && bilinear(F, f, u, v) == 0 &&
         bilinear(F, f, v, u) == 0 && bilinear(F, f, v, v) == 0;
}

int form_rank(const Field& F, const FrobeniusForm& f) { return rank(F, f.a); }

FrobeniusForm change_coords(const Field& F, const FrobeniusForm& f, const Mat& g) {
  if (g.rows != f.n || g.cols != f.n)
    throw std::invalid_argument("coordinate change has wrong dimensions");
  if (rank(F, g) != f.n) throw std::invalid_argument("coordinate change is singular");
  Mat gq = frobq(F, g);
  return {f.n, matmul(F, matmul(F, transpose(gq), f.a), g)};
}

FrobeniusForm change_coords(const Field& F, const FrobeniusForm& f, const Transform& g) {
  Mat m(4, 4);
  for (int i = 0; i < 16; ++i) m.a[i] = g.m[i];
  return change_coords(F, f, m);
}

bool is_hermitian(const Field& F, const FrobeniusForm& f) {
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      if (F.frobq(f.a.at(j, i)) != f.a.at(i, j)) return false;
  return true;
}

Degeneracy is_degenerate(const Field& F, const FrobeniusForm& f) {
  Mat ker = nullspace(F, f.a);
  if (ker.rows == 0) return {};
  Mat at = transpose(f.a);
  // Enumerate the projectivized kernel: coefficient tuples with first nonzero
  // coordinate 1. Kernel dimension here is at most 4, so this is tiny.
  const std::uint32_t s = F.size();
  std::vector<FE> coef(ker.rows, 0);
  std::vector<FE> v(f.n);
  for (int lead = 0; lead < ker.rows; ++lead) {
    std::uint64_t combos = 1;
    for (int i = lead + 1; i < ker.rows; ++i) combos *= s;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[lead] = F.one();
      std::uint64_t t = c;
      for (int i = lead + 1; i < ker.rows; ++i) {
        coef[i] = static_cast<FE>(t % s);
        t /= s;
      }
      for (int j = 0; j < f.n; ++j) {
        FE acc = 0;
        for (int i = 0; i < ker.rows; ++i)
          acc = F.add(acc, F.mul(coef[i], ker.at(i, j)));
        v[j] = acc;
      }
      bool ok = true;
      for (int i = 0; i < f.n && ok; ++i) {
        FE acc = 0;
        for (int j = 0; j < f.n; ++j)
          acc = F.add(acc, F.mul(at.at(i, j), F.frobq(v[j])));
        if (acc != 0) ok = false;
      }
      if (ok) return {true, v};
    }
  }
  return {};
}

FrobeniusForm restrict_to_plane(const Field& F, const FrobeniusForm& f, const Plane& h) {
  if (f.n != 4) throw std::invalid_argument("plane restriction needs a 4-variable form");
  Mat cov(1, 4);
  for (int j = 0; j < 4; ++j) cov.at(0, j) = h.n[j];
  Mat basis = nullspace(F, cov);  // 3 x 4 parametrization of the plane
  if (basis.rows != 3) throw std::logic_error("plane basis is not 3-dimensional");
  Mat bq = frobq(F, basis);
  return {3, matmul(F, matmul(F, bq, f.a), transpose(basis))};
}

namespace {

std::vector<std::array<FE, 3>> pg2_points(const Field& F) {
  const std::uint32_t s = F.size();
  std::vector<std::array<FE, 3>> pts;
  pts.reserve(static_cast<std::size_t>(s) * s + s + 1);
  for (std::uint32_t a = 0; a < s; ++a)
    for (std::uint32_t b = 0; b < s; ++b)
      pts.push_back({1, static_cast<FE>(a), static_cast<FE>(b)});
  for (std::uint32_t b = 0; b < s; ++b) pts.push_back({0, 1, static_cast<FE>(b)});
  pts.push_back({0, 0, 1});
  return pts;
}

// Does the zero locus of a 3-variable form contain a full rational line of
// PG(2, q^2)?
bool contains_pg2_line(const Field& F, const FrobeniusForm& f3) {
  for (const auto& cov : pg2_points(F)) {
    Mat m(1, 3);
    for (int j = 0; j < 3; ++j) m.at(0, j) = cov[j];
    Mat ns = nullspace(F, m);  // 2 x 3
    bool all_zero = true;
    // Points of the line: v, u + t v.
    FE pt[3];
    for (int j = 0; j < 3; ++j) pt[j] = ns.at(1, j);
    if (evaluate_vec(F, f3, pt) != 0) continue;
    for (std::uint32_t t = 0; t < F.size() && all_zero; ++t) {
      for (int j = 0; j < 3; ++j)
        pt[j] = F.add(ns.at(0, j), F.mul(static_cast<FE>(t), ns.at(1, j)));
      if (evaluate_vec(F, f3, pt) != 0) all_zero = false;
    }
    if (all_zero) return true;
  }
  return false;
}

}  // namespace

SectionClass classify_section(const Field& F, const FrobeniusForm& f3) {
  if (f3.n != 3) throw std::invalid_argument("section classification needs a 3-variable form");
  int r = form_rank(F, f3);
  if (r == 0) throw std::invalid_argument("zero form has no section class");
  Degeneracy deg = is_degenerate(F, f3);
  if (!deg.degenerate) {
    if (r == 3) return SectionClass::SmoothExtremalCurve;
    if (r == 2)
      return contains_pg2_line(F, f3) ? SectionClass::LinePlusTangentCurve
                                      : SectionClass::CuspidalCurve;
    throw std::logic_error("non-degenerate 3-variable Frobenius form of rank < 2");
  }
  if (r == 2) return SectionClass::Star;
  // Rank 1: A = a b^T; the section is a (q+1)-fold line iff the q-th-root of
  // the column direction is proportional to the row direction.
  int i0 = -1, j0 = -1;
  for (int i = 0; i < 3 && i0 < 0; ++i)
    for (int j = 0; j < 3; ++j)
      if (f3.a.at(i, j) != 0) { i0 = i; j0 = j; break; }
  FE av[3], bv[3];
  for (int i = 0; i < 3; ++i) av[i] = F.frobq(f3.a.at(i, j0));  // a^[1/q] = a^[q]
  for (int j = 0; j < 3; ++j) bv[j] = f3.a.at(i0, j);
  bool proportional = true;
  for (int i = 0; i < 3 && proportional; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (F.mul(av[i], bv[j]) != F.mul(av[j], bv[i])) { proportional = false; break; }
  return proportional ? SectionClass::NonReducedPower : SectionClass::NonReducedDouble;
}

}  // namespace extremal
