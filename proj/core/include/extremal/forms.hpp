#pragma once

#include <optional>
#include <vector>

#include "extremal/gf.hpp"
#include "extremal/linalg.hpp"
#include "extremal/proj.hpp"

namespace extremal {

/// Degree-(q+1) form h = (x^[q])^T A x in n variables, represented by the
/// unique n x n matrix A whose i-th row gives the linear form multiplying
/// x_i^q.
struct FrobeniusForm {
  int n = 0;
  Mat a;

  FrobeniusForm() = default;
  FrobeniusForm(int vars, Mat matrix) : n(vars), a(std::move(matrix)) {}
};

/// Plane-section types of a 3-variable Frobenius form. The reduced classes
/// are a smooth curve, a cuspidal curve, a line plus tangent curve, and a
/// star; the non-reduced classes are a double line plus line and a (q+1)-fold
/// line.
enum class SectionClass {
  SmoothExtremalCurve,
  CuspidalCurve,
  LinePlusTangentCurve,
  Star,
  NonReducedDouble,
  NonReducedPower,
};

const char* to_string(SectionClass c);

FrobeniusForm fermat_form(const Field& F, int n);
/// x^q w + w^q x + y^q z + z^q y (the anti-diagonal model, n = 4).
FrobeniusForm antidiagonal_form(const Field& F);

/// Value of the form at representative coordinates. Only the zero/nonzero
/// outcome is representative-independent.
FE evaluate(const Field& F, const FrobeniusForm& f, const Point& pt);
FE evaluate_vec(const Field& F, const FrobeniusForm& f, const FE* coords);

/// True iff the line lies entirely in the vanishing locus (n = 4).
bool line_on_form(const Field& F, const FrobeniusForm& f, const Line& l);

int form_rank(const Field& F, const FrobeniusForm& f);

/// Matrix of g*F: evaluate(result, x) == evaluate(f, g x) for every x.
FrobeniusForm change_coords(const Field& F, const FrobeniusForm& f, const Transform& g);
FrobeniusForm change_coords(const Field& F, const FrobeniusForm& f, const Mat& g);

/// (A^[q])^T == A; implies the form is defined over F_{q^2}.
bool is_hermitian(const Field& F, const FrobeniusForm& f);

struct Degeneracy {
  bool degenerate = false;
  std::vector<FE> witness;  // v with A v = 0 and v^[q] in ker A^T
};
/// A form is degenerate iff it can be written in fewer variables after a
/// coordinate change, which happens iff some nonzero v has A v = 0 and
/// (v^[q])^T A = 0.
Degeneracy is_degenerate(const Field& F, const FrobeniusForm& f);

/// Restriction of a 4-variable form to a plane, as a 3-variable form on the
/// nullspace basis of the plane's covector.
FrobeniusForm restrict_to_plane(const Field& F, const FrobeniusForm& f, const Plane& h);

/// Classify a 3-variable Frobenius form by its section type.
SectionClass classify_section(const Field& F, const FrobeniusForm& f3);

}  // namespace extremal
