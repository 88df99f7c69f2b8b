#pragma once

#include <vector>

#include "extremal/gf.hpp"

namespace extremal {

/// Dense row-major matrix over F_{q^2}; sized for the small systems this
/// project solves (never more than a dozen rows or columns).
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<FE> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  FE& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  FE at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// In-place reduced row-echelon form; returns the rank.
int rref(const Field& F, Mat& m);

int rank(const Field& F, Mat m);

/// Basis of the right nullspace {v : m v = 0}, one vector per row.
Mat nullspace(const Field& F, const Mat& m);

/// Matrix product.
Mat matmul(const Field& F, const Mat& x, const Mat& y);

Mat transpose(const Mat& m);

/// Entrywise q-th power.
Mat frobq(const Field& F, Mat m);

/// Inverse of a square matrix; throws std::domain_error if singular.
Mat inverse(const Field& F, const Mat& m);

FE det(const Field& F, Mat m);

}  // namespace extremal
