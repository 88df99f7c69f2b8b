#include "extremal/linalg.hpp"

#include <stdexcept>

namespace extremal {

int rref(const Field& F, Mat& m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    FE s = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      FE f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

int rank(const Field& F, Mat m) { return rref(F, m); }

Mat nullspace(const Field& F, const Mat& min) {
  Mat m = min;
  int r = rref(F, m);
  std::vector<int> pivot_col(r, -1);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0, c = 0; i < r; ++i) {
    while (c < m.cols && m.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Mat basis(m.cols - r, m.cols);
  int bi = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    basis.at(bi, c) = F.one();
    for (int i = 0; i < r; ++i)
      basis.at(bi, pivot_col[i]) = F.neg(m.at(i, c));
    ++bi;
  }
  return basis;
}

Mat matmul(const Field& F, const Mat& x, const Mat& y) {
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      FE v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, y.at(k, j)));
    }
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Mat frobq(const Field& F, Mat m) {
  for (FE& v : m.a) v = F.frobq(v);
  return m;
}

Mat inverse(const Field& F, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = F.one();
  }
  if (rref(F, aug) != n) throw std::domain_error("singular matrix");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

FE det(const Field& F, Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows;
  FE d = F.one();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) return F.zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(c, c));
    FE s = F.inv(m.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      FE f = F.mul(m.at(i, c), s);
      for (int j = c; j < n; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(c, j)));
    }
  }
  return d;
}

}  // namespace extremal
