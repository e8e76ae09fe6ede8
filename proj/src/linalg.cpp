#include "folichar/linalg.hpp"

#include "folichar/error.hpp"

namespace folichar {

std::vector<int> rref(ScalarMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m(row, c), m(pivot, c));
    Scalar inv = m(row, col).inverse();
    for (int c = col; c < m.cols; ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar k = m(r, col);
      for (int c = col; c < m.cols; ++c)
        if (!m(row, c).is_zero()) m(r, c) -= k * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(ScalarMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& input) {
  ScalarMatrix m = input;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols);
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (m.rows != m.cols) raise(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
  int n = m.rows;
  ScalarMatrix aug(n, 2 * n, Scalar());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    raise(ErrorKind::DivisionByZero, "matrix is singular");
  ScalarMatrix inv(n, n, Scalar());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace folichar
