#pragma once

#include <vector>

#include "folichar/poly.hpp"

namespace folichar {

// Dense row-major matrix over any commutative ring type with +, -, *.
template <class T>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(int r, int c, const T& fill) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

  T& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

// Characteristic polynomial det(t I - M) of a square matrix by Berkowitz's
// division-free algorithm. Returns coefficients low degree first (monic).
template <class T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& m, const T& zero, const T& one) {
  int n = m.rows;
  // vect holds the coefficients of the char poly of the leading r x r block,
  // highest degree first.
  std::vector<T> vect{one};
  for (int r = 0; r < n; ++r) {
    // Toeplitz column for block r: [1, -a_rr, -R C, -R A C, ...]
    std::vector<T> col;
    col.reserve(r + 2);
    col.push_back(one);
    col.push_back(zero - m(r, r));
    std::vector<T> c(r, zero);  // column above the diagonal entry
    for (int i = 0; i < r; ++i) c[i] = m(i, r);
    for (int k = 0; k < r; ++k) {
      T s = zero;
      for (int i = 0; i < r; ++i) s = s + m(r, i) * c[i];
      col.push_back(zero - s);
      std::vector<T> next(r, zero);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) next[i] = next[i] + m(i, j) * c[j];
      c = std::move(next);
    }
    std::vector<T> out(r + 2, zero);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(vect.size()); ++j)
        out[i] = out[i] + col[i - j] * vect[j];
    vect = std::move(out);
  }
  return std::vector<T>(vect.rbegin(), vect.rend());
}

template <class T>
T determinant(const Matrix<T>& m, const T& zero, const T& one) {
  auto cp = berkowitz_charpoly(m, zero, one);
  // det M = (-1)^n cp(0)
  return (m.rows % 2 == 0) ? cp[0] : zero - cp[0];
}

using ScalarMatrix = Matrix<Scalar>;

// Row-reduced echelon form in place; returns pivot columns.
std::vector<int> rref(ScalarMatrix& m);
int rank(ScalarMatrix m);
// Basis of the right kernel, one vector per free column, with a 1 at that column.
std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& m);
// Inverse, or raises DivisionByZero when singular.
ScalarMatrix inverse(const ScalarMatrix& m);

}  // namespace folichar
