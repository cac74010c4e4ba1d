#pragma once

#include <map>
#include <vector>

#include "permfact/dense_matrix.hpp"
#include "permfact/exact.hpp"

namespace permfact {

/// Published eigenvalues of A_n for n = 3..10, transcribed in their printed
/// order. The n = 8 row lists 21 values although p(8) = 22.
inline const std::map<int, std::vector<long long>>& published_eigenvalue_table() {
  static const std::map<int, std::vector<long long>> table{
      {3, {-3, 0, 3}},
      {4, {-6, 6, -2, 2, 0}},
      {5, {-10, 10, -5, 5, -2, 0, 2}},
      {6, {-15, 15, -9, 9, -5, 5, 0, -3, -3, 3, 3}},
      {7, {-21, 21, -14, 14, -9, 9, -7, -6, 7, 6, -3, 3, -1, 1, 0}},
      {8, {-28, 28, -20, 20, -14, -12, 14, -10, -8, -7, 12, 10, 8, 7, -2, 2, 0, -4, -4, 4, 4}},
      {9, {-36, 36, -27, 27, -20, -18, 20, 18, -15, 15, -9, -8, 9, 8, -4, -3, 4,
           3, -1, 1, -12, -12, 12, 12, -6, -6, 6, 6, 0, 0}},
      {10, {45, -45, 35, -35, 27, 25, -27, -25, 21, -21, 18, 17, -18, -17, 13, 11, 10,
            9, 7, -13, -11, -10, -9, -15, 15, 15, -7, -15, 5, 0, 0, 5, 5, 3,
            3, 3, -5, -5, -5, -3, -3, -3}},
  };
  return table;
}

/// The published 5×5 matrix A_4, rows and columns ordered 1111, 211, 22, 31, 4.
inline const DenseMatrix<Int>& published_a4() {
  static const DenseMatrix<Int> a4 = [] {
    const long long rows[5][5]{{0, 6, 0, 0, 0}, {1, 0, 1, 4, 0}, {0, 2, 0, 0, 4}, {0, 3, 0, 0, 3}, {0, 0, 2, 4, 0}};
    DenseMatrix<Int> m(5, 5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = rows[r][c];
    return m;
  }();
  return a4;
}

}  // namespace permfact
