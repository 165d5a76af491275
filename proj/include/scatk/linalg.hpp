#pragma once

#include <cmath>
#include <vector>

#include "scatk/image.hpp"

namespace scatk {

/// Small dense row-major matrix; enough linear algebra for coefficient
/// matrices and ridge-regularized pseudo-inverses at desk scale.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline Mat mul(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw Error("mat mul: inner dimension mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const double v = A.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += v * B.at(k, j);
    }
  return C;
}

inline Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

/// Solves A X = B for symmetric positive definite A via Cholesky.
inline Mat chol_solve(Mat A, const Mat& B) {
  const int n = A.rows;
  if (A.cols != n || B.rows != n) throw Error("chol_solve: dimension mismatch");
  // in-place lower factor
  for (int j = 0; j < n; ++j) {
    double d = A.at(j, j);
    for (int k = 0; k < j; ++k) d -= A.at(j, k) * A.at(j, k);
    if (d <= 0.0) throw Error("chol_solve: matrix not positive definite");
    const double Ljj = std::sqrt(d);
    A.at(j, j) = Ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = A.at(i, j);
      for (int k = 0; k < j; ++k) s -= A.at(i, k) * A.at(j, k);
      A.at(i, j) = s / Ljj;
    }
  }
  Mat X = B;
  // forward: L Y = B
  for (int col = 0; col < X.cols; ++col) {
    for (int i = 0; i < n; ++i) {
      double s = X.at(i, col);
      for (int k = 0; k < i; ++k) s -= A.at(i, k) * X.at(k, col);
      X.at(i, col) = s / A.at(i, i);
    }
    // backward: L^T X = Y
    for (int i = n - 1; i >= 0; --i) {
      double s = X.at(i, col);
      for (int k = i + 1; k < n; ++k) s -= A.at(k, i) * X.at(k, col);
      X.at(i, col) = s / A.at(i, i);
    }
  }
  return X;
}

/// Min-norm right pseudo-inverse of a wide matrix: A^T (A A^T + ridge I)^{-1}.
inline Mat right_pinv(const Mat& A, double ridge) {
  Mat G = mul(A, transpose(A));
  for (int i = 0; i < G.rows; ++i) G.at(i, i) += ridge;
  return transpose(chol_solve(G, A));  // (G^{-1} A)^T = A^T G^{-1}
}

/// Least-squares left pseudo-inverse of a tall matrix: (A^T A + ridge I)^{-1} A^T.
inline Mat left_pinv(const Mat& A, double ridge) {
  Mat G = mul(transpose(A), A);
  for (int i = 0; i < G.rows; ++i) G.at(i, i) += ridge;
  return chol_solve(G, transpose(A));
}

}  // namespace scatk
