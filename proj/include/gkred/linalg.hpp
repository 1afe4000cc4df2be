#pragma once

#include <functional>
#include <vector>

#include "gkred/ratfunc.hpp"

namespace gkr {

template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), d_(size_t(r) * c) {}
  Mat(int r, int c, const T& fill) : r_(r), c_(c), d_(size_t(r) * c, fill) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return d_[size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return d_[size_t(i) * c_ + j]; }

 private:
  int r_, c_;
  std::vector<T> d_;
};

// Exact solution of A x = b over the rational-function field by fraction-free
// (Bareiss) elimination after clearing denominators.  Throws if A is singular
// as an identity; the message carries the vanishing determinant.
std::vector<RatFunc> ratfunc_solve(const Mat<RatFunc>& A,
                                   const std::vector<RatFunc>& b);

// Several right-hand sides at once (columns of B).
Mat<RatFunc> ratfunc_solve_multi(const Mat<RatFunc>& A, const Mat<RatFunc>& B);

Mat<RatFunc> ratfunc_inverse(const Mat<RatFunc>& A);

// Determinant by fraction-free elimination.
RatFunc ratfunc_det(const Mat<RatFunc>& A);

// Basis of the right kernel of A (rows = equations) over the rational-function
// field, by Gauss-Jordan elimination with exact pivot tests.
std::vector<std::vector<RatFunc>> ratfunc_kernel(const Mat<RatFunc>& A);

// Solves a possibly non-square, consistent system A x = b exactly; returns
// false if no exact solution exists (residual reported through *residual_row
// when non-null).
bool ratfunc_solve_consistent(const Mat<RatFunc>& A,
                              const std::vector<RatFunc>& b,
                              std::vector<RatFunc>* x);

// Plain Gaussian elimination over an abstract field K.  is_zero decides pivot
// viability (exact for Scalar, thresholded for floating types).
template <class K>
std::vector<K> field_solve(Mat<K> A, std::vector<K> b,
                           const std::function<bool(const K&)>& is_zero) {
  const int n = A.rows();
  GKR_REQUIRE(A.cols() == n && (int)b.size() == n, "field_solve: shape");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(A(r, col))) {
        piv = r;
        break;
      }
    GKR_REQUIRE(piv >= 0, "field_solve: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
      std::swap(b[piv], b[col]);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(A(r, col))) continue;
      K f = A(r, col) / A(col, col);
      for (int j = col; j < n; ++j) A(r, j) = A(r, j) - f * A(col, j);
      b[r] = b[r] - f * b[col];
    }
  }
  std::vector<K> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / A(i, i);
  return x;
}

}  // namespace gkr
