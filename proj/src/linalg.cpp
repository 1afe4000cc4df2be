#include "gkred/linalg.hpp"

#include <algorithm>

namespace gkr {

namespace {

const VarContext* mat_ctx(const Mat<RatFunc>& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (A(i, j).ctx()) return A(i, j).ctx();
  return nullptr;
}

// Clears denominators row by row: returns the polynomial matrix [A|B].
Mat<Poly> clear_denominators(const Mat<RatFunc>& A, const Mat<RatFunc>& B,
                             const VarContext* ctx) {
  Mat<Poly> M(A.rows(), A.cols() + B.cols(), Poly(ctx));
  for (int i = 0; i < A.rows(); ++i) {
    std::vector<Poly> dens;
    auto push = [&](const RatFunc& r) {
      if (r.den().is_constant()) return;
      for (const Poly& d : dens)
        if (d == r.den()) return;
      dens.push_back(r.den());
    };
    for (int j = 0; j < A.cols(); ++j) push(A(i, j));
    for (int j = 0; j < B.cols(); ++j) push(B(i, j));
    Poly rowmul(ctx, Scalar(1));
    for (const Poly& d : dens) rowmul *= d;
    auto scaled_entry = [&](const RatFunc& r) {
      RatFunc s = r * RatFunc(rowmul);
      GKR_REQUIRE(s.is_polynomial(), "denominator clearing failed");
      return s.as_poly();
    };
    for (int j = 0; j < A.cols(); ++j) M(i, j) = scaled_entry(A(i, j));
    for (int j = 0; j < B.cols(); ++j)
      M(i, A.cols() + j) = scaled_entry(B(i, j));
  }
  return M;
}

// Fraction-free forward elimination (Bareiss).  Returns the permutation sign
// and leaves M upper-triangular on the first ncols columns; det of the square
// part is sign * M(n-1, n-1) after elimination.
int bareiss_forward(Mat<Poly>& M, int ncols, const VarContext* ctx) {
  int sign = 1;
  Poly prev(ctx, Scalar(1));
  const int n = std::min(M.rows(), ncols);
  for (int k = 0; k < n; ++k) {
    // pivot: shortest nonzero polynomial in column k at/below row k
    int piv = -1;
    size_t best = ~size_t(0);
    for (int r = k; r < M.rows(); ++r)
      if (!M(r, k).is_zero() && M(r, k).terms().size() < best) {
        best = M(r, k).terms().size();
        piv = r;
      }
    if (piv < 0) return 0;  // singular
    if (piv != k) {
      for (int j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(k, j));
      sign = -sign;
    }
    for (int r = k + 1; r < M.rows(); ++r) {
      for (int j = k + 1; j < M.cols(); ++j)
        M(r, j) = (M(k, k) * M(r, j) - M(r, k) * M(k, j)).exact_div(prev);
      M(r, k) = Poly(ctx);
    }
    prev = M(k, k);
  }
  return sign;
}

}  // namespace

Mat<RatFunc> ratfunc_solve_multi(const Mat<RatFunc>& A, const Mat<RatFunc>& B) {
  const int n = A.rows();
  GKR_REQUIRE(A.cols() == n && B.rows() == n, "ratfunc_solve: shape mismatch");
  const VarContext* ctx = mat_ctx(A);
  GKR_REQUIRE(ctx, "ratfunc_solve: empty matrix");
  Mat<Poly> M = clear_denominators(A, B, ctx);
  int sign = bareiss_forward(M, n, ctx);
  GKR_REQUIRE(sign != 0,
              "ratfunc_solve: singular matrix (determinant identically zero)");
  Mat<RatFunc> X(n, B.cols());
  for (int c = 0; c < B.cols(); ++c) {
    for (int i = n - 1; i >= 0; --i) {
      RatFunc acc = RatFunc(M(i, n + c));
      for (int j = i + 1; j < n; ++j) acc -= RatFunc(M(i, j)) * X(j, c);
      X(i, c) = acc / RatFunc(M(i, i));
    }
  }
  return X;
}

std::vector<RatFunc> ratfunc_solve(const Mat<RatFunc>& A,
                                   const std::vector<RatFunc>& b) {
  Mat<RatFunc> B((int)b.size(), 1);
  for (int i = 0; i < (int)b.size(); ++i) B(i, 0) = b[i];
  Mat<RatFunc> X = ratfunc_solve_multi(A, B);
  std::vector<RatFunc> x(A.rows());
  for (int i = 0; i < A.rows(); ++i) x[i] = X(i, 0);
  return x;
}

Mat<RatFunc> ratfunc_inverse(const Mat<RatFunc>& A) {
  const int n = A.rows();
  const VarContext* ctx = mat_ctx(A);
  Mat<RatFunc> I(n, n, RatFunc::zero(ctx));
  for (int i = 0; i < n; ++i) I(i, i) = RatFunc::constant(ctx, Scalar(1));
  return ratfunc_solve_multi(A, I);
}

RatFunc ratfunc_det(const Mat<RatFunc>& A) {
  const int n = A.rows();
  GKR_REQUIRE(A.cols() == n, "determinant of non-square matrix");
  const VarContext* ctx = mat_ctx(A);
  if (!ctx) return RatFunc();
  Mat<RatFunc> B(n, 0);
  Mat<Poly> M = clear_denominators(A, B, ctx);
  // row multipliers change det; track them
  RatFunc denom = RatFunc::constant(ctx, Scalar(1));
  for (int i = 0; i < n; ++i) {
    // recover the multiplier: M(i,j) = A(i,j) * m_i, use any nonzero A entry
    for (int j = 0; j < n; ++j)
      if (!A(i, j).is_zero()) {
        denom *= RatFunc(M(i, j)) / A(i, j);
        break;
      }
  }
  int sign = bareiss_forward(M, n, ctx);
  if (sign == 0) return RatFunc::zero(ctx);
  RatFunc det = RatFunc(M(n - 1, n - 1)) / denom;
  return sign < 0 ? -det : det;
}

std::vector<std::vector<RatFunc>> ratfunc_kernel(const Mat<RatFunc>& A) {
  const VarContext* ctx = mat_ctx(A);
  const int rows = A.rows(), cols = A.cols();
  Mat<RatFunc> M = A;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!M(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(M(piv, j), M(rank, j));
    RatFunc inv = M(rank, c).inverse();
    for (int j = 0; j < cols; ++j) M(rank, j) = M(rank, j) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || M(r, c).is_zero()) continue;
      RatFunc f = M(r, c);
      for (int j = 0; j < cols; ++j) M(r, j) = M(r, j) - f * M(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<RatFunc>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<RatFunc> v(cols, RatFunc::zero(ctx));
    v[free] = RatFunc::constant(ctx, Scalar(1));
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -M(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool ratfunc_solve_consistent(const Mat<RatFunc>& A,
                              const std::vector<RatFunc>& b,
                              std::vector<RatFunc>* x) {
  const VarContext* ctx = mat_ctx(A);
  const int rows = A.rows(), cols = A.cols();
  Mat<RatFunc> M(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) M(i, j) = A(i, j);
    M(i, cols) = b[i];
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!M(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j <= cols; ++j) std::swap(M(piv, j), M(rank, j));
    RatFunc inv = M(rank, c).inverse();
    for (int j = 0; j <= cols; ++j) M(rank, j) = M(rank, j) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || M(r, c).is_zero()) continue;
      RatFunc f = M(r, c);
      for (int j = 0; j <= cols; ++j) M(r, j) = M(r, j) - f * M(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  // consistency: rows with zero coefficients must have zero rhs
  for (int r = rank; r < rows; ++r)
    if (!M(r, cols).is_zero()) return false;
  x->assign(cols, RatFunc::zero(ctx));
  for (int r = 0; r < rank; ++r) (*x)[pivot_col[r]] = M(r, cols);
  return true;
}

}  // namespace gkr
