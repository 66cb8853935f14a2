#include "dmt/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace dmt {

DenseIntMatrix DenseIntMatrix::identity(std::size_t n) {
  DenseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void DenseIntMatrix::row_axpy(std::size_t r, std::size_t s, Integer f) {
  if (f == 0) return;
  Integer* x = &a_[r * cols_];
  const Integer* y = &a_[s * cols_];
  for (std::size_t c = 0; c < cols_; ++c)
    if (y[c] != 0) x[c] = checked_sub(x[c], checked_mul(f, y[c]));
}

void DenseIntMatrix::swap_rows(std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[r * cols_ + c], a_[s * cols_ + c]);
}

namespace {

// Reduces m to upper triangular form with unimodular row operations, mirrored
// on `track` when given. Returns the sign of the row permutation.
int triangularize(DenseIntMatrix& m, DenseIntMatrix* track) {
  const std::size_t n = m.rows();
  int sign = 1;
  for (std::size_t c = 0; c < n && c < m.cols(); ++c) {
    while (true) {
      // smallest nonzero |entry| at or below the diagonal becomes the pivot
      std::size_t piv = n;
      for (std::size_t r = c; r < n; ++r)
        if (m(r, c) != 0 && (piv == n || std::llabs(m(r, c)) < std::llabs(m(piv, c)))) piv = r;
      if (piv == n) break;
      if (piv != c) {
        m.swap_rows(piv, c);
        if (track) track->swap_rows(piv, c);
        sign = -sign;
      }
      bool done = true;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (m(r, c) == 0) continue;
        Integer f = m(r, c) / m(c, c);
        m.row_axpy(r, c, f);
        if (track) track->row_axpy(r, c, f);
        if (m(r, c) != 0) done = false;
      }
      if (done) break;
    }
  }
  return sign;
}

}  // namespace

Integer determinant(DenseIntMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  Integer det = triangularize(m, nullptr);
  for (std::size_t i = 0; i < m.rows(); ++i) det = checked_mul(det, m(i, i));
  return det;
}

UnimodularSolver::UnimodularSolver(DenseIntMatrix b) : t_(std::move(b)) {
  if (t_.rows() != t_.cols()) throw DomainError("basis matrix is not square");
  u_ = DenseIntMatrix::identity(t_.rows());
  det_ = triangularize(t_, &u_);
  for (std::size_t i = 0; i < t_.rows(); ++i) det_ = checked_mul(det_, t_(i, i));
  if (det_ != 1 && det_ != -1)
    throw DomainError("basis is not invertible over the integers (det " + std::to_string(det_) + ")");
}

std::vector<Integer> UnimodularSolver::solve(std::span<const Integer> rhs) const {
  const std::size_t n = t_.rows();
  if (rhs.size() != n) throw DomainError("right-hand side has the wrong length");
  std::vector<Integer> y(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (u_(r, c) != 0 && rhs[c] != 0) s = checked_add(s, checked_mul(u_(r, c), rhs[c]));
    y[r] = s;
  }
  std::vector<Integer> x(n, 0);
  for (std::size_t r = n; r-- > 0;) {
    Integer s = y[r];
    for (std::size_t c = r + 1; c < n; ++c)
      if (t_(r, c) != 0 && x[c] != 0) s = checked_sub(s, checked_mul(t_(r, c), x[c]));
    x[r] = t_(r, r) == 1 ? s : checked_neg(s);
  }
  return x;
}

}  // namespace dmt
