#pragma once

#include <span>
#include <vector>

#include "dmt/integer.hpp"

namespace dmt {

class DenseIntMatrix {
 public:
  DenseIntMatrix() = default;
  DenseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static DenseIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Integer operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  // row_r -= f * row_s
  void row_axpy(std::size_t r, std::size_t s, Integer f);
  void swap_rows(std::size_t r, std::size_t s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

// exact determinant by Euclidean row reduction
Integer determinant(DenseIntMatrix m);

// Solves B x = b for a square integer matrix with det = +-1.
class UnimodularSolver {
 public:
  explicit UnimodularSolver(DenseIntMatrix b);  // DomainError if det != +-1
  Integer determinant() const { return det_; }
  std::vector<Integer> solve(std::span<const Integer> rhs) const;
  std::size_t size() const { return t_.rows(); }

 private:
  DenseIntMatrix t_;  // upper triangular, U B = T
  DenseIntMatrix u_;
  Integer det_ = 0;
};

}  // namespace dmt
