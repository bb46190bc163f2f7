#pragma once

#include <map>
#include <utility>
#include <vector>

#include "opk/ints.hpp"

namespace opk {

// Sparse integer matrix in triplet form, exact arithmetic throughout.
// Row/column indices are 0-based.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  static SparseIntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, Int v);
  void add_to(int r, int c, const Int& v);
  Int get(int r, int c) const;

  bool is_zero() const { return a_.empty(); }
  size_t nnz() const { return a_.size(); }

  // sorted (row, col) -> value
  const std::map<std::pair<int, int>, Int>& entries() const { return a_; }

  SparseIntMatrix transposed() const;

  bool operator==(const SparseIntMatrix& o) const;

  // column vector apply: (this * v), v sparse as index -> coeff
  std::map<int, Int> apply(const std::map<int, Int>& v) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a,
                                   const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a,
                                   const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a,
                                   const SparseIntMatrix& b);
  SparseIntMatrix scaled(const Int& k) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Int> a_;
};

}  // namespace opk
