#pragma once

#include <vector>

#include "opk/sparse_matrix.hpp"

namespace opk {

// Diagonal of the Smith normal form: positive divisors with
// d_1 | d_2 | ... | d_rank.
struct SnfResult {
  int rank = 0;
  std::vector<Int> divisors;
};

// Row/column reduction with a unit-pivot / minimal-magnitude heuristic.
// Exact over Z; input is not modified.
SnfResult smith_normal_form(const SparseIntMatrix& m);

// Is v (sparse column, index -> coeff) an integral combination of the
// columns of m?  Decided via SNF with a tracked left transform.
bool in_column_span(const SparseIntMatrix& m, const std::map<int, Int>& v);

}  // namespace opk
