#pragma once

#include "artifact/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace artifact {

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by index, no zeros

SparseVec make_sparse(const QVec& dense);

// Incremental row basis over Q. Rows are reduced against earlier pivots in
// insertion order, so the pivot rows stay upper triangular after a column
// permutation.
class RowBasis {
 public:
  explicit RowBasis(int ncols);

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  // Returns true when the row was independent and has been added.
  bool add(const SparseVec& row);
  bool contains(const SparseVec& row) const;

  // Product of pivot entries times the sign of the pivot-column permutation.
  // Meaningful only after ncols independent rows were added.
  Rational determinant() const;

 private:
  std::vector<Rational> reduce(const SparseVec& row) const;

  int ncols_;
  std::vector<int> pivots_;  // pivot column per stored row
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_of_col_;
};

int rank(const std::vector<SparseVec>& rows, int ncols);
Rational determinant(const std::vector<SparseVec>& rows, int n);
Rational determinant(const std::vector<QVec>& m);

// Unique solution of the square system A x = b, or nullopt if A is singular.
std::optional<QVec> solve(const std::vector<QVec>& a, const QVec& b);

// Fraction-free determinant of an integer matrix.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace artifact
