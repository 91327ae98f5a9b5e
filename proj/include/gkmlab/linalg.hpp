#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gkmlab/rational.hpp"

namespace gkm {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow to_sparse(const Vec& dense);
Vec to_dense(const SparseRow& row, int ncols);

/// Reduced row echelon form. rows[i] has leading 1 in column pivots[i]
/// and zeros in every other pivot column.
struct Echelon {
  int ncols = 0;
  std::vector<SparseRow> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
  std::vector<int> free_columns() const;
};

Echelon rref(std::vector<SparseRow> rows, int ncols);

struct Nullspace {
  int dim = 0;
  std::vector<Vec> basis;
};

Nullspace nullspace(const Echelon& e);
Nullspace nullspace(const std::vector<Vec>& rows, int ncols);

int rank_of(std::vector<SparseRow> rows, int ncols);
int rank_of(const std::vector<Vec>& vectors);

/// A solution of rows * x = rhs with every free variable set to 0, or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve(std::vector<SparseRow> rows, const Vec& rhs, int ncols);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const = default;

  Rational determinant() const;
  std::optional<Matrix> inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace gkm
