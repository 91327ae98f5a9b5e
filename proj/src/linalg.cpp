#include "gkmlab/linalg.hpp"

#include <algorithm>
#include <map>

#include "gkmlab/error.hpp"

namespace gkm {

SparseRow to_sparse(const Vec& dense) {
  SparseRow row;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) row.emplace_back(static_cast<int>(i), dense[i]);
  return row;
}

Vec to_dense(const SparseRow& row, int ncols) {
  Vec out(ncols);
  for (const auto& [c, v] : row) out[c] = v;
  return out;
}

namespace {

// a - f*b
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_lead(SparseRow& row) {
  Rational inv = 1 / row.front().second;
  for (auto& [c, v] : row) v *= inv;
}

}  // namespace

std::vector<int> Echelon::free_columns() const {
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots)
    if (p < ncols) is_pivot[p] = true;
  std::vector<int> out;
  for (int c = 0; c < ncols; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

Echelon rref(std::vector<SparseRow> rows, int ncols) {
  // Forward pass: rows bucketed by leading column, shortest row kept as pivot.
  std::map<int, SparseRow> pivot_rows;
  std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  for (auto& r : rows) {
    SparseRow row = std::move(r);
    while (!row.empty()) {
      auto it = pivot_rows.find(row.front().first);
      if (it == pivot_rows.end()) {
        normalize_lead(row);
        pivot_rows.emplace(row.front().first, std::move(row));
        break;
      }
      if (row.size() < it->second.size()) {
        normalize_lead(row);
        std::swap(row, it->second);
      }
      Rational f = row.front().second;
      row = axpy(row, f, it->second);
    }
  }
  // Back substitution from the last pivot upwards.
  Echelon e;
  e.ncols = ncols;
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    SparseRow& row = it->second;
    for (std::size_t k = 1; k < row.size();) {
      auto pit = pivot_rows.find(row[k].first);
      if (pit == pivot_rows.end() || pit->first == it->first) {
        ++k;
        continue;
      }
      int col = row[k].first;
      Rational f = row[k].second;
      row = axpy(row, f, pit->second);
      k = static_cast<std::size_t>(
          std::lower_bound(row.begin(), row.end(), col, [](const auto& p, int c) { return p.first < c; }) -
          row.begin());
    }
  }
  for (auto& [p, row] : pivot_rows) {
    e.pivots.push_back(p);
    e.rows.push_back(std::move(row));
  }
  return e;
}

Nullspace nullspace(const Echelon& e) {
  Nullspace ns;
  auto free = e.free_columns();
  std::vector<int> where(e.ncols, -1);
  for (std::size_t i = 0; i < free.size(); ++i) where[free[i]] = static_cast<int>(i);
  ns.basis.assign(free.size(), Vec(e.ncols));
  for (std::size_t i = 0; i < free.size(); ++i) ns.basis[i][free[i]] = 1;
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (const auto& [c, v] : e.rows[r])
      if (c != e.pivots[r]) ns.basis[where[c]][e.pivots[r]] = -v;
  ns.dim = static_cast<int>(free.size());
  return ns;
}

Nullspace nullspace(const std::vector<Vec>& rows, int ncols) {
  std::vector<SparseRow> sparse;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ncols) throw PreconditionError("nullspace: ragged matrix");
    sparse.push_back(to_sparse(r));
  }
  return nullspace(rref(std::move(sparse), ncols));
}

int rank_of(std::vector<SparseRow> rows, int ncols) { return rref(std::move(rows), ncols).rank(); }

int rank_of(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<SparseRow> rows;
  for (const auto& v : vectors) rows.push_back(to_sparse(v));
  return rank_of(std::move(rows), static_cast<int>(vectors.front().size()));
}

std::optional<Vec> solve(std::vector<SparseRow> rows, const Vec& rhs, int ncols) {
  if (rows.size() != rhs.size()) throw PreconditionError("solve: rhs length mismatch");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (sgn(rhs[i]) != 0) rows[i].emplace_back(ncols, rhs[i]);
  Echelon e = rref(std::move(rows), ncols + 1);
  Vec x(ncols);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == ncols) return std::nullopt;
    const auto& row = e.rows[r];
    if (row.back().first == ncols) x[e.pivots[r]] = row.back().second;
  }
  return x;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ContextMismatch("matrix product: shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
  Matrix a = *this;
  Rational det = 1;
  for (int c = 0; c < cols_; ++c) {
    int piv = -1;
    for (int r = c; r < rows_; ++r)
      if (sgn(a.at(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    for (int r = c + 1; r < rows_; ++r) {
      if (sgn(a.at(r, c)) == 0) continue;
      Rational f = a.at(r, c) / a.at(c, c);
      for (int j = c; j < cols_; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
  int n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (sgn(a.at(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Rational s = 1 / a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) *= s;
      inv.at(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a.at(r, c)) == 0) continue;
      Rational f = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

}  // namespace gkm
