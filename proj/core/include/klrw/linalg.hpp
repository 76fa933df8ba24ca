#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "klrw/field.hpp"

namespace klrw {

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::value_type>>;

template <class F>
using Dense = std::vector<typename F::value_type>;

template <class F>
using DenseMatrix = std::vector<Dense<F>>;

// Row echelon form with unit pivots; rows are stored sparsely by pivot column.
template <class F>
class Echelon {
 public:
  using V = typename F::value_type;

  Echelon(F field, int ncols) : f_(std::move(field)), n_(ncols) {}

  int ncols() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const F& field() const { return f_; }

  Dense<F> reduce_dense(Dense<F> d) const {
    for (const auto& [p, row] : rows_) {
      if (f_.is_zero(d[p])) continue;
      V c = d[p];
      for (const auto& [j, x] : row) d[j] = f_.sub(d[j], f_.mul(c, x));
    }
    return d;
  }

  Dense<F> to_dense(const SparseVec<F>& v) const {
    Dense<F> d(n_, f_.zero());
    for (const auto& [j, x] : v) d[j] = f_.add(d[j], x);
    return d;
  }

  SparseVec<F> to_sparse(const Dense<F>& d) const {
    SparseVec<F> v;
    for (int j = 0; j < n_; ++j)
      if (!f_.is_zero(d[j])) v.emplace_back(j, d[j]);
    return v;
  }

  SparseVec<F> reduce(const SparseVec<F>& v) const { return to_sparse(reduce_dense(to_dense(v))); }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  // Returns true when v was independent of the stored rows.
  bool insert(const SparseVec<F>& v) { return insert_dense(to_dense(v)); }

  bool insert_dense(Dense<F> d) {
    d = reduce_dense(std::move(d));
    int p = 0;
    while (p < n_ && f_.is_zero(d[p])) ++p;
    if (p == n_) return false;
    V inv = f_.inv(d[p]);
    SparseVec<F> row;
    for (int j = p; j < n_; ++j)
      if (!f_.is_zero(d[j])) row.emplace_back(j, f_.mul(inv, d[j]));
    rows_.emplace(p, std::move(row));
    return true;
  }

  std::vector<int> pivots() const {
    std::vector<int> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
  }

  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
      if (!rows_.count(j)) out.push_back(j);
    return out;
  }

  const std::map<int, SparseVec<F>>& rows() const { return rows_; }

 private:
  F f_;
  int n_;
  std::map<int, SparseVec<F>> rows_;
};

// Basis of {x : M x = 0} for an m x n matrix M.
template <class F>
DenseMatrix<F> nullspace(const F& f, DenseMatrix<F> m, int ncols) {
  using V = typename F::value_type;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(m.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (!f.is_zero(m[i][c])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    V inv = f.inv(m[r][c]);
    for (int j = c; j < ncols; ++j) m[r][j] = f.mul(m[r][j], inv);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || f.is_zero(m[i][c])) continue;
      V k = m[i][c];
      for (int j = c; j < ncols; ++j) m[i][j] = f.sub(m[i][j], f.mul(k, m[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  DenseMatrix<F> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    Dense<F> x(ncols, f.zero());
    x[fc] = f.one();
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = f.neg(m[i][fc]);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class F>
int matrix_rank(const F& f, const DenseMatrix<F>& m, int ncols) {
  return ncols - static_cast<int>(nullspace(f, m, ncols).size());
}

}  // namespace klrw
