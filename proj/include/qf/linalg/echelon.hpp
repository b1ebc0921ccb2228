#pragma once

#include "qf/linalg/matrix.hpp"

#include <optional>
#include <vector>

namespace qf {

template <class F>
struct Echelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination (fields only).
template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(inv, m(row, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Basis of {x : m x = 0}; one vector per free column with that entry set to 1.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel(const Matrix<F>& m) {
  const F& f = m.field();
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.rref(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  auto e = row_reduce(m.hstack(Matrix<F>::identity(m.field(), n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.columns(n, n);
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Some x with a x = b, if any.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  const F& f = a.field();
  auto e = row_reduce(a.hstack(b));
  Matrix<F> x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.rref(r, a.cols() + c);
  }
  return x;
}

/// Basis (as columns) of the column span of m, in RREF-of-transpose order.
template <class F>
Matrix<F> column_space(const Matrix<F>& m) {
  if (m.is_identity()) return m;
  auto e = row_reduce(m.transpose());
  return e.rref.block(0, 0, e.rank(), m.rows()).transpose();
}

/// Whether every column of b lies in the column span of a.
template <class F>
bool columns_in_span(const Matrix<F>& a, const Matrix<F>& b) {
  if (b.cols() == 0) return true;
  if (a.is_identity()) return true;
  return rank(a.hstack(b)) == rank(a);
}

/// Columns of `basis` (assumed independent) followed by standard basis
/// vectors chosen greedily in index order, giving an invertible matrix.
template <class F>
Matrix<F> extend_to_basis(const Matrix<F>& basis) {
  const F& f = basis.field();
  const std::size_t n = basis.rows();
  Matrix<F> current = basis;
  std::size_t r = rank(current);
  for (std::size_t i = 0; i < n && current.cols() < n; ++i) {
    Matrix<F> e(f, n, 1);
    e(i, 0) = f.one();
    Matrix<F> trial = current.hstack(e);
    std::size_t tr = rank(trial);
    if (tr > r) {
      current = std::move(trial);
      r = tr;
    }
  }
  return current;
}

}  // namespace qf
