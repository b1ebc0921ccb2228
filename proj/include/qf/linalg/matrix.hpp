#pragma once

#include "qf/errors.hpp"

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qf {

/// Dense row-major matrix over a coefficient ring F (a field, or the
/// quaternion algebra). F supplies zero/one/add/sub/neg/mul/eq/is_zero;
/// products keep operand order so non-commutative rings are fine.
template <class F>
class Matrix {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  explicit Matrix(F field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  static Matrix scalar(const F& field, std::size_t n, const Elem& s) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }
  /// Column matrix from a vector.
  static Matrix column(const F& field, const std::vector<Elem>& v) {
    Matrix m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  std::vector<Elem> row(std::size_t r) const {
    return std::vector<Elem>(data_.begin() + static_cast<long>(r * cols_),
                             data_.begin() + static_cast<long>((r + 1) * cols_));
  }
  std::vector<Elem> col(std::size_t c) const {
    std::vector<Elem> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const auto& x = (*this)(r, c);
        if (r == c ? !field_.eq(x, field_.one()) : !field_.is_zero(x)) return false;
      }
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  /// Columns [c0, c0+n).
  Matrix columns(std::size_t c0, std::size_t n) const {
    Matrix out(field_, rows_, n);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = (*this)(r, c0 + c);
    return out;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  /// [A | B]
  Matrix hstack(const Matrix& b) const {
    if (b.rows_ != rows_) throw DomainError("hstack: row mismatch");
    Matrix out(field_, rows_, cols_ + b.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, b);
    return out;
  }

  template <class Fn>
  auto map(const auto& target_field, Fn&& fn) const {
    using Target = std::decay_t<decltype(target_field)>;
    Matrix<Target> out(target_field, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data()[i] = fn(data_[i]);
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "+");
    Matrix out(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "-");
    Matrix out(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DomainError("matrix product shape mismatch " + a.shape() + " * " + b.shape());
    const F& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
    return out;
  }
  /// Left scalar multiple s * A.
  friend Matrix operator*(const Elem& s, const Matrix& a) {
    Matrix out(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.mul(s, a.data_[i]);
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!a.field_.eq(a.data_[i], b.data_[i])) return false;
    }
    return true;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw DomainError(std::string("matrix ") + op + " shape mismatch " + shape() + " vs " + b.shape());
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Block-diagonal assembly.
template <class F>
Matrix<F> block_diagonal(const F& field, const std::vector<Matrix<F>>& blocks) {
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<F> out(field, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace qf
