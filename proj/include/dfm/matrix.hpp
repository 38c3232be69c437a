#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dfm/errors.hpp"
#include "dfm/field.hpp"

namespace dfm {

/// Dense row-major matrix over a field.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) : rows_(init.size()) {
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix diagonal(const std::vector<F>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix column(const std::vector<F>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<F>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::is_zero_of(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<F> col(std::size_t j) const {
    std::vector<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  F trace() const {
    F s{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s = s + (*this)(i, i);
    return s;
  }

  /// Apply f entrywise.
  template <class Fn>
  auto map(Fn&& fn) const {
    using G = decltype(fn(std::declval<const F&>()));
    Matrix<G> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "sub");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("mul " + a.shape() + " by " + b.shape());
    }
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (detail::is_zero_of(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (detail::is_zero_of(bkj)) continue;
          r(i, j) = r(i, j) + aik * bkj;
        }
      }
    }
    return r;
  }
  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = s * x;
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch(std::string(op) + " " + shape() + " and " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Field F>
Matrix<F> scale(const Matrix<F>& a, const F& s) {
  return s * a;
}

/// AB - BA.
template <Field F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square()) {
    throw DimensionMismatch("commutator of " + a.shape() + " and " + b.shape());
  }
  return a * b - b * a;
}

/// Entrywise derivative M'.
template <DifferentialField F>
Matrix<F> derive(const Matrix<F>& m) {
  return m.map([](const F& x) { return derive(x); });
}

template <DifferentialField F>
bool is_constant(const Matrix<F>& m) {
  for (const auto& x : m.data())
    if (!is_constant(x)) return false;
  return true;
}

/// diag(blocks...)
template <Field F>
Matrix<F> direct_sum(const std::vector<Matrix<F>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix<F> m(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    m.set_block(at, at, b);
    at += b.rows();
  }
  return m;
}

template <Field F>
Matrix<F> power(const Matrix<F>& m, unsigned e) {
  Matrix<F> r = Matrix<F>::identity(m.rows());
  for (unsigned k = 0; k < e; ++k) r = r * m;
  return r;
}

/// u v^T for column vectors u, v.
template <Field F>
Matrix<F> outer(const std::vector<F>& u, const std::vector<F>& v) {
  Matrix<F> m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

template <Field F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("mat_vec");
  std::vector<F> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] = r[i] + a(i, j) * v[j];
  return r;
}

template <Field F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot");
  F s{};
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

}  // namespace dfm
