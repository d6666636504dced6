#pragma once

// Small dense matrices over exact rings and rational Gaussian elimination.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jstar/exactnum.hpp"

namespace jstar {

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T{})) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  template <class S>
  Matrix scaled(const S& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
      os << "]";
    }
    os << "]";
    return os.str();
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Converts a rational matrix into any ring constructible from Rational.
template <class R>
Matrix<R> convert(const Matrix<Rational>& m) {
  Matrix<R> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = R(m(i, j));
  return r;
}

/// Inverse by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  Matrix<Rational> a = m;
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
inline std::vector<Rational> leading_minors(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> minors;
  // Fraction-free would be faster; n is tiny.
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> a(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    Rational det(1);
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && a(pivot, col).is_zero()) ++pivot;
      if (pivot == k) { det = Rational(0); break; }
      if (pivot != col) {
        for (std::size_t j = 0; j < k; ++j) std::swap(a(pivot, j), a(col, j));
        det = -det;
      }
      det *= a(col, col);
      for (std::size_t r = col + 1; r < k; ++r) {
        if (a(r, col).is_zero()) continue;
        const Rational f = a(r, col) / a(col, col);
        for (std::size_t j = col; j < k; ++j) a(r, j) -= f * a(col, j);
      }
    }
    minors.push_back(det);
  }
  return minors;
}

/// Incremental row-echelon basis of a subspace of Q^dim. `reduce` returns
/// the coordinates of a vector with respect to the inserted vectors, or
/// nullopt when it lies outside their span.
class SpanBasis {
public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }

  /// Adds v if it is independent; returns whether it was added.
  bool insert(const std::vector<Rational>& v) {
    auto [residual, combo] = eliminate(v);
    std::size_t pivot = dim_;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!residual[i].is_zero()) { pivot = i; break; }
    if (pivot == dim_) return false;
    // Echelon row = v - sum combo_k * vectors_k, normalised at pivot.
    const Rational p = residual[pivot];
    for (auto& x : residual) x /= p;
    for (auto& x : combo) x = -x;
    combo.push_back(Rational(1));
    for (auto& x : combo) x /= p;
    rows_.push_back({pivot, std::move(residual), std::move(combo)});
    vectors_.push_back(v);
    for (auto& row : rows_) row.combo.resize(vectors_.size());
    return true;
  }

  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const {
    auto [residual, combo] = eliminate(v);
    for (const auto& x : residual)
      if (!x.is_zero()) return std::nullopt;
    return combo;
  }

private:
  struct Row {
    std::size_t pivot;
    std::vector<Rational> values;  // echelon row
    std::vector<Rational> combo;   // row as a combination of inserted vectors
  };

  std::pair<std::vector<Rational>, std::vector<Rational>> eliminate(const std::vector<Rational>& v) const {
    std::vector<Rational> residual = v;
    std::vector<Rational> combo(vectors_.size());
    for (const auto& row : rows_) {
      const Rational f = residual[row.pivot];
      if (f.is_zero()) continue;
      for (std::size_t i = 0; i < dim_; ++i) residual[i] -= f * row.values[i];
      for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] += f * row.combo[k];
    }
    return {std::move(residual), std::move(combo)};
  }

  std::size_t dim_;
  std::vector<std::vector<Rational>> vectors_;
  std::vector<Row> rows_;
};

} // namespace jstar
