/*
 * Copyright 2026 The nilspec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "nilspec/error.hpp"
#include "nilspec/exactnum/quadext.hpp"
#include "nilspec/exactnum/rat.hpp"

namespace nilspec::exact {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : r_(rows), c_(cols), a_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : r_(rows), c_(cols), a_(std::move(data)) {
    if (a_.size() != r_ * c_) throw DomainError("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
      if (row.size() != c_) throw DomainError("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DomainError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  Matrix transpose() const {
    std::vector<T> d;
    d.reserve(a_.size());
    for (std::size_t j = 0; j < c_; ++j)
      for (std::size_t i = 0; i < r_; ++i) d.push_back((*this)(i, j));
    return Matrix(c_, r_, std::move(d));
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> d;
    d.reserve(a_.size());
    for (const auto& e : a_) d.push_back(f(e));
    return Matrix<U>(r_, c_, std::move(d));
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] += y.a_[k];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] -= y.a_[k];
    return z;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw DomainError("matrix product shape mismatch");
    Matrix z;
    z.r_ = x.r_;
    z.c_ = y.c_;
    if (x.r_ && y.c_) z.a_.assign(x.r_ * y.c_, zero_of(x.a_, y.a_));
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        if (is_zero(x(i, k))) continue;
        for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) throw DomainError("matrix-vector shape mismatch");
    std::vector<T> out;
    out.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      T acc = zero_of(a_, v);
      for (std::size_t j = 0; j < c_; ++j) acc += (*this)(i, j) * v[j];
      out.push_back(std::move(acc));
    }
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

 private:
  static T zero_of(const std::vector<T>& x, const std::vector<T>& y) {
    if (!x.empty()) return zero_like(x[0]);
    if (!y.empty()) return zero_like(y[0]);
    if constexpr (std::is_default_constructible_v<T>) {
      return T();
    } else {
      throw DomainError("cannot infer ring zero of an empty operand");
    }
  }
  void check_same_shape(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<UniPoly>;
using ExtMatrix = Matrix<QuadExtElem>;
using RatVector = std::vector<Rat>;

}  // namespace nilspec::exact
