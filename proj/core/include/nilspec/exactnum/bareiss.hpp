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
#include <vector>

#include "nilspec/error.hpp"
#include "nilspec/exactnum/matrix.hpp"

namespace nilspec::exact {

/// Fraction-free determinant over an integral domain (Bareiss).  Every
/// intermediate division is exact, so no fractions are ever formed.
template <class T>
T bareiss_det(Matrix<T> m) {
  if (!m.square()) throw DomainError("bareiss_det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) {
    if constexpr (std::is_default_constructible_v<T>) return T(1);
    else throw DomainError("bareiss_det: empty matrix has no ring context");
  }
  T prev = one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return zero_like(m(0, 0));
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divexact(t, prev);
      }
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Result of fraction-free Gauss-Jordan elimination.  After elimination
/// every pivot entry equals `pivot`, pivot columns are otherwise zero, so the
/// matrix reads  pivot * I  on the pivot columns.
template <class T>
struct FractionFreeForm {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[r] = column of row r's pivot
  T pivot;
};

template <class T>
FractionFreeForm<T> fraction_free_gauss_jordan(Matrix<T> m, const T& one) {
  const std::size_t R = m.rows(), C = m.cols();
  T prev = one;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c))) ++p;
    if (p == R) continue;
    m.swap_rows(r, p);
    const T pv = m(r, c);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      const T f = m(i, c);
      for (std::size_t j = 0; j < C; ++j) {
        if (j == c) continue;
        T t = pv * m(i, j) - f * m(r, j);
        m(i, j) = divexact(t, prev);
      }
      m(i, c) = zero_like(pv);
    }
    prev = pv;
    piv.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(piv), std::move(prev)};
}

/// Nullity and a kernel basis over the fraction field; kernel vectors have
/// entries in the ring itself.
template <class T>
struct KernelResult {
  std::size_t nullity = 0;
  std::vector<std::vector<T>> basis;
};

template <class T>
KernelResult<T> fraction_free_kernel(const Matrix<T>& m, const T& one) {
  auto ff = fraction_free_gauss_jordan(m, one);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto c : ff.pivot_cols) is_pivot[c] = true;
  KernelResult<T> out;
  const T zero = zero_like(one);
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(C, zero);
    v[f] = ff.pivot;
    for (std::size_t r = 0; r < ff.pivot_cols.size(); ++r)
      v[ff.pivot_cols[r]] = -ff.reduced(r, f);
    out.basis.push_back(std::move(v));
  }
  out.nullity = out.basis.size();
  return out;
}

/// Laplace expansion along the first row; exponential, for cross-checks only.
template <class T>
T cofactor_det(const Matrix<T>& m, const T& one) {
  if (!m.square()) throw DomainError("cofactor_det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  T acc = zero_like(one);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    std::vector<T> d;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) d.push_back(m(i, k));
    T term = m(0, j) * cofactor_det(Matrix<T>(n - 1, n - 1, std::move(d)), one);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace nilspec::exact
