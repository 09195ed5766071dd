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
#include "nilspec/exactnum/linalg.hpp"

#include "nilspec/error.hpp"
#include "nilspec/exactnum/bareiss.hpp"

namespace nilspec::exact {

RatVector vec_add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVector vec_sub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector vec_scale(const Rat& s, const RatVector& a) {
  RatVector r = a;
  for (auto& x : r) x *= s;
  return r;
}

Rat vec_dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  Rat acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

bool vec_is_zero(const RatVector& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = Rat(1);
  return v;
}

Rref rref(RatMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && m(p, c).is_zero()) ++p;
    if (p == R) continue;
    m.swap_rows(r, p);
    const Rat inv = m(r, c).inv();
    for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(piv)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

Rat det(const RatMatrix& m) { return bareiss_det(m); }

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw DomainError("inverse: non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rat(1);
  }
  Rref f = rref(std::move(aug));
  if (f.rank() < n || (n && f.pivots[n - 1] != n - 1)) throw DomainError("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = f.m(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DomainError("solve: shape mismatch");
  const std::size_t R = a.rows(), C = a.cols();
  RatMatrix aug(R, C + 1);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
    aug(i, C) = b[i];
  }
  Rref f = rref(std::move(aug));
  if (!f.pivots.empty() && f.pivots.back() == C) return std::nullopt;
  RatVector x(C);
  for (std::size_t r = 0; r < f.rank(); ++r) x[f.pivots[r]] = f.m(r, C);
  return x;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  Rref f = rref(a);
  const std::size_t C = a.cols();
  std::vector<bool> is_piv(C, false);
  for (auto c : f.pivots) is_piv[c] = true;
  std::vector<RatVector> out;
  for (std::size_t fc = 0; fc < C; ++fc) {
    if (is_piv[fc]) continue;
    RatVector v(C);
    v[fc] = Rat(1);
    for (std::size_t r = 0; r < f.rank(); ++r) v[f.pivots[r]] = -f.m(r, fc);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

}  // namespace

Rat pfaffian(const RatMatrix& m) {
  if (!m.square()) throw DomainError("pfaffian: non-square matrix");
  const std::size_t n = m.rows();
  if (n % 2) throw DomainError("pfaffian: odd dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (m(i, j) != -m(j, i)) throw DomainError("pfaffian: matrix is not skew-symmetric");
  // Congruence a -> P a P^T by unit-triangular row/column operations and
  // transpositions reduces a to block form; Pf(P a P^T) = det(P) Pf(a).
  RatMatrix a = m;
  Rat pf(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && a(k, piv).is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k + 1) {
      for (std::size_t t = 0; t < n; ++t) std::swap(a(k + 1, t), a(piv, t));
      for (std::size_t t = 0; t < n; ++t) std::swap(a(t, k + 1), a(t, piv));
      pf = -pf;
    }
    const Rat p = a(k, k + 1);
    pf *= p;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a(k, i).is_zero()) continue;
      const Rat f = a(k, i) / p;
      for (std::size_t t = 0; t < n; ++t) a(i, t) -= f * a(k + 1, t);
      for (std::size_t t = 0; t < n; ++t) a(t, i) -= f * a(t, k + 1);
    }
  }
  return pf;
}

}  // namespace nilspec::exact
