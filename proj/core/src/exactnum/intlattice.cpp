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
#include "nilspec/exactnum/intlattice.hpp"

#include "nilspec/error.hpp"
#include "nilspec/exactnum/linalg.hpp"

namespace nilspec::exact {

namespace {

void row_combine(IntMatrix& m, std::size_t r, std::size_t i, const mpz_class& x,
                 const mpz_class& y, const mpz_class& a, const mpz_class& b) {
  // [row_r; row_i] <- [x y; -b a] [row_r; row_i], determinant x*a + y*b = 1
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_class pr = m(r, j), pi = m(i, j);
    m(r, j) = x * pr + y * pi;
    m(i, j) = a * pi - b * pr;
  }
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class lcm_of_denominators(const RatMatrix& m) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
  return l;
}

IntMatrix to_integer(const RatMatrix& m, const mpz_class& scale) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(scale, 1);
      z(i, j) = v.num();
    }
  return z;
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace

HermiteForm hnf(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t R = m.rows(), C = m.cols();
  IntMatrix u = int_identity(R);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    for (std::size_t i = r + 1; i < R; ++i) {
      if (m(i, c) == 0) continue;
      mpz_class g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m(r, c).get_mpz_t(),
                 m(i, c).get_mpz_t());
      mpz_class a = m(r, c) / g, b = m(i, c) / g;
      row_combine(m, r, i, x, y, a, b);
      row_combine(u, r, i, x, y, a, b);
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      negate_row(m, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(m(i, c), m(r, c));
      row_axpy(m, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return {std::move(m), std::move(u), r};
}

SmithForm snf(const IntMatrix& input) {
  IntMatrix d = input;
  const std::size_t R = d.rows(), C = d.cols();
  IntMatrix u = int_identity(R), v = int_identity(C);
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      // bring the smallest nonzero entry of the trailing block to (t, t)
      std::size_t bi = R, bj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (d(i, j) != 0 && (bi == R || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == R) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      swap_cols(d, t, bj);
      swap_cols(v, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        mpz_class q = floor_div(d(i, t), d(t, t));
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        mpz_class q = floor_div(d(t, j), d(t, t));
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and retry
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      row_axpy(d, t, bad, -1);
      row_axpy(u, t, bad, -1);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  RatMatrix q = m.map([](const mpz_class& x) { return Rat(x, 1); });
  Rat dt = det(q);
  return dt == Rat(1) || dt == Rat(-1);
}

IntLattice::IntLattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (exact::rank(basis_) != basis_.cols()) throw DomainError("IntLattice: basis columns are dependent");
  const mpz_class scale = lcm_of_denominators(basis_);
  HermiteForm h = hnf(to_integer(basis_.transpose(), scale));
  herm_ = RatMatrix(h.rank, basis_.rows());
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = 0; j < basis_.rows(); ++j) herm_(i, j) = Rat(h.h(i, j), scale);
}

IntLattice IntLattice::from_vectors(const std::vector<RatVector>& vs, std::size_t ambient) {
  return IntLattice(RatMatrix::from_columns(vs, ambient));
}

IntLattice IntLattice::span(const std::vector<RatVector>& vs, std::size_t ambient) {
  RatMatrix m = RatMatrix::from_columns(vs, ambient).transpose();
  const mpz_class scale = lcm_of_denominators(m);
  HermiteForm h = hnf(to_integer(m, scale));
  std::vector<RatVector> cols;
  for (std::size_t i = 0; i < h.rank; ++i) {
    RatVector c(ambient);
    for (std::size_t j = 0; j < ambient; ++j) c[j] = Rat(h.h(i, j), scale);
    cols.push_back(std::move(c));
  }
  return IntLattice(RatMatrix::from_columns(cols, ambient));
}

std::vector<RatVector> IntLattice::basis_vectors() const {
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < basis_.cols(); ++j) out.push_back(basis_.col(j));
  return out;
}

bool IntLattice::contains(const RatVector& v0) const {
  if (v0.size() != ambient_dim()) throw DomainError("IntLattice: dimension mismatch");
  RatVector v = v0;
  for (std::size_t r = 0; r < herm_.rows(); ++r) {
    std::size_t c = 0;
    while (herm_(r, c).is_zero()) ++c;
    Rat coef = v[c] / herm_(r, c);
    if (!coef.is_integer()) return false;
    if (coef.is_zero()) continue;
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= coef * herm_(r, j);
  }
  return vec_is_zero(v);
}

std::optional<std::vector<mpz_class>> IntLattice::coordinates(const RatVector& v) const {
  auto x = solve(basis_, v);
  if (!x) return std::nullopt;
  if (!vec_is_zero(vec_sub(basis_.apply(*x), v))) return std::nullopt;
  std::vector<mpz_class> out;
  for (const auto& t : *x) {
    if (!t.is_integer()) return std::nullopt;
    out.push_back(t.num());
  }
  return out;
}

bool lattice_equal(const IntLattice& a, const IntLattice& b) { return a == b; }

bool lattice_member(const IntLattice& l, const RatVector& v) { return l.contains(v); }

IntLattice dual_lattice(const IntLattice& l) {
  if (l.rank() != l.ambient_dim()) throw DomainError("dual_lattice: lattice is not full rank");
  return IntLattice(inverse(l.basis()).transpose());
}

LatticeSplit split_by_kernel(const IntLattice& l, const RatMatrix& k) {
  if (k.cols() != l.ambient_dim()) throw DomainError("split_by_kernel: shape mismatch");
  const RatMatrix& b = l.basis();
  RatMatrix a = k * b;  // constraints on lattice coordinates
  const mpz_class scale = lcm_of_denominators(a);
  HermiteForm h = hnf(to_integer(a.transpose(), scale));
  LatticeSplit out;
  for (std::size_t i = 0; i < h.u.rows(); ++i) {
    RatVector coeff;
    for (std::size_t j = 0; j < h.u.cols(); ++j) coeff.emplace_back(h.u(i, j), 1);
    RatVector vec = b.apply(coeff);
    if (i < h.rank) out.complement.push_back(std::move(vec));
    else out.kernel_part.push_back(std::move(vec));
  }
  return out;
}

}  // namespace nilspec::exact
