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

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "nilspec/exactnum/matrix.hpp"

namespace nilspec::exact {

using IntMatrix = Matrix<mpz_class>;

/// Row-style Hermite normal form: U * M = H with U unimodular, H in row
/// echelon form, positive pivots, entries above a pivot reduced into
/// [0, pivot).  Zero rows are collected at the bottom.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
HermiteForm hnf(const IntMatrix& m);

/// Smith normal form: U * M * V = D, D diagonal with d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};
SmithForm snf(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Z-span of independent rational columns in Q^n.
class IntLattice {
 public:
  /// basis: n x r matrix whose columns are independent.
  explicit IntLattice(RatMatrix basis);
  static IntLattice from_vectors(const std::vector<RatVector>& vs, std::size_t ambient);
  /// Z-span of arbitrary (possibly dependent) vectors.
  static IntLattice span(const std::vector<RatVector>& vs, std::size_t ambient);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }
  std::vector<RatVector> basis_vectors() const;

  /// Canonical basis rows (rank x n): HNF of the basis, unique per lattice.
  const RatMatrix& hermite_rows() const { return herm_; }

  bool contains(const RatVector& v) const;
  /// Integer coordinates of v in basis(), nullopt if v is not a member.
  std::optional<std::vector<mpz_class>> coordinates(const RatVector& v) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.ambient_dim() == b.ambient_dim() && a.herm_ == b.herm_;
  }

 private:
  RatMatrix basis_;
  RatMatrix herm_;
};

bool lattice_equal(const IntLattice& a, const IntLattice& b);
bool lattice_member(const IntLattice& l, const RatVector& v);
/// Dual basis B^{-T}; requires full rank.
IntLattice dual_lattice(const IntLattice& l);

/// Splits L against the rational subspace ker(K): returns a Z-basis of
/// L ∩ ker K and vectors completing it to a Z-basis of L (their classes are
/// a Z-basis of L / (L ∩ ker K)).
struct LatticeSplit {
  std::vector<RatVector> kernel_part;
  std::vector<RatVector> complement;
};
LatticeSplit split_by_kernel(const IntLattice& l, const RatMatrix& k);

}  // namespace nilspec::exact
