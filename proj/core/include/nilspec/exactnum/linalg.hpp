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

#include <optional>
#include <vector>

#include "nilspec/exactnum/matrix.hpp"

namespace nilspec::exact {

// Vector helpers over Q.
RatVector vec_add(const RatVector& a, const RatVector& b);
RatVector vec_sub(const RatVector& a, const RatVector& b);
RatVector vec_scale(const Rat& s, const RatVector& a);
Rat vec_dot(const RatVector& a, const RatVector& b);
bool vec_is_zero(const RatVector& a);
RatVector unit_vector(std::size_t n, std::size_t i);

/// Reduced row echelon form over Q.
struct Rref {
  RatMatrix m;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};
Rref rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);
/// Determinant via Bareiss; throws on non-square input.
Rat det(const RatMatrix& m);
/// Throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);
/// One solution of A x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
/// Basis of { x : A x = 0 } (one vector per free column).
std::vector<RatVector> nullspace(const RatMatrix& a);

/// Pfaffian of a skew-symmetric matrix by expansion along the first row.
/// Pf of the 0x0 matrix is 1; diag([[0,1],[-1,0]])^n has Pf = +1.
Rat pfaffian(const RatMatrix& m);

}  // namespace nilspec::exact
