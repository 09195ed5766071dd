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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilspec/liealg/vec.hpp"

namespace nilspec::lie {

/// One line of a bracket table: [e_i, e_j] = sum_k c_k e_k.
struct BracketEntry {
  std::size_t i = 0, j = 0;
  std::vector<std::pair<std::size_t, Rat>> terms;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Antisymmetry is enforced by construction; the Jacobi identity and
/// nilpotency are reported by validate().
class NilLieAlgebra {
 public:
  NilLieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& brackets);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index_of(const std::string& name) const;
  Vec e(std::size_t i) const { return Vec::unit(dim(), i); }
  Vec e(const std::string& name) const { return e(index_of(name)); }

  /// Structure constant c[i][j][k].
  Rat c(std::size_t i, std::size_t j, std::size_t k) const;
  /// Nonzero bracket table entries with i < j.
  std::vector<BracketEntry> bracket_table() const;

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x) in the structure basis.
  RatMatrix ad(const Vec& x) const;

  /// g^(0) = g, g^(1) = [g, g], g^(j+1) = [g, g^(j)], up to the first zero
  /// term (or the first repeated term for a non-nilpotent algebra).
  const std::vector<Subspace>& lower_central_series() const { return series_; }
  bool nilpotent() const { return nilpotent_; }
  /// k with g^(k) = 0 and g^(k-1) != 0; abelian algebras are 1-step.
  int step() const;
  /// g^(j); zero subspace beyond the series length.
  Subspace series_term(std::size_t j) const;
  Subspace center() const;
  Subspace centralizer(const Subspace& s) const;
  /// {U : [U, g] is contained in s}.
  Subspace transporter_into(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;

  /// log(exp x exp y), exact for step <= 3; throws DomainError otherwise.
  Vec cbh(const Vec& x, const Vec& y) const;

  std::string format(const Vec& v) const;
  std::string format(const Covec& v, const std::vector<std::string>& dual_names) const;

 private:
  void check_dim(const Vec& v) const;
  std::vector<std::string> names_;
  // table_[i * n + j] = sparse [e_i, e_j]
  std::vector<std::vector<std::pair<std::size_t, Rat>>> table_;
  std::vector<Subspace> series_;
  bool nilpotent_ = false;
};

using AlgebraPtr = std::shared_ptr<const NilLieAlgebra>;

struct JacobiViolation {
  std::size_t i, j, k;
};

struct ValidationReport {
  bool jacobi_ok = true;
  std::vector<JacobiViolation> violations;
  bool nilpotent = false;
  int step = 0;
  std::vector<Subspace> series;
};
ValidationReport validate(const NilLieAlgebra& g);

/// Quotient g / ideal.  The quotient basis consists of the images of the
/// structure basis vectors that are not pivots of the ideal; `projection`
/// is the (dim q x dim g) matrix of the canonical map.
struct Quotient {
  AlgebraPtr algebra;
  Subspace ideal;
  LinearMap projection;
  std::vector<std::size_t> kept;  // parent index of each quotient basis vector
  /// Lift of a quotient vector along the kept basis vectors.
  Vec lift(const Vec& q, std::size_t parent_dim) const;
  /// Induced map on the quotient of an automorphism preserving the ideal.
  LinearMap induced(const LinearMap& phi, std::size_t parent_dim) const;
};
Quotient quotient(const NilLieAlgebra& g, const Subspace& ideal);

bool is_automorphism(const NilLieAlgebra& g, const LinearMap& phi);

struct NonsingularVerdict {
  bool verified_on_sample = false;
  std::size_t checked = 0;
  std::optional<Vec> counter_x;
  std::optional<Vec> counter_z;
};
/// Checks z in ad(X)(g) for structured X (basis vectors, pairwise sums and
/// differences) and n_samples random rational X.
NonsingularVerdict is_strictly_nonsingular_sampled(const NilLieAlgebra& g, std::size_t n_samples,
                                                   std::uint64_t seed);

struct AlmostInnerVerdict {
  bool verified_on_sample = false;
  std::size_t checked = 0;
  std::optional<Vec> counterexample;
  /// A with [A, X] = Phi(X) - X for every X, when one exists.
  std::optional<Vec> global_witness;
};
AlmostInnerVerdict is_almost_inner_2step(const NilLieAlgebra& g, const LinearMap& phi,
                                         std::size_t n_samples, std::uint64_t seed);

bool coadjoint_orbit_equal_2step(const NilLieAlgebra& g, const Covec& t1, const Covec& t2);

/// Rational sampler: coordinates uniform over {-d..d}/q, q in {1..4}.
class VecSampler {
 public:
  explicit VecSampler(std::uint64_t seed, long d = 10, long max_den = 4);
  Vec next(std::size_t n);
  /// Basis vectors, then e_i + e_j and e_i - e_j for i < j.
  static std::vector<Vec> structured(std::size_t n);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  long d_, q_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

}  // namespace nilspec::lie
