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

#include "nilspec/exactnum/intlattice.hpp"
#include "nilspec/geometry/metric.hpp"
#include "nilspec/liealg/algebra.hpp"

namespace nilspec::lattice {

using exact::IntLattice;
using exact::Rat;
using exact::RatMatrix;
using exact::RatVector;
using lie::AlgebraPtr;
using lie::Subspace;
using lie::Vec;

/// Group element exp(log).
struct GroupElem {
  Vec log;
};

/// Uniform lattice Gamma generated by exp(v_1), ..., exp(v_n) with every
/// element uniquely exp(t_1 v_1) ... exp(t_n v_n), t in Z^n.
///
/// Checked at construction: n = dim, the v_k are independent, every tail
/// span(v_k, ..., v_n) is an ideal, and exp(+-v_i) exp(+-v_j) has integral
/// coordinates for every ordered pair.
class LatticeSpec {
 public:
  LatticeSpec(AlgebraPtr g, std::vector<Vec> generators);

  const AlgebraPtr& algebra() const { return g_; }
  const std::vector<Vec>& generators() const { return gens_; }
  std::size_t dim() const { return gens_.size(); }
  /// Columns v_1..v_n.
  const RatMatrix& generator_matrix() const { return basis_; }

  /// The unique t with exp(x) = exp(t_1 v_1) ... exp(t_n v_n).
  std::vector<Rat> malcev_coordinates(const Vec& x) const;
  std::vector<Rat> malcev_coordinates(const GroupElem& g) const { return malcev_coordinates(g.log); }
  /// log(exp(t_1 v_1) ... exp(t_n v_n)).
  Vec word(const std::vector<Rat>& t) const;
  bool contains(const Vec& x) const;
  bool contains(const GroupElem& g) const { return contains(g.log); }

  GroupElem multiply(const GroupElem& a, const GroupElem& b) const { return {g_->cbh(a.log, b.log)}; }
  static GroupElem inverse(const GroupElem& a) { return {-a.log}; }

  /// Z-span of the generator logs.
  IntLattice span() const { return IntLattice(basis_); }
  /// The Z-span when it equals log Gamma (closed under pairwise products of
  /// +-generators); nullopt otherwise.
  std::optional<IntLattice> log_lattice() const;

 private:
  AlgebraPtr g_;
  std::vector<Vec> gens_;
  RatMatrix basis_, inv_;
};

/// log(Gamma ∩ Z(G)) as a lattice in the center.
struct CentralLattice {
  Subspace center;
  IntLattice lattice;
  std::vector<Vec> basis;
};
CentralLattice center_intersection(const LatticeSpec& gamma);

/// Image of Gamma in G / exp(ideal), with its log-lattice.
struct QuotientLattice {
  LatticeSpec spec;
  IntLattice log_lattice;
};
/// The ideal must be the span of a suffix of the generators.  Throws
/// DomainError when the projected Z-span is not closed under products.
QuotientLattice quotient_lattice(const LatticeSpec& gamma, const lie::Quotient& q);

/// Squared covolume: Gram determinant of a Z-basis in the orthonormal frame.
Rat quotient_covolume(const IntLattice& log_lattice, const geom::Metric& metric);

}  // namespace nilspec::lattice
