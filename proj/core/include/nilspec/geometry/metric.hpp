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

#include <string>
#include <vector>

#include "nilspec/liealg/algebra.hpp"

namespace nilspec::geom {

using exact::Rat;
using exact::RatMatrix;
using exact::RatVector;
using lie::AlgebraPtr;
using lie::Covec;
using lie::LinearMap;
using lie::Vec;

/// Left-invariant metric given by an orthonormal frame E_1..E_n (columns of
/// `frame`, in structure coordinates).
class Metric {
 public:
  Metric(AlgebraPtr g, RatMatrix frame, std::vector<std::string> frame_names = {},
         std::vector<std::string> dual_names = {});
  /// The structure basis declared orthonormal.
  static Metric standard(AlgebraPtr g, std::vector<std::string> dual_names = {});

  const AlgebraPtr& algebra() const { return g_; }
  std::size_t dim() const { return frame_.rows(); }
  const RatMatrix& frame() const { return frame_; }
  const RatMatrix& frame_inverse() const { return inv_; }
  const std::vector<std::string>& frame_names() const { return frame_names_; }
  const std::vector<std::string>& dual_names() const { return dual_names_; }

  Vec frame_vector(std::size_t i) const;
  /// Coordinates of v in the frame.
  RatVector to_frame(const Vec& v) const;
  Vec from_frame(const RatVector& c) const;
  Rat inner(const Vec& u, const Vec& v) const;
  /// Gram matrix of the structure basis.
  RatMatrix gram() const;

  /// (tau(E_1), ..., tau(E_n)).
  RatVector frame_values(const Covec& tau) const;
  /// The functional with the given values on the frame.
  Covec from_frame_values(const RatVector& a) const;
  /// |tau|^2 = sum_j tau(E_j)^2.
  Rat norm2(const Covec& tau) const;

  /// c'_{ij}^k with [E_i, E_j] = sum_k c'_{ij}^k E_k.
  Rat frame_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return fc_[(i * dim() + j) * dim() + k];
  }
  /// Matrix of a structure-basis map in the frame.
  RatMatrix in_frame(const LinearMap& phi) const;
  bool is_isometry(const LinearMap& phi) const;

  /// Induced metric on g / ideal.  The frame must be adapted: exactly
  /// dim(ideal) frame vectors lie in the ideal; the others project to an
  /// orthonormal frame of the quotient.
  Metric quotient(const lie::Quotient& q) const;

 private:
  AlgebraPtr g_;
  RatMatrix frame_, inv_;
  std::vector<std::string> frame_names_, dual_names_;
  std::vector<Rat> fc_;
};

/// Gamma^k_{ij} = <nabla_{E_i} E_j, E_k>.  On the dual frame the same table
/// acts as nabla_{E_i} eps_j = sum_k Gamma^k_{ij} eps_k.
class ConnectionTable {
 public:
  ConnectionTable(std::size_t n, std::vector<Rat> gamma) : n_(n), g_(std::move(gamma)) {}
  std::size_t dim() const { return n_; }
  const Rat& operator()(std::size_t i, std::size_t j, std::size_t k) const { return g_[(i * n_ + j) * n_ + k]; }
  /// Coefficients of nabla_{E_i} E_j (equivalently nabla_{E_i} eps_j).
  RatVector derivative(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_;
  std::vector<Rat> g_;
};

ConnectionTable koszul_connection(const Metric& m);

/// Matrix of Delta = delta d on left-invariant one-forms in the dual frame:
/// Delta eps_l = sum_k L(k, l) eps_k.
RatMatrix laplacian_on_invariant_oneforms(const Metric& m);

/// chart[i][j] = nabla_{E_i} eps_j written in the dual frame names.
std::vector<std::vector<std::string>> nabla_chart(const Metric& m);

}  // namespace nilspec::geom
