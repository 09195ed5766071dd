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

#include <concepts>
#include <string>
#include <vector>

#include "nilspec/error.hpp"
#include "nilspec/exactnum/linalg.hpp"

namespace nilspec::lie {

using exact::Rat;
using exact::RatMatrix;
using exact::RatVector;

struct VecTag {};
struct CovecTag {};

/// Coordinates in the structure basis (VecTag) or its dual (CovecTag).  The
/// two are distinct types so a functional is never mistaken for a vector.
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(RatVector c) : c_(std::move(c)) {}
  static Coords zero(std::size_t n) { return Coords(RatVector(n)); }
  static Coords unit(std::size_t n, std::size_t i) { return Coords(exact::unit_vector(n, i)); }

  std::size_t dim() const { return c_.size(); }
  const RatVector& coords() const { return c_; }
  const Rat& operator[](std::size_t i) const { return c_.at(i); }
  Rat& operator[](std::size_t i) { return c_.at(i); }
  bool is_zero() const { return exact::vec_is_zero(c_); }

  /// Evaluation of a functional on a vector.
  Rat operator()(const Coords<VecTag>& v) const
    requires std::same_as<Tag, CovecTag>
  {
    return exact::vec_dot(c_, v.coords());
  }

  Coords operator-() const { return Coords(exact::vec_scale(Rat(-1), c_)); }
  friend Coords operator+(const Coords& a, const Coords& b) { return Coords(exact::vec_add(a.c_, b.c_)); }
  friend Coords operator-(const Coords& a, const Coords& b) { return Coords(exact::vec_sub(a.c_, b.c_)); }
  friend Coords operator*(const Rat& s, const Coords& a) { return Coords(exact::vec_scale(s, a.c_)); }
  friend bool operator==(const Coords&, const Coords&) = default;

  /// "[1, -1/2, 0]".
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].str();
    return s + "]";
  }

 private:
  RatVector c_;
};

using Vec = Coords<VecTag>;
using Covec = Coords<CovecTag>;

/// Linear map in the structure basis; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(RatMatrix m) : m_(std::move(m)) {}
  static LinearMap identity(std::size_t n) { return LinearMap(RatMatrix::identity(n)); }
  /// Map with the given images of the basis vectors.
  static LinearMap from_images(const std::vector<Vec>& images);

  const RatMatrix& matrix() const { return m_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }

  Vec operator()(const Vec& v) const { return Vec(m_.apply(v.coords())); }
  /// tau o Phi.
  Covec pullback(const Covec& tau) const { return Covec(m_.transpose().apply(tau.coords())); }

  bool invertible() const { return m_.square() && !exact::det(m_).is_zero(); }
  LinearMap inverse() const { return LinearMap(exact::inverse(m_)); }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ * b.m_); }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  RatMatrix m_;
};

/// Rational subspace, stored in reduced row echelon form so that equality is
/// matrix equality.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vec>& spanning);
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }
  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec> basis() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  /// v minus its component along this subspace, normalized so that the
  /// pivot coordinates vanish.
  Vec reduce(const Vec& v) const;
  /// Coefficients of v in basis() (v must be a member).
  RatVector coordinates(const Vec& v) const;
  /// {a : a(s) = 0 for all s in this subspace}.
  std::vector<Covec> annihilator() const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  Subspace image(const LinearMap& f) const;

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t n_ = 0;
  RatMatrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nilspec::lie
