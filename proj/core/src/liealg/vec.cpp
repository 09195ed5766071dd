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
#include "nilspec/liealg/vec.hpp"

namespace nilspec::lie {

LinearMap LinearMap::from_images(const std::vector<Vec>& images) {
  if (images.empty()) return LinearMap(RatMatrix(0, 0));
  std::vector<RatVector> cols;
  for (const auto& v : images) cols.push_back(v.coords());
  return LinearMap(RatMatrix::from_columns(cols, images[0].dim()));
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : n_(ambient) {
  RatMatrix m(spanning.size(), ambient);
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].dim() != ambient) throw DomainError("Subspace: vector dimension mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = spanning[i][j];
  }
  exact::Rref r = exact::rref(std::move(m));
  pivots_ = r.pivots;
  rows_ = RatMatrix(pivots_.size(), ambient);
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) rows_(i, j) = r.m(i, j);
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(Vec::unit(n, i));
  return Subspace(n, b);
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_.rows(); ++i) out.emplace_back(rows_.row(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.dim() != n_) throw DomainError("Subspace: vector dimension mismatch");
  RatVector r = v.coords();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rat f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!rows_(i, j).is_zero()) r[j] -= f * rows_(i, j);
  }
  return Vec(std::move(r));
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& s) const {
  for (const auto& b : s.basis())
    if (!contains(b)) return false;
  return true;
}

RatVector Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw DomainError("Subspace: vector is not a member");
  RatVector c;
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<Covec> Subspace::annihilator() const {
  std::vector<Covec> out;
  if (pivots_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) out.push_back(Covec::unit(n_, i));
    return out;
  }
  for (auto& v : exact::nullspace(rows_)) out.emplace_back(std::move(v));
  return out;
}

Subspace Subspace::sum(const Subspace& o) const {
  auto b = basis();
  for (auto& v : o.basis()) b.push_back(v);
  return Subspace(n_, b);
}

Subspace Subspace::intersect(const Subspace& o) const {
  auto ann = o.annihilator();
  auto mine = basis();
  if (mine.empty()) return zero(n_);
  if (ann.empty()) return *this;
  RatMatrix m(ann.size(), mine.size());
  for (std::size_t k = 0; k < ann.size(); ++k)
    for (std::size_t i = 0; i < mine.size(); ++i) m(k, i) = ann[k](mine[i]);
  std::vector<Vec> out;
  for (const auto& c : exact::nullspace(m)) {
    Vec v = Vec::zero(n_);
    for (std::size_t i = 0; i < mine.size(); ++i)
      if (!c[i].is_zero()) v = v + c[i] * mine[i];
    out.push_back(v);
  }
  return Subspace(n_, out);
}

Subspace Subspace::image(const LinearMap& f) const {
  std::vector<Vec> imgs;
  for (const auto& b : basis()) imgs.push_back(f(b));
  return Subspace(f.rows(), imgs);
}

std::string Subspace::str(const std::vector<std::string>& names) const {
  std::string s = "span{";
  auto b = basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ", ";
    std::string term;
    for (std::size_t j = 0; j < n_; ++j) {
      const Rat& c = b[i][j];
      if (c.is_zero()) continue;
      std::string coef = c == Rat(1) ? "" : (c == Rat(-1) ? "-" : c.str() + " ");
      if (!term.empty() && c.sign() > 0) term += " + ";
      else if (!term.empty()) {
        term += " - ";
        coef = (-c) == Rat(1) ? "" : (-c).str() + " ";
      }
      term += coef + (j < names.size() ? names[j] : "e" + std::to_string(j + 1));
    }
    s += term;
  }
  return s + "}";
}

}  // namespace nilspec::lie
