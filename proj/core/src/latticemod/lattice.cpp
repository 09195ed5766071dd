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
#include "nilspec/latticemod/lattice.hpp"

namespace nilspec::lattice {

namespace {

bool all_integral(const std::vector<Rat>& t) {
  for (const auto& x : t)
    if (!x.is_integer()) return false;
  return true;
}

Subspace tail_span(const std::vector<Vec>& v, std::size_t from, std::size_t n) {
  return Subspace(n, std::vector<Vec>(v.begin() + static_cast<long>(from), v.end()));
}

}  // namespace

LatticeSpec::LatticeSpec(AlgebraPtr g, std::vector<Vec> generators) : g_(std::move(g)), gens_(std::move(generators)) {
  if (!g_) throw DomainError("lattice: null algebra");
  const std::size_t n = g_->dim();
  if (gens_.size() != n) throw DomainError("lattice: need exactly dim generators");
  std::vector<RatVector> cols;
  for (const auto& v : gens_) {
    if (v.dim() != n) throw DomainError("lattice: generator of wrong length");
    cols.push_back(v.coords());
  }
  basis_ = RatMatrix::from_columns(cols, n);
  if (exact::det(basis_).is_zero()) throw DomainError("lattice: generators are dependent");
  inv_ = exact::inverse(basis_);
  for (std::size_t k = 1; k < n; ++k)
    if (!g_->is_ideal(tail_span(gens_, k, n)))
      throw DomainError("lattice: generators are not adapted (tail " + std::to_string(k + 1) +
                        " does not span an ideal)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec x = g_->cbh(Rat(si) * gens_[i], Rat(sj) * gens_[j]);
          if (!contains(x))
            throw DomainError("lattice: products of generators leave the coordinate set (generators " +
                              std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        }
}

std::vector<Rat> LatticeSpec::malcev_coordinates(const Vec& x) const {
  const std::size_t n = dim();
  std::vector<Rat> t(n);
  Vec cur = x;
  for (std::size_t k = 0; k < n; ++k) {
    // exp(cur) = exp(t_k v_k) exp(rest) with rest in the ideal span(v_{k+1}..)
    RatVector c = inv_.apply(cur.coords());
    for (std::size_t j = 0; j < k; ++j)
      if (!c[j].is_zero()) throw InternalError("malcev peeling left a nonzero leading coordinate");
    t[k] = c[k];
    if (!t[k].is_zero()) cur = g_->cbh(-t[k] * gens_[k], cur);
  }
  if (!cur.is_zero()) throw InternalError("malcev peeling did not terminate at the identity");
  return t;
}

Vec LatticeSpec::word(const std::vector<Rat>& t) const {
  if (t.size() != dim()) throw DomainError("word: wrong number of coordinates");
  Vec acc = Vec::zero(dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (!t[k].is_zero()) acc = g_->cbh(acc, t[k] * gens_[k]);
  return acc;
}

bool LatticeSpec::contains(const Vec& x) const { return all_integral(malcev_coordinates(x)); }

std::optional<IntLattice> LatticeSpec::log_lattice() const {
  IntLattice l = span();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          if (!l.contains(g_->cbh(Rat(si) * gens_[i], Rat(sj) * gens_[j]).coords())) return std::nullopt;
  return l;
}

CentralLattice center_intersection(const LatticeSpec& gamma) {
  const auto& g = *gamma.algebra();
  const std::size_t n = gamma.dim();
  Subspace z = g.center();
  std::size_t start = n;
  while (start > 0 && z.contains(gamma.generators()[start - 1])) --start;
  Subspace suffix = tail_span(gamma.generators(), start, n);
  if (!(suffix == z))
    throw DomainError("center_intersection: the central generator suffix does not span the center");
  std::vector<Vec> basis(gamma.generators().begin() + static_cast<long>(start), gamma.generators().end());
  std::vector<RatVector> cols;
  for (const auto& v : basis) cols.push_back(v.coords());
  IntLattice l = IntLattice::from_vectors(cols, n);
  // maximality: no half-point of the suffix lattice is in Gamma
  for (std::size_t mask = 1; mask < (std::size_t{1} << basis.size()); ++mask) {
    Vec h = Vec::zero(n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (mask >> b & 1) h = h + Rat::parse("1/2") * basis[b];
    if (gamma.contains(h)) throw InternalError("center_intersection: lattice is not maximal");
  }
  return {std::move(z), std::move(l), std::move(basis)};
}

QuotientLattice quotient_lattice(const LatticeSpec& gamma, const lie::Quotient& q) {
  const std::size_t n = gamma.dim();
  const std::size_t k = q.ideal.dim();
  if (k > n) throw DomainError("quotient_lattice: ideal too large");
  if (!(tail_span(gamma.generators(), n - k, n) == q.ideal))
    throw DomainError("quotient_lattice: ideal is not spanned by a suffix of the generators");
  std::vector<Vec> proj;
  for (std::size_t i = 0; i + k < n; ++i) proj.push_back(q.projection(gamma.generators()[i]));
  LatticeSpec spec(q.algebra, proj);
  auto l = spec.log_lattice();
  if (!l) throw DomainError("quotient_lattice: projected log span is not closed under products");
  return {std::move(spec), std::move(*l)};
}

Rat quotient_covolume(const IntLattice& log_lattice, const geom::Metric& metric) {
  if (log_lattice.ambient_dim() != metric.dim()) throw DomainError("quotient_covolume: dimension mismatch");
  if (log_lattice.rank() != metric.dim()) throw DomainError("quotient_covolume: lattice is not full rank");
  RatMatrix f = metric.frame_inverse() * log_lattice.basis();
  return exact::det(f.transpose() * f);
}

}  // namespace nilspec::lattice
