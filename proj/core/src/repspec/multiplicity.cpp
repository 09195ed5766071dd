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
#include "nilspec/repspec/multiplicity.hpp"

namespace nilspec::rep {

namespace {

Rat pairing(const NilLieAlgebra& g, const Covec& tau, const Vec& x, const Vec& y) {
  return tau(g.bracket(x, y));
}

RatMatrix skew_form(const NilLieAlgebra& g, const Covec& tau, const std::vector<Vec>& basis) {
  const std::size_t k = basis.size();
  RatMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      b(i, j) = pairing(g, tau, basis[i], basis[j]);
      b(j, i) = -b(i, j);
    }
  return b;
}

/// Coordinates at the non-central (kept) indices of g / z must vanish.
void require_central_support(const NilLieAlgebra& g, const Covec& tau, const char* who) {
  if (tau.dim() != g.dim()) throw DomainError(std::string(who) + ": functional has the wrong dimension");
  const lie::Quotient q = lie::quotient(g, g.center());
  for (auto k : q.kept)
    if (!tau[k].is_zero()) throw DomainError(std::string(who) + ": functional is not supported on the center");
}

}  // namespace

std::string roman(std::size_t k) {
  static const char* const kNames[] = {"", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
  if (k == 0 || k > 10) throw DomainError("roman: sector index out of range");
  return kNames[k];
}

SectorFlag::SectorFlag(std::vector<Subspace> chain) : chain_(std::move(chain)) {
  for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
    if (!chain_[i + 1].contains(chain_[i]) || chain_[i + 1].dim() <= chain_[i].dim())
      throw DomainError("SectorFlag: chain is not strictly increasing");
  if (chain_.size() >= 10) throw DomainError("SectorFlag: chain too long");
}

std::vector<std::string> SectorFlag::labels() const {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= chain_.size() + 1; ++k) out.push_back(roman(k));
  return out;
}

std::string SectorFlag::classify(const Covec& tau) const {
  for (std::size_t j = 0; j < chain_.size(); ++j)
    for (const auto& v : chain_[j].basis())
      if (!tau(v).is_zero()) return label_of(j);
  return roman(1);
}

std::string SectorFlag::label_of(std::size_t j) const { return roman(chain_.size() + 1 - j); }

std::string to_string(Method m) {
  switch (m) {
    case Method::pesce: return "pesce";
    case Method::moore_wolf: return "moore_wolf";
    case Method::character: return "character";
  }
  return "?";
}

MultiplicityRecord pesce_occurrence_and_multiplicity(const NilLieAlgebra& n, const IntLattice& log_lattice,
                                                     const Covec& tau) {
  if (n.step() > 2) throw DomainError("pesce: algebra has step > 2");
  const std::size_t d = n.dim();
  if (tau.dim() != d || log_lattice.ambient_dim() != d || log_lattice.rank() != d)
    throw DomainError("pesce: dimension mismatch");

  // K(j, i) = tau([e_i, e_j]); n_tau = ker K
  RatMatrix k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) k(j, i) = pairing(n, tau, n.e(i), n.e(j));
  const exact::LatticeSplit split = exact::split_by_kernel(log_lattice, k);

  MultiplicityRecord r;
  r.tau = tau;
  r.occurs = true;
  for (const auto& v : split.kernel_part)
    if (!tau(Vec(v)).is_integer()) r.occurs = false;

  bool character = true;
  for (const auto& v : n.series_term(1).basis())
    if (!tau(v).is_zero()) character = false;
  if (character) {
    r.method = Method::character;
    r.multiplicity = r.occurs ? Rat(1) : Rat(0);
    return r;
  }

  std::vector<Vec> comp;
  for (const auto& v : split.complement) comp.emplace_back(v);
  const RatMatrix b = skew_form(n, tau, comp);
  const Rat det_b = exact::det(b);
  const Rat root = exact::perfect_square_root(det_b);
  if (exact::pfaffian(b).abs() != root) throw InternalError("pesce: |Pf B| differs from sqrt(det B)");
  r.method = Method::pesce;
  r.multiplicity = r.occurs ? root : Rat(0);
  return r;
}

bool is_square_integrable(const NilLieAlgebra& g, const Covec& tau) {
  require_central_support(g, tau, "is_square_integrable");
  const lie::Quotient q = lie::quotient(g, g.center());
  if (q.kept.size() % 2 == 1) return false;
  std::vector<Vec> basis;
  for (auto k : q.kept) basis.push_back(g.e(k));
  return !exact::det(skew_form(g, tau, basis)).is_zero();
}

MultiplicityRecord moore_wolf_multiplicity(const lattice::LatticeSpec& gamma, const Covec& tau) {
  const auto& g = *gamma.algebra();
  require_central_support(g, tau, "moore_wolf");
  if (!is_square_integrable(g, tau)) throw DomainError("moore_wolf: pi_tau is not square integrable");

  const lattice::CentralLattice cl = lattice::center_intersection(gamma);
  MultiplicityRecord r;
  r.tau = tau;
  r.method = Method::moore_wolf;
  r.occurs = true;
  for (const auto& v : cl.basis)
    if (!tau(v).is_integer()) r.occurs = false;

  const lie::Quotient q = lie::quotient(g, g.center());
  const lattice::QuotientLattice ql = lattice::quotient_lattice(gamma, q);
  std::vector<Vec> lifted;
  for (const auto& u : ql.log_lattice.basis_vectors()) lifted.push_back(q.lift(Vec(u), g.dim()));
  const Rat pf = exact::pfaffian(skew_form(g, tau, lifted)).abs();
  r.multiplicity = r.occurs ? pf : Rat(0);
  return r;
}

}  // namespace nilspec::rep
