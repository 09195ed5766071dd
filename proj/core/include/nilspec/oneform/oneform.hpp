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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilspec/exactnum/bareiss.hpp"
#include "nilspec/exactnum/quadext.hpp"
#include "nilspec/geometry/metric.hpp"
#include "nilspec/latticemod/lattice.hpp"
#include "nilspec/repspec/certificate.hpp"

namespace nilspec::oneform {

using exact::ExtMatrix;
using exact::ModulusPtr;
using exact::PolyMatrix;
using exact::QuadExtElem;
using exact::Rat;
using exact::RatVector;
using exact::UniPoly;
using lie::Covec;

/// Functional killing [g, g]; its wave F_tau = exp(2 pi i tau(log x)) is a
/// one-dimensional eigenfunction with eigenvalue 4 pi^2 |tau|^2.
struct CharacterWave {
  Covec tau;
  /// Throws DomainError unless tau vanishes on [g, g].
  static CharacterWave make(const lie::NilLieAlgebra& g, Covec tau);
};

/// Matrix of the Laplacian on F_tau ⊗ Λ^1 g* in the dual orthonormal frame,
/// with entries in Q(i)[p] where p stands for pi:
///   E(k, l) = 4 p^2 S^2 δ_kl + L(k, l) - 4 i p Σ_j tau(E_j) Γ^k_{jl}.
struct CharacterMatrix {
  PolyMatrix e;
  Covec tau;
  Rat s2;  // Σ_j tau(E_j)^2
  lie::AlgebraPtr algebra;

  std::size_t dim() const { return e.rows(); }
  /// E(j, k) == conj(E(k, j)) for every entry, with p real.
  bool is_hermitian() const;
};

CharacterMatrix assemble_E(const geom::Metric& metric, const CharacterWave& wave);

/// Candidate eigenvalue a(p) + b(p) s with s^2 = q(p).
struct EigenCandidate {
  QuadExtElem lambda{exact::trivial_modulus()};
  std::string label;

  /// pi^2 + 1.
  static EigenCandidate pi_squared_plus_one();
  /// c pi^2 + 1 + sqrt(c pi^2 + 1).
  static EigenCandidate shifted_root(const Rat& c);
  nlohmann::json to_json() const;
  double numeric(double pi) const;
};

/// E - lambda I over the candidate's ring.
ExtMatrix shifted(const CharacterMatrix& e, const EigenCandidate& lambda);
/// Exact det(E - lambda I); throws ModulusMismatch when the moduli differ.
QuadExtElem det_at(const ExtMatrix& e, const EigenCandidate& lambda);
QuadExtElem det_at(const CharacterMatrix& e, const EigenCandidate& lambda);
bool is_eigenvalue(const CharacterMatrix& e, const EigenCandidate& lambda);

/// Coefficient of p^(2n) in the s-free part of det(E - lambda I), n = dim E.
/// For lambda = c p^2 + (lower) this equals (4 S^2 - c)^n.  Throws
/// DomainError when lambda grows faster than p^2.
Rat leading_pi_coefficient(const CharacterMatrix& e, const EigenCandidate& lambda);
/// Leading coefficient of the rational norm a^2 - b^2 q of the determinant.
Rat leading_norm_coefficient(const CharacterMatrix& e, const EigenCandidate& lambda);

struct NullityResult {
  std::size_t nullity = 0;
  std::vector<std::vector<QuadExtElem>> kernel;
};
NullityResult nullity_at(const CharacterMatrix& e, const EigenCandidate& lambda);

/// True when u and v are proportional over the fraction field.
bool proportional(const std::vector<QuadExtElem>& u, const std::vector<QuadExtElem>& v);

/// Character functionals of a lattice: tau in span(basis) + offset with
/// integer coefficients, i.e. tau(log Gamma) ⊆ Z and tau([g, g]) = 0.
struct ShellConditions {
  std::vector<Covec> basis;
  Covec offset;
};
ShellConditions character_conditions(const lattice::LatticeSpec& gamma);

/// All tau satisfying the conditions with |tau|^2 == s2 (exact Fincke–Pohst),
/// sorted canonically.
std::vector<Covec> enumerate_shell(const ShellConditions& c, const geom::Metric& metric, const Rat& s2);
/// All tau with |tau|^2 <= s2_max, sorted by norm and then canonically.
std::vector<Covec> enumerate_ball(const ShellConditions& c, const geom::Metric& metric, const Rat& s2_max);

/// Floating-point eigenvalues of E at p = pi_value, ascending.  Throws
/// DomainError when the specialization is not Hermitian within tolerance.
std::vector<double> numeric_spectrum(const CharacterMatrix& e, double pi_value, double tolerance = 1e-9);

/// Inputs for the pairwise one-form comparison.
struct DistinguishInput {
  rep::LatticePair pair;
  EigenCandidate lambda;
  Rat s2_target;
  rep::SectorFlag flag;
  std::optional<lie::LinearMap> pairing;  // automorphism of g pairing sector-II orbits
  std::vector<std::string> frame_dual_names;
  std::size_t samples = 60;  // per sector check
  std::uint64_t seed = lie::kDefaultSeed;
};

struct TauOutcome {
  Covec tau;
  bool det_zero = false;
  std::size_t nullity = 0;
};

struct SectorCheck {
  std::string sector;
  std::string method;
  std::size_t samples = 0;
  bool verified = false;
  std::string detail;
};

struct DistinguishReport {
  std::string example;
  EigenCandidate lambda;
  Rat s2_target;
  std::vector<Covec> shell1, shell2;
  std::vector<TauOutcome> per_tau1, per_tau2;
  std::size_t multiplicity1 = 0, multiplicity2 = 0;
  std::vector<SectorCheck> sector_checks;
  bool distinguished = false;
  std::string verdict;
  nlohmann::json to_json(const DistinguishInput& in) const;
};

DistinguishReport distinguish_pair(const DistinguishInput& in);

/// tau written in the given dual names (frame values when metric is given).
std::string format_tau(const Covec& tau, const geom::Metric& metric, const std::vector<std::string>& names);

}  // namespace nilspec::oneform
