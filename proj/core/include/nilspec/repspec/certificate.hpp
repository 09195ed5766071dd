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

#include "nilspec/geometry/metric.hpp"
#include "nilspec/latticemod/lattice.hpp"
#include "nilspec/repspec/multiplicity.hpp"

namespace nilspec::rep {

using lie::LinearMap;
using nlohmann::json;

/// Two lattices in the same group, with the metric and the dual-basis names
/// used in reports.
struct LatticePair {
  std::string id;
  lattice::LatticeSpec gamma1, gamma2;
  geom::Metric metric;
  std::vector<std::string> dual_names;  // structure dual basis, for reports
  const lie::AlgebraPtr& algebra() const { return gamma1.algebra(); }
};

enum class WitnessKind { identity, almost_inner, inner, isometry, composite };
std::string to_string(WitnessKind k);
WitnessKind witness_kind_from_string(const std::string& s);

/// Automorphism of g / z claimed to map the image of Gamma_1 onto that of
/// Gamma_2.  A composite applies factors right to left: map = f_0 ∘ f_1 ∘ ...
struct QuotientWitness {
  WitnessKind kind = WitnessKind::identity;
  LinearMap map;
  std::vector<QuotientWitness> factors;

  static QuotientWitness make(WitnessKind kind, LinearMap map);
  static QuotientWitness composite(std::vector<QuotientWitness> factors);
};
json witness_to_json(const QuotientWitness& w);
QuotientWitness witness_from_json(const json& j, std::size_t dim);

struct CheckedClaim {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class CertificateKind { isospectral_thm32, rep_equivalent_cor38, not_rep_equivalent, undetermined };
std::string to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::undetermined;
  bool verdict = false;
  std::vector<CheckedClaim> checked_claims;
  json witnesses = json::object();
  json inputs = json::object();  // everything replay() needs

  std::optional<std::string> failing_check() const;
  json to_json() const;
};

struct CertifyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = lie::kDefaultSeed;
};

/// Isospectrality from equal center lattices plus a quotient witness.
/// Throws InputError for a malformed witness.
Certificate certify_theorem_3_2(const LatticePair& pair, const QuotientWitness& witness,
                                const CertifyOptions& opts = {});

/// Representation equivalence: YES via a verified almost-inner/inner
/// candidate (the identity is always tried), NO via an explicit functional
/// whose occurrence or multiplicity differs, undetermined otherwise.
Certificate certify_corollary_3_8(const LatticePair& pair, const std::vector<QuotientWitness>& candidates = {},
                                  const CertifyOptions& opts = {});

/// Re-runs the operation recorded in a certificate's inputs.
Certificate replay(const json& certificate);
bool same_verdicts(const Certificate& a, const Certificate& b);

/// A functional on g / z whose multiplicities differ between the two image
/// lattices, searched over a fixed small grid.
struct OccurrenceMismatch {
  Covec tau;
  MultiplicityRecord gamma1, gamma2;
};
std::optional<OccurrenceMismatch> find_occurrence_mismatch(const NilLieAlgebra& n, const IntLattice& l1,
                                                           const IntLattice& l2);

/// tau <-> tau ∘ Phi_* pairing of sector-II functionals on g / z.
struct PairingRow {
  Covec tau, tau_phi;
  std::string sector;
  bool in_sector = false;
  MultiplicityRecord gamma1, gamma1_phi, gamma2, gamma2_phi;
  bool orbits_distinct = false;
  bool ok = false;
};
struct PairingReport {
  std::vector<PairingRow> rows;
  bool all_ok = false;  // every in-sector row verified
};
/// phi is an automorphism of g; taus are functionals on g / z.  Throws
/// DomainError when phi is not an automorphism or not an isometry.
PairingReport orbit_pairing_mod4(const LatticePair& pair, const SectorFlag& flag, const LinearMap& phi,
                                 const std::vector<Covec>& taus, const std::string& sector = "II");

json to_json(const MultiplicityRecord& r, const std::vector<std::string>& dual_names, const NilLieAlgebra& g);

}  // namespace nilspec::rep
