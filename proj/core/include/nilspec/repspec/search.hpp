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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilspec/latticemod/lattice.hpp"

namespace nilspec::rep {

struct SearchOptions {
  std::vector<long> denominators = {1, 2, 4};
  long coeff_bound = 4;
  /// DFS nodes plus leaf solves; exceeding it throws DomainError.
  std::size_t node_ceiling = 2'000'000;
};

struct SearchResult {
  bool found = false;
  std::optional<lie::LinearMap> map;  // automorphism with map(Gamma_1) = Gamma_2
  std::size_t nodes = 0;              // partial assignments visited
  std::size_t leaves = 0;             // complete top blocks solved
  nlohmann::json to_json(const lie::NilLieAlgebra& g) const;
};

/// Bounded search for a Lie automorphism Psi with Psi(Gamma_1) = Gamma_2.
///
/// The top block of Psi (the images of basis vectors outside [g, g], taken
/// modulo [g, g]) is enumerated with entries in (1/d)Z, d in the
/// denominator set, |entry| <= coeff_bound, subject to preserving the
/// coordinate-aligned characteristic subspaces (lower central series,
/// center, their centralizers and transporters) and to mapping the
/// projected lattices onto each other level by level.  For each top block
/// the remaining entries are solved exactly: the automorphism equations are
/// linear in them and the Malcev coordinates of the generator images are
/// affine, so integrality is decided with a Smith normal form.  A result of
/// "none" is evidence within the bound, not a proof.
///
/// Requires step <= 3, a coordinate-aligned lower central series, and one
/// of the lattices with top generators projecting to multiples of basis
/// vectors.
SearchResult bounded_lattice_isomorphism_search(const lattice::LatticeSpec& gamma1,
                                                const lattice::LatticeSpec& gamma2, const SearchOptions& opts = {});

}  // namespace nilspec::rep
