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

#include "nilspec/exactnum/intlattice.hpp"
#include "nilspec/latticemod/lattice.hpp"
#include "nilspec/liealg/algebra.hpp"

namespace nilspec::rep {

using exact::IntLattice;
using exact::Rat;
using exact::RatMatrix;
using lie::Covec;
using lie::NilLieAlgebra;
using lie::Subspace;
using lie::Vec;

/// Strictly increasing chain V_1 ⊂ ... ⊂ V_m.  A functional gets the label
/// roman(m + 1 - j) where V_j is the first member it does not vanish on, and
/// "I" when it vanishes on all of them.
class SectorFlag {
 public:
  SectorFlag() = default;
  explicit SectorFlag(std::vector<Subspace> chain);

  const std::vector<Subspace>& chain() const { return chain_; }
  /// Labels from the innermost sector outward: "I", "II", ...
  std::vector<std::string> labels() const;
  std::string classify(const Covec& tau) const;
  /// Label of functionals first nonzero on chain()[j].
  std::string label_of(std::size_t j) const;

 private:
  std::vector<Subspace> chain_;
};

std::string roman(std::size_t k);

enum class Method { pesce, moore_wolf, character };
std::string to_string(Method m);

struct MultiplicityRecord {
  Covec tau;
  bool occurs = false;
  Rat multiplicity;  // 0 when tau does not occur
  Method method = Method::pesce;
};

/// Occurrence and multiplicity of pi_tau in L^2(Gamma \ N) for a lattice in
/// a nilpotent group of step <= 2, given by its log-lattice.
MultiplicityRecord pesce_occurrence_and_multiplicity(const NilLieAlgebra& n, const IntLattice& log_lattice,
                                                     const Covec& tau);

/// b_tau(X, Y) = tau([X, Y]) on g / z is nondegenerate.  tau must vanish
/// off the center (coordinates at the kept indices of g / z).
bool is_square_integrable(const NilLieAlgebra& g, const Covec& tau);

/// Multiplicity of a square-integrable pi_tau: occurrence iff tau is integral
/// on log(Gamma ∩ Z(G)), multiplicity |Pf b_tau| in a Z-basis of the quotient
/// log-lattice.
MultiplicityRecord moore_wolf_multiplicity(const lattice::LatticeSpec& gamma, const Covec& tau);

}  // namespace nilspec::rep
