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

#include <nlohmann/json.hpp>

#include "nilspec/geometry/metric.hpp"
#include "nilspec/latticemod/lattice.hpp"
#include "nilspec/liealg/algebra.hpp"

namespace nilspec::io {

using nlohmann::json;

/// Rationals travel as "p" / "p/q" strings, bit-exact.
json to_json(const exact::Rat& r);
exact::Rat rat_from_json(const json& j);

json to_json(const exact::RatVector& v);
exact::RatVector ratvec_from_json(const json& j);
/// Row-major array of rows.
json to_json(const exact::RatMatrix& m);
exact::RatMatrix ratmat_from_json(const json& j);

/// {dim, names, brackets: [[i, j, [[k, "c"], ...]], ...]}.
json algebra_to_json(const lie::NilLieAlgebra& g);
lie::AlgebraPtr algebra_from_json(const json& j);

/// A linear map as the list of images of the basis vectors.
json map_to_json(const lie::LinearMap& m);
lie::LinearMap map_from_json(const json& j, std::size_t dim);

json lattice_to_json(const lattice::LatticeSpec& l);
lattice::LatticeSpec lattice_from_json(const json& j, lie::AlgebraPtr g);

/// {orthonormal_columns, frame_names, dual_names}.
json metric_to_json(const geom::Metric& m);
geom::Metric metric_from_json(const json& j, lie::AlgebraPtr g);

}  // namespace nilspec::io
