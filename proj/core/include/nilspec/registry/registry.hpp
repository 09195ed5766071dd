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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilspec/oneform/oneform.hpp"
#include "nilspec/repspec/certificate.hpp"
#include "nilspec/repspec/search.hpp"

namespace nilspec::registry {

using nlohmann::json;

/// Computable Table I columns as shipped with an example.
struct ExpectedRow {
  bool isospectral = false;
  bool same_p_form_spectrum = false;
  bool rep_equivalent = false;
  bool isomorphic_fundamental_groups = false;
};

/// One shipped example pair, validated at load and read-only afterwards.
struct ExampleRecord {
  std::string id;
  std::string title;
  std::string algebra_name;
  rep::LatticePair pair;
  std::vector<std::vector<std::string>> flag_names{};  // sector chain, innermost first
  rep::SectorFlag flag{};
  std::vector<rep::QuotientWitness> witnesses{};
  std::optional<lie::LinearMap> pairing{};       // sector-II orbit pairing automorphism
  std::optional<lie::LinearMap> automorphism{};  // Phi with Gamma_2 = Phi(Gamma_1)
  std::optional<json> lambda_spec{};             // {"kind": ...} as shipped
  std::optional<oneform::EigenCandidate> lambda{};
  std::optional<exact::Rat> s2_target{};
  ExpectedRow expected{};

  const lie::AlgebraPtr& algebra() const { return pair.algebra(); }
  /// Canonical JSON, equal to the shipped file content.
  json to_json() const;
  /// to_json().dump(2) plus a trailing newline.
  std::string canonical_text() const;
  /// Throws DomainError when the example carries no eigenvalue candidate.
  oneform::DistinguishInput distinguish_input(std::size_t samples = 60,
                                              std::uint64_t seed = lie::kDefaultSeed) const;
};

/// NILSPEC_DATA when set, the bundled data directory otherwise.
std::filesystem::path data_dir();
const std::vector<std::string>& example_ids();

/// Parses and validates a record; algebras are resolved in dir/algebras.
/// Throws InputError on malformed or inconsistent data.
ExampleRecord record_from_json(const json& j, const std::filesystem::path& dir);
ExampleRecord load(const std::string& id, const std::filesystem::path& dir);
ExampleRecord load(const std::string& id);
lie::AlgebraPtr load_algebra(const std::string& name, const std::filesystem::path& dir);

/// Reads and parses a JSON file; InputError names the file on failure.
json read_json_file(const std::filesystem::path& p);

struct TableOptions {
  rep::SearchOptions search{{1, 2, 4}, 2, 2'000'000};
  rep::CertifyOptions certify{};
  std::size_t samples = 60;  // one-form sector checks
  std::uint64_t seed = lie::kDefaultSeed;
};

struct TableRow {
  std::string id;
  std::string title;
  bool isospectral = false;
  std::string rep_equivalent;        // "yes", "no", "undetermined"
  std::string rep_equivalent_detail;
  std::string one_form;              // "distinguished", "not distinguished", "not computed"
  std::string same_p_form_spectrum;  // "yes", "no", "undetermined"
  std::string isomorphic;            // "yes", "no isomorphism within bound"
  std::string search_bound;
  std::string length_spectrum;
  std::string marked_length_spectrum;
  bool matches_expected = false;
  json to_json() const;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_match = false;
  json to_json() const;
  std::string to_text() const;
};

TableReport table_one(const std::vector<ExampleRecord>& records, const TableOptions& opts = {});
TableReport table_one(const std::vector<std::string>& ids, const TableOptions& opts = {});

}  // namespace nilspec::registry
