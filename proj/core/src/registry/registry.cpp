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
#include "nilspec/registry/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "nilspec/error.hpp"
#include "nilspec/registry/codec.hpp"

#ifndef NILSPEC_DEFAULT_DATA_DIR
#define NILSPEC_DEFAULT_DATA_DIR "share/nilspec"
#endif

namespace nilspec::registry {

namespace {

namespace fs = std::filesystem;

void require(bool ok, const std::string& id, const std::string& what) {
  if (!ok) throw InputError("example " + id + ": " + what);
}

const std::set<std::string> kKeys = {"id",           "title",       "algebra",   "gamma1",  "gamma2",
                                     "metric",       "dual_names",  "sector_flag", "witnesses", "pairing",
                                     "automorphism", "lambda",      "s2_target", "expected"};
const std::set<std::string> kExpectedKeys = {"isospectral", "same_p_form_spectrum", "rep_equivalent",
                                             "isomorphic_fundamental_groups"};

std::vector<std::string> strings(const json& j, const std::string& id, const std::string& what) {
  require(j.is_array(), id, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    require(s.is_string(), id, what + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

oneform::EigenCandidate lambda_from(const json& j, const std::string& id) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(), id, "lambda.kind missing");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "pi_squared_plus_one") {
    require(j.size() == 1, id, "lambda pi_squared_plus_one takes no parameters");
    return oneform::EigenCandidate::pi_squared_plus_one();
  }
  if (kind == "shifted_root") {
    require(j.size() == 2 && j.contains("c") && j["c"].is_string(), id, "lambda shifted_root needs c");
    return oneform::EigenCandidate::shifted_root(io::rat_from_json(j["c"]));
  }
  throw InputError("example " + id + ": unknown lambda kind '" + kind + "'");
}

bool same_generators(const lattice::LatticeSpec& a, const std::vector<lie::Vec>& b) {
  if (a.generators().size() != b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!(a.generators()[i] == b[i])) return false;
  return true;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

fs::path data_dir() {
  if (const char* env = std::getenv("NILSPEC_DATA"); env && *env) return fs::path(env);
  return fs::path(NILSPEC_DEFAULT_DATA_DIR);
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"I", "II", "III", "IV", "V"};
  return ids;
}

json read_json_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + p.string() + ": " + e.what());
  }
}

lie::AlgebraPtr load_algebra(const std::string& name, const fs::path& dir) {
  if (name.empty() || name.find_first_of("/\\.") != std::string::npos)
    throw InputError("invalid algebra name '" + name + "'");
  auto g = io::algebra_from_json(read_json_file(dir / "algebras" / (name + ".json")));
  const auto rep = lie::validate(*g);
  if (!rep.jacobi_ok) throw InputError("algebra " + name + ": Jacobi identity fails");
  if (!rep.nilpotent) throw InputError("algebra " + name + ": not nilpotent");
  return g;
}

ExampleRecord record_from_json(const json& j, const fs::path& dir) {
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
    throw InputError("example record: missing id");
  const std::string id = j["id"].get<std::string>();
  for (const auto& [k, v] : j.items()) require(kKeys.count(k) > 0, id, "unknown field '" + k + "'");
  for (const char* k : {"title", "algebra", "gamma1", "gamma2", "metric", "dual_names", "sector_flag", "witnesses",
                        "expected"})
    require(j.contains(k), id, std::string("missing field '") + k + "'");
  require(j["title"].is_string() && j["algebra"].is_string(), id, "title and algebra must be strings");
  const std::string algebra_name = j["algebra"].get<std::string>();

  try {
    auto g = load_algebra(algebra_name, dir);
    const std::size_t n = g->dim();
    rep::LatticePair pair{id, io::lattice_from_json(j["gamma1"], g), io::lattice_from_json(j["gamma2"], g),
                          io::metric_from_json(j["metric"], g), strings(j["dual_names"], id, "dual_names")};
    require(pair.dual_names.size() == n, id, "dual_names has the wrong length");
    require(pair.metric.dual_names().size() == n, id, "metric.dual_names has the wrong length");
    ExampleRecord r{id, j["title"].get<std::string>(), algebra_name, std::move(pair)};

    const auto z1 = lattice::center_intersection(r.pair.gamma1);
    const auto z2 = lattice::center_intersection(r.pair.gamma2);
    require(z1.lattice == z2.lattice, id, "center lattices differ");

    require(j["sector_flag"].is_array() && !j["sector_flag"].empty(), id, "sector_flag must be a non-empty array");
    std::vector<lie::Subspace> chain;
    for (const auto& member : j["sector_flag"]) {
      auto names = strings(member, id, "sector_flag member");
      std::vector<lie::Vec> span;
      for (const auto& s : names) span.push_back(g->e(s));
      chain.emplace_back(n, span);
      r.flag_names.push_back(std::move(names));
    }
    r.flag = rep::SectorFlag(std::move(chain));

    const std::size_t qdim = n - g->center().dim();
    require(j["witnesses"].is_array() && !j["witnesses"].empty(), id, "witnesses must be a non-empty array");
    for (const auto& w : j["witnesses"]) {
      r.witnesses.push_back(rep::witness_from_json(w, qdim));
      require(r.witnesses.back().kind != rep::WitnessKind::identity, id, "witness kind 'identity' is not allowed");
    }

    if (j.contains("pairing")) {
      r.pairing = io::map_from_json(j["pairing"], n);
      require(lie::is_automorphism(*g, *r.pairing), id, "pairing is not an automorphism");
    }
    if (j.contains("automorphism")) {
      r.automorphism = io::map_from_json(j["automorphism"], n);
      require(lie::is_automorphism(*g, *r.automorphism), id, "automorphism is not an automorphism");
      std::vector<lie::Vec> imgs;
      for (const auto& v : r.pair.gamma1.generators()) imgs.push_back((*r.automorphism)(v));
      require(same_generators(r.pair.gamma2, imgs), id, "gamma2 is not the image of gamma1 under automorphism");
    }

    require(j.contains("lambda") == j.contains("s2_target"), id, "lambda and s2_target come together");
    if (j.contains("lambda")) {
      r.lambda_spec = j["lambda"];
      r.lambda = lambda_from(j["lambda"], id);
      require(j["s2_target"].is_string(), id, "s2_target must be a rational string");
      r.s2_target = io::rat_from_json(j["s2_target"]);
      require(*r.s2_target > exact::Rat(0), id, "s2_target must be positive");
    }

    const auto& e = j["expected"];
    require(e.is_object() && e.size() == kExpectedKeys.size(), id, "expected must list the four computable columns");
    for (const auto& [k, v] : e.items())
      require(kExpectedKeys.count(k) > 0 && v.is_boolean(), id, "expected." + k + " must be a boolean");
    r.expected = {e["isospectral"].get<bool>(), e["same_p_form_spectrum"].get<bool>(),
                  e["rep_equivalent"].get<bool>(), e["isomorphic_fundamental_groups"].get<bool>()};
    return r;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& ex) {
    throw InputError("example " + id + ": validation failed: " + ex.what());
  }
}

ExampleRecord load(const std::string& id, const fs::path& dir) {
  const auto& ids = example_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw InputError("unknown example '" + id + "' (known: I, II, III, IV, V)");
  auto r = record_from_json(read_json_file(dir / "examples" / (id + ".json")), dir);
  if (r.id != id) throw InputError("example file " + id + ".json carries id '" + r.id + "'");
  return r;
}

ExampleRecord load(const std::string& id) { return load(id, data_dir()); }

json ExampleRecord::to_json() const {
  json flag = json::array();
  for (const auto& m : flag_names) flag.push_back(m);
  json ws = json::array();
  for (const auto& w : witnesses) ws.push_back(rep::witness_to_json(w));
  json j{{"id", id},
         {"title", title},
         {"algebra", algebra_name},
         {"gamma1", io::lattice_to_json(pair.gamma1)},
         {"gamma2", io::lattice_to_json(pair.gamma2)},
         {"metric", io::metric_to_json(pair.metric)},
         {"dual_names", pair.dual_names},
         {"sector_flag", flag},
         {"witnesses", ws},
         {"expected",
          {{"isospectral", expected.isospectral},
           {"same_p_form_spectrum", expected.same_p_form_spectrum},
           {"rep_equivalent", expected.rep_equivalent},
           {"isomorphic_fundamental_groups", expected.isomorphic_fundamental_groups}}}};
  if (pairing) j["pairing"] = io::map_to_json(*pairing);
  if (automorphism) j["automorphism"] = io::map_to_json(*automorphism);
  if (lambda_spec) j["lambda"] = *lambda_spec;
  if (s2_target) j["s2_target"] = s2_target->str();
  return j;
}

std::string ExampleRecord::canonical_text() const { return to_json().dump(2) + "\n"; }

oneform::DistinguishInput ExampleRecord::distinguish_input(std::size_t samples, std::uint64_t seed) const {
  if (!lambda || !s2_target) throw DomainError("example " + id + " carries no eigenvalue candidate");
  oneform::DistinguishInput in{pair, *lambda, *s2_target, flag, pairing, pair.metric.dual_names()};
  in.samples = samples;
  in.seed = seed;
  return in;
}

json TableRow::to_json() const {
  return json{{"id", id},
              {"title", title},
              {"isospectral", yes_no(isospectral)},
              {"rep_equivalent", rep_equivalent},
              {"rep_equivalent_detail", rep_equivalent_detail},
              {"one_form", one_form},
              {"same_p_form_spectrum", same_p_form_spectrum},
              {"isomorphic_fundamental_groups", isomorphic},
              {"search_bound", search_bound},
              {"length_spectrum", length_spectrum},
              {"marked_length_spectrum", marked_length_spectrum},
              {"matches_expected", matches_expected}};
}

json TableReport::to_json() const {
  json rs = json::array();
  for (const auto& r : rows) rs.push_back(r.to_json());
  return json{{"rows", rs},
              {"all_match_expected", all_match},
              {"note", "isomorphism column: bounded search evidence, not a proof"}};
}

std::string TableReport::to_text() const {
  std::ostringstream os;
  os << "id   isospectral  rep-equivalent  same-p-form  isomorphic-groups              length  marked-length\n";
  for (const auto& r : rows) {
    std::string id = r.id;
    id.resize(5, ' ');
    std::string iso = yes_no(r.isospectral);
    iso.resize(13, ' ');
    std::string re = r.rep_equivalent;
    re.resize(16, ' ');
    std::string pf = r.same_p_form_spectrum;
    pf.resize(13, ' ');
    std::string ig = r.isomorphic;
    ig.resize(31, ' ');
    os << id << iso << re << pf << ig << "n/a     n/a" << (r.matches_expected ? "" : "   (differs from expected)")
       << "\n";
  }
  os << "isomorphic-groups: bounded search evidence, not a proof";
  if (!rows.empty()) os << " (" << rows.front().search_bound << ")";
  os << "\nlength and marked-length spectra: " << (rows.empty() ? "out of scope" : rows.front().length_spectrum)
     << "\n";
  return os.str();
}

TableReport table_one(const std::vector<ExampleRecord>& records, const TableOptions& opts) {
  TableReport rep;
  std::ostringstream bound;
  bound << "bound " << opts.search.coeff_bound << ", denominators {";
  for (std::size_t i = 0; i < opts.search.denominators.size(); ++i)
    bound << (i ? "," : "") << opts.search.denominators[i];
  bound << "}";

  for (const auto& r : records) {
    TableRow row;
    row.id = r.id;
    row.title = r.title;
    row.search_bound = bound.str();
    row.length_spectrum = row.marked_length_spectrum = "out of scope";

    row.isospectral = rep::certify_theorem_3_2(r.pair, r.witnesses.front(), opts.certify).verdict;

    const auto c = rep::certify_corollary_3_8(r.pair, r.witnesses, opts.certify);
    if (c.kind == rep::CertificateKind::rep_equivalent_cor38 && c.verdict) {
      row.rep_equivalent = "yes";
      row.rep_equivalent_detail = "quotient witness " + c.witnesses.value("quotient_map", json::object())
                                                            .value("kind", std::string("?"));
    } else if (c.kind == rep::CertificateKind::not_rep_equivalent && c.verdict) {
      row.rep_equivalent = "no";
      row.rep_equivalent_detail = "mismatched tau " + c.witnesses["tau"]["gamma1"].value("tau_text", std::string());
    } else {
      row.rep_equivalent = "undetermined";
    }

    bool distinguished = false;
    if (r.lambda) {
      const auto d = oneform::distinguish_pair(r.distinguish_input(opts.samples, opts.seed));
      distinguished = d.distinguished;
      row.one_form = distinguished ? "distinguished" : "not distinguished";
    } else {
      row.one_form = "not computed";
    }
    if (row.rep_equivalent == "yes" && row.isospectral)
      row.same_p_form_spectrum = "yes";
    else if (distinguished)
      row.same_p_form_spectrum = "no";
    else
      row.same_p_form_spectrum = "undetermined";

    const auto s = rep::bounded_lattice_isomorphism_search(r.pair.gamma1, r.pair.gamma2, opts.search);
    row.isomorphic = s.found ? "yes" : "no isomorphism within bound";

    row.matches_expected = row.isospectral == r.expected.isospectral &&
                           row.rep_equivalent == yes_no(r.expected.rep_equivalent) &&
                           row.same_p_form_spectrum == yes_no(r.expected.same_p_form_spectrum) &&
                           s.found == r.expected.isomorphic_fundamental_groups;
    rep.rows.push_back(std::move(row));
  }
  rep.all_match = std::all_of(rep.rows.begin(), rep.rows.end(), [](const TableRow& x) { return x.matches_expected; });
  return rep;
}

TableReport table_one(const std::vector<std::string>& ids, const TableOptions& opts) {
  std::vector<ExampleRecord> records;
  for (const auto& id : ids) records.push_back(load(id));
  return table_one(records, opts);
}

}  // namespace nilspec::registry
