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
#include "nilspec/registry/codec.hpp"

namespace nilspec::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("malformed JSON: " + what);
}

std::vector<std::string> names_from(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  require(j[key].is_array(), std::string(key) + " must be an array");
  for (const auto& s : j[key]) {
    require(s.is_string(), std::string(key) + " entries must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

json to_json(const exact::Rat& r) { return r.str(); }

exact::Rat rat_from_json(const json& j) {
  if (j.is_string()) return exact::Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return exact::Rat(j.get<long>());
  throw InputError("malformed JSON: rational must be a string \"p/q\" or an integer");
}

json to_json(const exact::RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

exact::RatVector ratvec_from_json(const json& j) {
  require(j.is_array(), "vector must be an array");
  exact::RatVector v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json to_json(const exact::RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

exact::RatMatrix ratmat_from_json(const json& j) {
  require(j.is_array(), "matrix must be an array of rows");
  std::vector<exact::RatVector> rows;
  for (const auto& r : j) rows.push_back(ratvec_from_json(r));
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  exact::RatMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == c, "ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

json algebra_to_json(const lie::NilLieAlgebra& g) {
  json br = json::array();
  for (const auto& e : g.bracket_table()) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms) terms.push_back(json::array({k, to_json(c)}));
    br.push_back(json::array({e.i, e.j, terms}));
  }
  return json{{"dim", g.dim()}, {"names", g.names()}, {"brackets", br}};
}

lie::AlgebraPtr algebra_from_json(const json& j) {
  require(j.is_object(), "algebra must be an object");
  require(j.contains("dim") && j["dim"].is_number_unsigned(), "algebra.dim");
  const std::size_t n = j["dim"].get<std::size_t>();
  auto names = names_from(j, "names");
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  require(names.size() == n, "algebra.names has the wrong length");
  std::vector<lie::BracketEntry> br;
  if (j.contains("brackets")) {
    require(j["brackets"].is_array(), "algebra.brackets");
    for (const auto& e : j["brackets"]) {
      require(e.is_array() && e.size() == 3 && e[0].is_number_unsigned() && e[1].is_number_unsigned() &&
                  e[2].is_array(),
              "bracket entry must be [i, j, [[k, c], ...]]");
      lie::BracketEntry be{e[0].get<std::size_t>(), e[1].get<std::size_t>(), {}};
      for (const auto& t : e[2]) {
        require(t.is_array() && t.size() == 2 && t[0].is_number_unsigned(), "bracket term must be [k, c]");
        const std::size_t k = t[0].get<std::size_t>();
        require(k < n, "bracket term index out of range");
        be.terms.emplace_back(k, rat_from_json(t[1]));
      }
      br.push_back(std::move(be));
    }
  }
  return std::make_shared<const lie::NilLieAlgebra>(std::move(names), br);
}

json map_to_json(const lie::LinearMap& m) {
  json a = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) a.push_back(to_json(m.matrix().col(c)));
  return a;
}

lie::LinearMap map_from_json(const json& j, std::size_t dim) {
  require(j.is_array() && j.size() == dim, "map must list the image of every basis vector");
  std::vector<lie::Vec> imgs;
  for (const auto& c : j) {
    auto v = ratvec_from_json(c);
    require(v.size() == dim, "map image has the wrong length");
    imgs.emplace_back(std::move(v));
  }
  return lie::LinearMap::from_images(imgs);
}

json lattice_to_json(const lattice::LatticeSpec& l) {
  json g = json::array();
  for (const auto& v : l.generators()) g.push_back(to_json(v.coords()));
  return json{{"generators", g}};
}

lattice::LatticeSpec lattice_from_json(const json& j, lie::AlgebraPtr g) {
  require(j.is_object() && j.contains("generators") && j["generators"].is_array(), "lattice.generators");
  std::vector<lie::Vec> gens;
  for (const auto& v : j["generators"]) {
    auto c = ratvec_from_json(v);
    require(c.size() == g->dim(), "lattice generator has the wrong length");
    gens.emplace_back(std::move(c));
  }
  return lattice::LatticeSpec(std::move(g), std::move(gens));
}

json metric_to_json(const geom::Metric& m) {
  json cols = json::array();
  for (std::size_t c = 0; c < m.dim(); ++c) cols.push_back(to_json(m.frame().col(c)));
  return json{{"orthonormal_columns", cols}, {"frame_names", m.frame_names()}, {"dual_names", m.dual_names()}};
}

geom::Metric metric_from_json(const json& j, lie::AlgebraPtr g) {
  require(j.is_object() && j.contains("orthonormal_columns"), "metric.orthonormal_columns");
  const auto& cj = j["orthonormal_columns"];
  require(cj.is_array() && cj.size() == g->dim(), "metric needs dim columns");
  std::vector<exact::RatVector> cols;
  for (const auto& c : cj) {
    cols.push_back(ratvec_from_json(c));
    require(cols.back().size() == g->dim(), "metric column has the wrong length");
  }
  const std::size_t n = g->dim();
  return geom::Metric(std::move(g), exact::RatMatrix::from_columns(cols, n), names_from(j, "frame_names"),
                      names_from(j, "dual_names"));
}

}  // namespace nilspec::io
