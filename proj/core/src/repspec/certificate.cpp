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
#include "nilspec/repspec/certificate.hpp"

#include <algorithm>
#include <map>

#include "nilspec/registry/codec.hpp"

namespace nilspec::rep {

namespace {

void add(Certificate& c, std::string name, bool passed, std::string detail = {}) {
  c.checked_claims.push_back({std::move(name), passed, std::move(detail)});
}

bool all_passed(const Certificate& c, std::size_t from = 0) {
  for (std::size_t i = from; i < c.checked_claims.size(); ++i)
    if (!c.checked_claims[i].passed) return false;
  return true;
}

json base_inputs(const LatticePair& pair, const CertifyOptions& opts, const char* operation) {
  return json{{"operation", operation},
              {"id", pair.id},
              {"algebra", io::algebra_to_json(*pair.algebra())},
              {"gamma1", io::lattice_to_json(pair.gamma1)},
              {"gamma2", io::lattice_to_json(pair.gamma2)},
              {"metric", io::metric_to_json(pair.metric)},
              {"dual_names", pair.dual_names},
              {"samples", opts.samples},
              {"seed", opts.seed}};
}

std::vector<std::string> quotient_dual_names(const LatticePair& pair, const lie::Quotient& q) {
  std::vector<std::string> out;
  for (auto k : q.kept)
    out.push_back(k < pair.dual_names.size() ? pair.dual_names[k] : q.algebra->names()[out.size()] + "*");
  return out;
}

bool is_signed_permutation(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (m(i, j).abs() != Rat(1)) return false;
      ++nz;
    }
    if (nz != 1) return false;
  }
  return true;
}

void require_shape(const QuotientWitness& w, std::size_t dim) {
  if (w.kind == WitnessKind::composite) {
    if (w.factors.empty()) throw InputError("malformed witness: empty composite");
    for (const auto& f : w.factors) require_shape(f, dim);
  }
  if (w.map.rows() != dim || w.map.cols() != dim)
    throw InputError("malformed witness: map has the wrong shape for the quotient algebra");
  if (!w.map.invertible()) throw InputError("malformed witness: map is singular");
}

/// Structural checks of one witness (recursing into composites).
void check_witness(Certificate& c, const std::string& prefix, const QuotientWitness& w, const NilLieAlgebra& n,
                   const geom::Metric& qmetric, const CertifyOptions& opts) {
  if (w.kind == WitnessKind::composite) {
    for (std::size_t k = 0; k < w.factors.size(); ++k)
      check_witness(c, prefix + ".factor[" + std::to_string(k) + "]", w.factors[k], n, qmetric, opts);
  }
  add(c, prefix + ".automorphism", lie::is_automorphism(n, w.map));
  switch (w.kind) {
    case WitnessKind::identity:
      add(c, prefix + ".identity", w.map == LinearMap::identity(n.dim()));
      break;
    case WitnessKind::isometry: {
      const bool iso = qmetric.is_isometry(w.map);
      const bool sp = iso && is_signed_permutation(qmetric.in_frame(w.map));
      add(c, prefix + ".isometry", iso, sp ? "signed permutation of the orthonormal frame" : "orthogonal in frame");
      break;
    }
    case WitnessKind::almost_inner: {
      auto v = lie::is_almost_inner_2step(n, w.map, opts.samples, opts.seed);
      std::string detail = "verified on " + std::to_string(v.checked) + " samples";
      if (v.global_witness) detail += "; inner via " + n.format(*v.global_witness);
      if (v.counterexample) detail = "counterexample " + n.format(*v.counterexample);
      add(c, prefix + ".almost_inner", v.verified_on_sample, detail);
      break;
    }
    case WitnessKind::inner: {
      auto v = lie::is_almost_inner_2step(n, w.map, opts.samples, opts.seed);
      add(c, prefix + ".inner", v.global_witness.has_value(),
          v.global_witness ? "Ad(exp A) with A = " + n.format(*v.global_witness) : "no global A");
      break;
    }
    case WitnessKind::composite:
      break;
  }
}

/// phi(Gamma1bar) = Gamma2bar, tested on generators both ways.
std::pair<bool, std::string> maps_lattices(const LinearMap& phi, const lattice::LatticeSpec& l1,
                                           const lattice::LatticeSpec& l2) {
  const LinearMap inv = phi.inverse();
  for (std::size_t i = 0; i < l1.dim(); ++i)
    if (!l2.contains(phi(l1.generators()[i])))
      return {false, "image of generator " + std::to_string(i + 1) + " of the first lattice is not a member"};
  for (std::size_t i = 0; i < l2.dim(); ++i)
    if (!l1.contains(inv(l2.generators()[i])))
      return {false, "preimage of generator " + std::to_string(i + 1) + " of the second lattice is not a member"};
  return {true, "generator images are members both ways"};
}

struct QuotientData {
  lie::Quotient q;
  lattice::QuotientLattice l1, l2;
};

QuotientData quotient_data(const LatticePair& pair) {
  const auto& g = *pair.algebra();
  lie::Quotient q = lie::quotient(g, g.center());
  auto l1 = lattice::quotient_lattice(pair.gamma1, q);
  auto l2 = lattice::quotient_lattice(pair.gamma2, q);
  return {std::move(q), std::move(l1), std::move(l2)};
}

json lattice_basis_json(const IntLattice& l) {
  json a = json::array();
  for (const auto& v : l.basis_vectors()) a.push_back(io::to_json(v));
  return a;
}

bool usable_for_equivalence(const QuotientWitness& w) {
  switch (w.kind) {
    case WitnessKind::identity:
    case WitnessKind::almost_inner:
    case WitnessKind::inner:
      return true;
    case WitnessKind::composite:
      return std::all_of(w.factors.begin(), w.factors.end(), usable_for_equivalence);
    case WitnessKind::isometry:
      return false;
  }
  return false;
}

}  // namespace

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::identity: return "identity";
    case WitnessKind::almost_inner: return "almost_inner";
    case WitnessKind::inner: return "inner";
    case WitnessKind::isometry: return "isometry";
    case WitnessKind::composite: return "composite";
  }
  return "?";
}

WitnessKind witness_kind_from_string(const std::string& s) {
  for (auto k : {WitnessKind::identity, WitnessKind::almost_inner, WitnessKind::inner, WitnessKind::isometry,
                 WitnessKind::composite})
    if (to_string(k) == s) return k;
  throw InputError("malformed witness: unknown kind '" + s + "'");
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::isospectral_thm32: return "isospectral_thm32";
    case CertificateKind::rep_equivalent_cor38: return "rep_equivalent_cor38";
    case CertificateKind::not_rep_equivalent: return "not_rep_equivalent";
    case CertificateKind::undetermined: return "undetermined";
  }
  return "?";
}

QuotientWitness QuotientWitness::make(WitnessKind kind, LinearMap map) {
  if (kind == WitnessKind::composite) throw InputError("malformed witness: use composite() for composites");
  return {kind, std::move(map), {}};
}

QuotientWitness QuotientWitness::composite(std::vector<QuotientWitness> factors) {
  if (factors.empty()) throw InputError("malformed witness: empty composite");
  LinearMap m = factors.front().map;
  for (std::size_t k = 1; k < factors.size(); ++k) m = m * factors[k].map;
  return {WitnessKind::composite, std::move(m), std::move(factors)};
}

json witness_to_json(const QuotientWitness& w) {
  json j{{"kind", to_string(w.kind)}, {"map", io::map_to_json(w.map)}};
  if (w.kind == WitnessKind::composite) {
    json f = json::array();
    for (const auto& x : w.factors) f.push_back(witness_to_json(x));
    j["factors"] = f;
  }
  return j;
}

QuotientWitness witness_from_json(const json& j, std::size_t dim) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("malformed witness: missing kind");
  const WitnessKind kind = witness_kind_from_string(j["kind"].get<std::string>());
  if (kind == WitnessKind::composite) {
    if (!j.contains("factors") || !j["factors"].is_array()) throw InputError("malformed witness: missing factors");
    std::vector<QuotientWitness> f;
    for (const auto& x : j["factors"]) f.push_back(witness_from_json(x, dim));
    QuotientWitness w = QuotientWitness::composite(std::move(f));
    if (j.contains("map") && !(io::map_from_json(j["map"], dim) == w.map))
      throw InputError("malformed witness: composite map differs from the product of its factors");
    return w;
  }
  if (!j.contains("map")) throw InputError("malformed witness: missing map");
  return QuotientWitness::make(kind, io::map_from_json(j["map"], dim));
}

std::optional<std::string> Certificate::failing_check() const {
  for (const auto& c : checked_claims)
    if (!c.passed) return c.name;
  return std::nullopt;
}

json Certificate::to_json() const {
  json claims = json::array();
  for (const auto& c : checked_claims)
    claims.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json j{{"kind", to_string(kind)},
         {"verdict", verdict},
         {"checked_claims", claims},
         {"witnesses", witnesses},
         {"inputs", inputs}};
  auto f = failing_check();
  j["failing_check"] = f ? json(*f) : json(nullptr);
  return j;
}

json to_json(const MultiplicityRecord& r, const std::vector<std::string>& dual_names, const NilLieAlgebra& g) {
  return json{{"tau", io::to_json(r.tau.coords())},
              {"tau_text", g.format(r.tau, dual_names)},
              {"occurs", r.occurs},
              {"multiplicity", r.multiplicity.str()},
              {"method", to_string(r.method)}};
}

Certificate certify_theorem_3_2(const LatticePair& pair, const QuotientWitness& witness, const CertifyOptions& opts) {
  const auto& g = *pair.algebra();
  Certificate c;
  c.kind = CertificateKind::isospectral_thm32;
  c.inputs = base_inputs(pair, opts, "theorem_3_2");
  c.inputs["witness"] = witness_to_json(witness);

  const QuotientData qd = quotient_data(pair);
  const auto& n = *qd.q.algebra;
  require_shape(witness, n.dim());

  auto ns = lie::is_strictly_nonsingular_sampled(g, opts.samples, opts.seed);
  add(c, "strict_nonsingularity", ns.verified_on_sample,
      ns.verified_on_sample ? "verified on " + std::to_string(ns.checked) + " samples"
                            : "counterexample X = " + g.format(*ns.counter_x));

  const auto z1 = lattice::center_intersection(pair.gamma1);
  const auto z2 = lattice::center_intersection(pair.gamma2);
  add(c, "center_lattice_equality", z1.lattice == z2.lattice);

  const geom::Metric qm = pair.metric.quotient(qd.q);
  const Rat cov1 = lattice::quotient_covolume(qd.l1.log_lattice, qm);
  const Rat cov2 = lattice::quotient_covolume(qd.l2.log_lattice, qm);
  add(c, "quotient_covolume_equality", cov1 == cov2, "squared covolumes " + cov1.str() + ", " + cov2.str());

  check_witness(c, "witness", witness, n, qm, opts);
  auto [ok, detail] = maps_lattices(witness.map, qd.l1.spec, qd.l2.spec);
  add(c, "witness_maps_lattices", ok, detail);

  c.verdict = all_passed(c);
  c.witnesses = json{{"quotient_map", witness_to_json(witness)},
                     {"center_lattice", lattice_basis_json(z1.lattice)},
                     {"squared_quotient_covolume", cov1.str()}};
  return c;
}

Certificate certify_corollary_3_8(const LatticePair& pair, const std::vector<QuotientWitness>& candidates,
                                  const CertifyOptions& opts) {
  Certificate c;
  c.inputs = base_inputs(pair, opts, "corollary_3_8");
  json cj = json::array();
  for (const auto& w : candidates) cj.push_back(witness_to_json(w));
  c.inputs["candidates"] = cj;

  const QuotientData qd = quotient_data(pair);
  const auto& n = *qd.q.algebra;
  const geom::Metric qm = pair.metric.quotient(qd.q);

  const auto z1 = lattice::center_intersection(pair.gamma1);
  const auto z2 = lattice::center_intersection(pair.gamma2);
  const bool centers = z1.lattice == z2.lattice;
  add(c, "center_lattice_equality", centers);
  c.witnesses["center_lattice"] = lattice_basis_json(z1.lattice);
  if (!centers) {
    c.kind = CertificateKind::not_rep_equivalent;
    c.verdict = true;
    return c;
  }

  std::vector<QuotientWitness> tried = {QuotientWitness::make(WitnessKind::identity, LinearMap::identity(n.dim()))};
  for (const auto& w : candidates) {
    require_shape(w, n.dim());
    if (usable_for_equivalence(w)) tried.push_back(w);
  }
  for (std::size_t k = 0; k < tried.size(); ++k) {
    const std::size_t mark = c.checked_claims.size();
    const std::string prefix = "candidate[" + std::to_string(k) + "]";
    check_witness(c, prefix, tried[k], n, qm, opts);
    auto [ok, detail] = maps_lattices(tried[k].map, qd.l1.spec, qd.l2.spec);
    add(c, prefix + ".maps_lattices", ok, detail);
    if (all_passed(c, mark)) {
      // drop the claims of rejected candidates so the certificate is clean
      std::vector<CheckedClaim> kept = {c.checked_claims.front()};
      kept.insert(kept.end(), c.checked_claims.begin() + static_cast<long>(mark), c.checked_claims.end());
      c.checked_claims = std::move(kept);
      c.kind = CertificateKind::rep_equivalent_cor38;
      c.verdict = true;
      c.witnesses["quotient_map"] = witness_to_json(tried[k]);
      return c;
    }
  }
  std::vector<CheckedClaim> kept = {c.checked_claims.front()};
  c.checked_claims = std::move(kept);

  auto mm = find_occurrence_mismatch(n, qd.l1.log_lattice, qd.l2.log_lattice);
  if (mm) {
    const auto names = quotient_dual_names(pair, qd.q);
    c.kind = CertificateKind::not_rep_equivalent;
    add(c, "occurrence_mismatch", true,
        n.format(mm->tau, names) + ": multiplicity " + mm->gamma1.multiplicity.str() + " vs " +
            mm->gamma2.multiplicity.str());
    c.verdict = true;
    c.witnesses["tau"] = json{{"gamma1", to_json(mm->gamma1, names, n)}, {"gamma2", to_json(mm->gamma2, names, n)}};
    return c;
  }
  c.kind = CertificateKind::undetermined;
  add(c, "decided", false, "no verified witness and no mismatched functional on the search grid");
  c.verdict = false;
  return c;
}

Certificate replay(const json& cert) {
  if (!cert.is_object() || !cert.contains("inputs")) throw InputError("malformed certificate: missing inputs");
  const json& in = cert["inputs"];
  if (!in.contains("operation") || !in.contains("algebra")) throw InputError("malformed certificate: inputs");
  auto g = io::algebra_from_json(in["algebra"]);
  std::vector<std::string> duals;
  if (in.contains("dual_names")) duals = in["dual_names"].get<std::vector<std::string>>();
  LatticePair pair{in.value("id", std::string()), io::lattice_from_json(in.at("gamma1"), g),
                   io::lattice_from_json(in.at("gamma2"), g), io::metric_from_json(in.at("metric"), g), duals};
  CertifyOptions opts;
  opts.samples = in.at("samples").get<std::size_t>();
  opts.seed = in.at("seed").get<std::uint64_t>();
  const std::size_t qdim = g->dim() - g->center().dim();
  const std::string op = in["operation"].get<std::string>();
  if (op == "theorem_3_2") return certify_theorem_3_2(pair, witness_from_json(in.at("witness"), qdim), opts);
  if (op == "corollary_3_8") {
    std::vector<QuotientWitness> cands;
    for (const auto& w : in.at("candidates")) cands.push_back(witness_from_json(w, qdim));
    return certify_corollary_3_8(pair, cands, opts);
  }
  throw InputError("malformed certificate: unknown operation '" + op + "'");
}

bool same_verdicts(const Certificate& a, const Certificate& b) {
  if (a.kind != b.kind || a.verdict != b.verdict || a.checked_claims.size() != b.checked_claims.size())
    return false;
  for (std::size_t i = 0; i < a.checked_claims.size(); ++i)
    if (a.checked_claims[i].name != b.checked_claims[i].name ||
        a.checked_claims[i].passed != b.checked_claims[i].passed)
      return false;
  return true;
}

std::optional<OccurrenceMismatch> find_occurrence_mismatch(const NilLieAlgebra& n, const IntLattice& l1,
                                                           const IntLattice& l2) {
  if (n.step() > 2) throw DomainError("find_occurrence_mismatch: step > 2");
  const std::size_t d = n.dim();
  const Subspace derived = n.series_term(1);
  const auto dbasis = derived.basis();
  std::vector<bool> is_pivot(d, false);
  for (auto p : derived.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> piv, free;
  for (std::size_t k = 0; k < d; ++k) (is_pivot[k] ? piv : free).push_back(k);

  // grids, in order of preference
  const std::vector<Rat> central = {Rat(1), Rat(-1), Rat(2), Rat::parse("1/2"), Rat(0)};
  const std::vector<Rat> loose = {Rat(0), Rat::parse("1/2"), Rat::parse("1/4"), Rat::parse("3/4"), Rat(1)};

  auto tuples = [](std::size_t len, std::size_t nvals, bool zero_last) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(len, 0);
    for (;;) {
      out.push_back(t);
      std::size_t i = 0;
      while (i < len && ++t[i] == nvals) t[i++] = 0;
      if (i == len) break;
    }
    // the value index nvals-1 (central grid) or 0 (loose grid) is zero
    auto nonzeros = [&](const std::vector<std::size_t>& x) {
      std::size_t c = 0;
      for (auto v : x) c += zero_last ? (v != nvals - 1) : (v != 0);
      return c;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      const std::size_t na = nonzeros(a), nb = nonzeros(b);
      if (zero_last && (na == 0) != (nb == 0)) return nb == 0;
      if (na != nb) return na < nb;
      // earlier basis indices first, then smaller grid values
      for (std::size_t i = 0; i < a.size(); ++i) {
        const bool za = zero_last ? a[i] == nvals - 1 : a[i] == 0;
        const bool zb = zero_last ? b[i] == nvals - 1 : b[i] == 0;
        if (za != zb) return zb;
      }
      return a < b;
    });
    return out;
  };

  struct SectorData {
    exact::LatticeSplit s1, s2;
    Rat m1, m2;
  };
  std::map<std::vector<Rat>, SectorData> cache;
  auto sector = [&](const Covec& tau) -> const SectorData& {
    std::vector<Rat> key;
    for (const auto& v : dbasis) key.push_back(tau(v));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RatMatrix k(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) k(j, i) = tau(n.bracket(n.e(i), n.e(j)));
    SectorData sd{exact::split_by_kernel(l1, k), exact::split_by_kernel(l2, k), Rat(1), Rat(1)};
    const bool character = std::all_of(key.begin(), key.end(), [](const Rat& r) { return r.is_zero(); });
    if (!character) {
      sd.m1 = pesce_occurrence_and_multiplicity(n, l1, tau).multiplicity;
      sd.m2 = pesce_occurrence_and_multiplicity(n, l2, tau).multiplicity;
    }
    return cache.emplace(std::move(key), std::move(sd)).first->second;
  };
  auto integral_on = [](const Covec& tau, const std::vector<exact::RatVector>& vs) {
    for (const auto& v : vs)
      if (!tau(Vec(v)).is_integer()) return false;
    return true;
  };

  const auto ctuples = tuples(piv.size(), central.size(), true);
  const auto ftuples = tuples(free.size(), loose.size(), false);
  for (const auto& ct : ctuples) {
    for (const auto& ft : ftuples) {
      Covec tau = Covec::zero(d);
      for (std::size_t a = 0; a < piv.size(); ++a) tau[piv[a]] = central[ct[a]];
      for (std::size_t a = 0; a < free.size(); ++a) tau[free[a]] = loose[ft[a]];
      const SectorData& sd = sector(tau);
      // multiplicities vanish off the occurrence set; m = 0 also possible
      const Rat a = integral_on(tau, sd.s1.kernel_part) ? sd.m1 : Rat(0);
      const Rat b = integral_on(tau, sd.s2.kernel_part) ? sd.m2 : Rat(0);
      if (a != b) {
        OccurrenceMismatch mm{tau, pesce_occurrence_and_multiplicity(n, l1, tau),
                              pesce_occurrence_and_multiplicity(n, l2, tau)};
        if (mm.gamma1.multiplicity != a || mm.gamma2.multiplicity != b)
          throw InternalError("find_occurrence_mismatch: cached sector data disagrees with pesce");
        return mm;
      }
    }
  }
  return std::nullopt;
}

PairingReport orbit_pairing_mod4(const LatticePair& pair, const SectorFlag& flag, const LinearMap& phi,
                                 const std::vector<Covec>& taus, const std::string& sector) {
  const auto& g = *pair.algebra();
  if (!lie::is_automorphism(g, phi)) throw DomainError("orbit_pairing: map is not an automorphism");
  if (!pair.metric.is_isometry(phi)) throw DomainError("orbit_pairing: map is not an isometry");
  const QuotientData qd = quotient_data(pair);
  const auto& n = *qd.q.algebra;
  const LinearMap phibar = qd.q.induced(phi, g.dim());
  const RatMatrix pt = qd.q.projection.matrix().transpose();

  PairingReport rep;
  bool any = false;
  rep.all_ok = true;
  for (const auto& tau : taus) {
    if (tau.dim() != n.dim()) throw DomainError("orbit_pairing: functional has the wrong dimension");
    PairingRow row;
    row.tau = tau;
    row.tau_phi = phibar.pullback(tau);
    row.sector = flag.classify(Covec(pt.apply(tau.coords())));
    row.in_sector = row.sector == sector;
    if (row.in_sector) {
      any = true;
      row.gamma1 = pesce_occurrence_and_multiplicity(n, qd.l1.log_lattice, row.tau);
      row.gamma1_phi = pesce_occurrence_and_multiplicity(n, qd.l1.log_lattice, row.tau_phi);
      row.gamma2 = pesce_occurrence_and_multiplicity(n, qd.l2.log_lattice, row.tau);
      row.gamma2_phi = pesce_occurrence_and_multiplicity(n, qd.l2.log_lattice, row.tau_phi);
      row.orbits_distinct = !lie::coadjoint_orbit_equal_2step(n, row.tau, row.tau_phi);
      row.ok = row.orbits_distinct && row.gamma1.occurs == row.gamma1_phi.occurs &&
               row.gamma1.multiplicity == row.gamma1_phi.multiplicity &&
               row.gamma2.occurs == row.gamma2_phi.occurs &&
               row.gamma2.multiplicity == row.gamma2_phi.multiplicity;
      rep.all_ok = rep.all_ok && row.ok;
    }
    rep.rows.push_back(std::move(row));
  }
  rep.all_ok = rep.all_ok && any;
  return rep;
}

}  // namespace nilspec::rep
