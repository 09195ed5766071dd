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
#include "nilspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilspec/error.hpp"
#include "nilspec/oneform/oneform.hpp"
#include "nilspec/registry/codec.hpp"
#include "nilspec/registry/registry.hpp"
#include "nilspec/repspec/certificate.hpp"
#include "nilspec/repspec/multiplicity.hpp"
#include "nilspec/repspec/search.hpp"

namespace nilspec::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Flags {
  bool json = false;
  std::uint64_t seed = lie::kDefaultSeed;
  std::optional<std::size_t> samples;
  std::optional<long> bound;
  std::optional<std::string> denoms;
  long range = 3;
  std::optional<double> pi;
  std::string sector = "II";
  std::string replay;
  std::string target;
  std::vector<std::string> targets;
};

std::vector<long> parse_denoms(const std::optional<std::string>& csv, std::vector<long> fallback) {
  if (!csv) return fallback;
  std::vector<long> out;
  std::stringstream ss(*csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long d = std::stol(item, &pos);
      if (pos != item.size() || d <= 0) throw std::invalid_argument(item);
      out.push_back(d);
    } catch (const std::logic_error&) {
      throw InputError("invalid --denoms '" + *csv + "': expected positive integers separated by commas");
    }
  }
  if (out.empty()) throw InputError("invalid --denoms: empty list");
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

/// Example id from the registry, or a path to a record in the registry schema.
registry::ExampleRecord resolve(const std::string& target) {
  const auto& ids = registry::example_ids();
  if (std::find(ids.begin(), ids.end(), target) != ids.end()) return registry::load(target);
  if (target.find('/') != std::string::npos || target.size() > 5) {
    if (!fs::exists(target)) throw InputError("cannot open " + target);
    return registry::record_from_json(registry::read_json_file(target), registry::data_dir());
  }
  return registry::load(target);  // reports the unknown id
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Flags& f, std::ostream& out, std::ostream& err) {
  auto g = io::algebra_from_json(registry::read_json_file(f.target));
  const auto rep = lie::validate(*g);
  json viol = json::array();
  for (const auto& v : rep.violations)
    viol.push_back(json::array({g->names()[v.i], g->names()[v.j], g->names()[v.k]}));
  json series = json::array();
  for (const auto& s : rep.series) series.push_back(s.dim());
  json j{{"file", f.target},     {"dim", g->dim()},        {"names", g->names()},   {"jacobi_ok", rep.jacobi_ok},
         {"violations", viol},   {"nilpotent", rep.nilpotent}, {"step", rep.step}, {"series_dims", series}};
  if (f.json) {
    emit(out, j);
  } else {
    out << "algebra " << f.target << ": dim " << g->dim() << "\n";
    out << "  jacobi: " << (rep.jacobi_ok ? "ok" : "FAILS") << "\n";
    for (const auto& v : viol) out << "    violating triple (" << v[0].get<std::string>() << ", "
                                   << v[1].get<std::string>() << ", " << v[2].get<std::string>() << ")\n";
    if (rep.jacobi_ok) {
      out << "  nilpotent: " << (rep.nilpotent ? "yes" : "no") << "\n";
      if (rep.nilpotent) out << "  step: " << rep.step << "\n";
    }
  }
  if (!rep.jacobi_ok) {
    const auto& v = rep.violations.front();
    err << "error: Jacobi identity fails for (" << g->names()[v.i] << ", " << g->names()[v.j] << ", "
        << g->names()[v.k] << ")\n";
    return kInputError;
  }
  if (!rep.nilpotent) {
    err << "error: algebra is not nilpotent\n";
    return kInputError;
  }
  return kSuccess;
}

// ----------------------------------------------------------------- certify

std::string claim_summary(const rep::Certificate& c) {
  if (auto bad = c.failing_check()) return "failed check " + *bad;
  return "all " + std::to_string(c.checked_claims.size()) + " checks passed";
}

int cmd_replay(const Flags& f, std::ostream& out) {
  const json doc = registry::read_json_file(f.replay);
  json list = doc.is_object() && doc.contains("certificates") ? doc["certificates"] : json::array({doc});
  if (!list.is_array() || list.empty()) throw InputError("malformed certificate file " + f.replay);
  json rows = json::array();
  bool all_same = true;
  for (const auto& cj : list) {
    if (!cj.is_object() || !cj.contains("kind") || !cj.contains("verdict"))
      throw InputError("malformed certificate in " + f.replay + ": missing kind or verdict");
    const auto again = rep::replay(cj);
    const json aj = again.to_json();
    const bool same = aj["kind"] == cj["kind"] && aj["verdict"] == cj["verdict"] &&
                      aj["checked_claims"] == cj.value("checked_claims", json::array());
    all_same = all_same && same;
    rows.push_back(json{{"kind", aj["kind"]}, {"verdict", aj["verdict"]}, {"identical_verdict", same}});
  }
  if (f.json) {
    emit(out, json{{"replayed", rows}, {"all_identical", all_same}});
  } else {
    for (const auto& r : rows)
      out << r["kind"].get<std::string>() << ": verdict " << (r["verdict"].get<bool>() ? "true" : "false")
          << (r["identical_verdict"].get<bool>() ? " (replay identical)" : " (REPLAY DIFFERS)") << "\n";
  }
  return all_same ? kSuccess : kNegative;
}

int cmd_certify(const Flags& f, std::ostream& out) {
  if (!f.replay.empty()) return cmd_replay(f, out);
  if (f.target.empty()) throw InputError("certify needs an example id, a record file, or --replay <cert.json>");
  const auto r = resolve(f.target);
  rep::CertifyOptions opts;
  opts.seed = f.seed;
  if (f.samples) opts.samples = *f.samples;
  const auto iso = rep::certify_theorem_3_2(r.pair, r.witnesses.front(), opts);
  const auto eq = rep::certify_corollary_3_8(r.pair, r.witnesses, opts);
  const bool rep_yes = eq.kind == rep::CertificateKind::rep_equivalent_cor38 && eq.verdict;

  if (f.json) {
    emit(out, json{{"example", r.id},
                   {"seed", f.seed},
                   {"samples", opts.samples},
                   {"certificates", json::array({iso.to_json(), eq.to_json()})}});
  } else {
    out << "example " << r.id << "\n";
    out << "  isospectral: " << (iso.verdict ? "YES" : "NO") << " (" << claim_summary(iso) << ")\n";
    out << "  representation equivalent: ";
    if (rep_yes) {
      out << "YES via " << eq.witnesses["quotient_map"].value("kind", std::string("?")) << " quotient witness";
    } else if (eq.kind == rep::CertificateKind::not_rep_equivalent && eq.verdict) {
      const auto& t = eq.witnesses["tau"];
      out << "NO: tau = " << t["gamma1"].value("tau_text", std::string()) << " has multiplicity "
          << t["gamma1"].value("multiplicity", std::string()) << " vs " << t["gamma2"].value("multiplicity", std::string());
    } else {
      out << "undetermined";
    }
    out << "\n  seed " << f.seed << ", " << opts.samples << " samples\n";
  }
  return iso.verdict && rep_yes ? kSuccess : kNegative;
}

// ---------------------------------------------------------- multiplicities

std::vector<std::vector<exact::Rat>> grid(std::size_t n, const std::vector<exact::Rat>& values) {
  std::vector<std::vector<exact::Rat>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<exact::Rat>> next;
    for (const auto& p : out)
      for (const auto& v : values) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

int cmd_multiplicities(const Flags& f, std::ostream& out) {
  const auto r = resolve(f.target);
  if (f.range < 1 || f.range > 20) throw InputError("--range must be between 1 and 20");
  const auto& g = *r.algebra();
  const auto labels = r.flag.labels();
  std::optional<std::size_t> level;  // chain index; chain.size() for the character sector
  const std::size_t m = r.flag.chain().size();
  for (std::size_t j = 0; j <= m; ++j)
    if ((j < m ? r.flag.label_of(j) : std::string("I")) == f.sector) level = j;
  if (!level) {
    std::string known;
    for (const auto& l : labels) known += (known.empty() ? "" : ", ") + l;
    throw InputError("unknown sector '" + f.sector + "' (known: " + known + ")");
  }
  const std::size_t j = *level;

  auto in = [&](std::size_t member, const std::string& name) {
    const auto& v = r.flag_names[member];
    return std::find(v.begin(), v.end(), name) != v.end();
  };
  // Coordinates: the sector coordinate runs over 1..range, earlier chain
  // coordinates vanish, the remaining ones run over {0, 1/2}.
  std::optional<std::size_t> sector_coord;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const std::string& name = g.names()[i];
    const bool inner = j > 0 && j <= m && in(j - 1, name);
    const bool member = j < m && in(j, name);
    if (j == m && in(m - 1, name)) continue;
    if (inner) continue;
    if (member && !sector_coord) sector_coord = i;
    else if (!member) free.push_back(i);
  }
  const bool top = j == 0;
  std::vector<lie::Covec> taus;
  if (top) {
    for (long c = -f.range; c <= f.range; ++c) {
      if (c == 0) continue;
      lie::Covec t = lie::Covec::zero(g.dim());
      t[*sector_coord] = exact::Rat(c);
      taus.push_back(t);
    }
  } else {
    const auto pts = grid(free.size(), {exact::Rat(0), exact::Rat(1, 2)});
    const long cmax = sector_coord ? f.range : 1;
    for (long c = 1; c <= cmax; ++c)
      for (const auto& p : pts) {
        lie::Covec t = lie::Covec::zero(g.dim());
        if (sector_coord) t[*sector_coord] = exact::Rat(c);
        for (std::size_t k = 0; k < free.size(); ++k) t[free[k]] = p[k];
        taus.push_back(t);
      }
  }

  const auto q = lie::quotient(g, g.center());
  std::optional<lattice::QuotientLattice> q1, q2;
  if (!top) {
    q1 = lattice::quotient_lattice(r.pair.gamma1, q);
    q2 = lattice::quotient_lattice(r.pair.gamma2, q);
  }
  auto to_quotient = [&](const lie::Covec& t) {
    lie::Covec tq = lie::Covec::zero(q.kept.size());
    for (std::size_t k = 0; k < q.kept.size(); ++k) tq[k] = t[q.kept[k]];
    return tq;
  };
  auto record_json = [](const rep::MultiplicityRecord& m) {
    return json{{"occurs", m.occurs}, {"multiplicity", m.multiplicity.str()}, {"method", rep::to_string(m.method)}};
  };

  json rows = json::array();
  for (const auto& t : taus) {
    rep::MultiplicityRecord m1, m2;
    if (top) {
      m1 = rep::moore_wolf_multiplicity(r.pair.gamma1, t);
      m2 = rep::moore_wolf_multiplicity(r.pair.gamma2, t);
    } else {
      const auto tq = to_quotient(t);
      m1 = rep::pesce_occurrence_and_multiplicity(*q.algebra, q1->log_lattice, tq);
      m2 = rep::pesce_occurrence_and_multiplicity(*q.algebra, q2->log_lattice, tq);
    }
    rows.push_back(json{{"tau", io::to_json(t.coords())},
                        {"tau_text", g.format(t, r.pair.dual_names)},
                        {"gamma1", record_json(m1)},
                        {"gamma2", record_json(m2)}});
  }

  if (f.json) {
    emit(out, json{{"example", r.id}, {"sector", f.sector}, {"range", f.range}, {"rows", rows}});
    return kSuccess;
  }
  out << "example " << r.id << ", sector " << f.sector << " (" << rows.size() << " functionals)\n";
  std::size_t width = 3;
  for (const auto& row : rows) width = std::max(width, row["tau_text"].get<std::string>().size());
  out << std::left << std::setw(int(width) + 2) << "tau" << std::setw(22) << "gamma1" << "gamma2\n";
  for (const auto& row : rows) {
    auto cell = [](const json& c) {
      return c["occurs"].get<bool>() ? c["multiplicity"].get<std::string>() + " (" + c["method"].get<std::string>() + ")"
                                     : std::string("-");
    };
    out << std::left << std::setw(int(width) + 2) << row["tau_text"].get<std::string>() << std::setw(22)
        << cell(row["gamma1"]) << cell(row["gamma2"]) << "\n";
  }
  return kSuccess;
}

// ------------------------------------------------------------- distinguish

int cmd_distinguish(const Flags& f, std::ostream& out) {
  const auto r = resolve(f.target);
  if (!r.lambda) throw InputError("example " + r.id + " carries no eigenvalue candidate (available: III, IV, V)");
  const auto in = r.distinguish_input(f.samples.value_or(60), f.seed);
  const auto rep = oneform::distinguish_pair(in);
  json j = rep.to_json(in);

  bool numeric_ok = true;
  if (f.pi) {
    json checks = json::array();
    const double lam = r.lambda->numeric(*f.pi);
    auto check = [&](const std::vector<oneform::TauOutcome>& per, const char* which) {
      for (const auto& t : per) {
        if (!t.det_zero) continue;
        const auto e = oneform::assemble_E(r.pair.metric, oneform::CharacterWave::make(*r.algebra(), t.tau));
        const auto spec = oneform::numeric_spectrum(e, *f.pi);
        double best = std::numeric_limits<double>::infinity();
        for (double ev : spec) best = std::min(best, std::abs(ev - lam));
        const bool ok = best <= 1e-9;
        numeric_ok = numeric_ok && ok;
        std::ostringstream d;
        d << std::scientific << std::setprecision(3) << best;
        checks.push_back(json{{"lattice", which},
                              {"tau", oneform::format_tau(t.tau, r.pair.metric, in.frame_dual_names)},
                              {"distance", d.str()},
                              {"ok", ok}});
      }
    };
    check(rep.per_tau1, "gamma1");
    check(rep.per_tau2, "gamma2");
    std::ostringstream ps, ls;
    ps << std::setprecision(17) << *f.pi;
    ls << std::setprecision(17) << lam;
    j["numeric_oracle"] = json{{"pi", ps.str()}, {"lambda", ls.str()}, {"tolerance", "1e-9"}, {"checks", checks},
                               {"ok", numeric_ok}};
  }

  if (f.json) {
    emit(out, j);
  } else {
    out << "example " << r.id << ": shell |tau|^2 = " << rep.s2_target.str() << " has " << rep.shell1.size()
        << " and " << rep.shell2.size() << " character functionals\n";
    for (const auto& sc : rep.sector_checks)
      out << "  sector " << sc.sector << " (" << sc.method << "): " << (sc.verified ? "equal" : "UNVERIFIED")
          << (sc.detail.empty() ? "" : " - " + sc.detail) << "\n";
    if (j.contains("numeric_oracle"))
      out << "  numeric oracle at pi = " << j["numeric_oracle"]["pi"].get<std::string>() << ": "
          << (numeric_ok ? "agrees" : "DISAGREES") << " within 1e-9\n";
    out << rep.verdict << "\n";
  }
  return rep.distinguished && numeric_ok ? kSuccess : kNegative;
}

// ------------------------------------------------------------------ table1

int cmd_table1(const Flags& f, std::ostream& out) {
  registry::TableOptions opts;
  opts.seed = f.seed;
  opts.certify.seed = f.seed;
  if (f.samples) opts.samples = *f.samples;
  if (f.bound) opts.search.coeff_bound = *f.bound;
  opts.search.denominators = parse_denoms(f.denoms, opts.search.denominators);
  const auto ids = f.targets.empty() ? registry::example_ids() : f.targets;
  const auto t = registry::table_one(ids, opts);
  if (f.json) emit(out, t.to_json());
  else out << t.to_text();
  return t.all_match ? kSuccess : kNegative;
}

// -------------------------------------------------------------- search-iso

int cmd_search(const Flags& f, std::ostream& out) {
  const auto r = resolve(f.target);
  rep::SearchOptions opts;
  opts.coeff_bound = f.bound.value_or(4);
  if (opts.coeff_bound < 0) throw InputError("--bound must be non-negative");
  opts.denominators = parse_denoms(f.denoms, {1, 2, 4});
  const auto s = rep::bounded_lattice_isomorphism_search(r.pair.gamma1, r.pair.gamma2, opts);
  json result = s.to_json(*r.algebra());
  const std::string outcome = s.found ? "found" : "none_within_bound";
  if (f.json) {
    emit(out, json{{"example", r.id},
                   {"bound", opts.coeff_bound},
                   {"denominators", opts.denominators},
                   {"outcome", outcome},
                   {"result", result},
                   {"note", "bounded search: a negative outcome is evidence, not a proof"}});
  } else {
    out << "example " << r.id << ": bounded isomorphism search (bound " << opts.coeff_bound << ", denominators {";
    for (std::size_t i = 0; i < opts.denominators.size(); ++i) out << (i ? "," : "") << opts.denominators[i];
    out << "}, " << s.nodes << " nodes, " << s.leaves << " leaves)\n";
    if (s.found) {
      out << "  found Psi with Psi(Gamma1) = Gamma2:\n";
      for (const auto& name : r.algebra()->names())
        out << "    " << name << " -> " << result["images"][name].get<std::string>() << "\n";
    } else {
      out << "  none_within_bound: no isomorphism within bound (evidence, not a proof)\n";
    }
  }
  return s.found ? kSuccess : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for isospectral nilmanifold pairs", "nilspec"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "Print a JSON report");
  app.add_option("--seed", f.seed, "Seed for sampled checks");
  app.add_option("--samples", f.samples, "Sample count for sampled checks");
  app.add_option("--bound", f.bound, "Coefficient bound for the isomorphism search");
  app.add_option("--denoms", f.denoms, "Denominators for the isomorphism search, comma separated");
  app.add_option("--range", f.range, "Largest sector coordinate for multiplicities");
  app.add_option("--pi", f.pi, "Value of pi for the numeric oracle in distinguish");

  auto* validate = app.add_subcommand("validate", "Validate an algebra JSON file");
  validate->add_option("algebra", f.target, "Algebra JSON file")->required();
  auto* certify = app.add_subcommand("certify", "Isospectrality and representation-equivalence certificates");
  certify->add_option("target", f.target, "Example id or example record file");
  certify->add_option("--replay", f.replay, "Re-verify certificates from a JSON file");
  auto* mult = app.add_subcommand("multiplicities", "Multiplicity table for one sector");
  mult->add_option("id", f.target, "Example id or record file")->required();
  mult->add_option("--sector", f.sector, "Sector label (I, II, ...)");
  auto* dist = app.add_subcommand("distinguish", "One-form comparison at the example's eigenvalue candidate");
  dist->add_option("id", f.target, "Example id or record file")->required();
  auto* table = app.add_subcommand("table1", "Recompute the computable columns of the example table");
  table->add_option("ids", f.targets, "Example ids (default: all)");
  auto* search = app.add_subcommand("search-iso", "Bounded search for a lattice isomorphism");
  search->add_option("id", f.target, "Example id or record file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(f, out, err);
    if (certify->parsed()) return cmd_certify(f, out);
    if (mult->parsed()) return cmd_multiplicities(f, out);
    if (dist->parsed()) return cmd_distinguish(f, out);
    if (table->parsed()) return cmd_table1(f, out);
    if (search->parsed()) return cmd_search(f, out);
  } catch (const ModulusMismatch& e) {
    err << "error: modulus mismatch: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: unsupported input: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace nilspec::cli
