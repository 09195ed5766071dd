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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nilspec/cli.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = nilspec::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("nilspec_cli_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("cli distinguish prints the one-form verdict") {
  auto r = run({"distinguish", "III"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "lambda = pi^2 + 1: multiplicity 0 vs 2 -> not one-form isospectral"));
  auto iv = run({"distinguish", "IV", "--json"});
  CHECK(iv.code == 0);
  CHECK(has(iv.out, "multiplicity 2 vs 0"));
  auto none = run({"distinguish", "I"});
  CHECK(none.code == 2);
  CHECK(has(none.err, "no eigenvalue candidate"));
}

TEST_CASE("cli distinguish numeric oracle") {
  for (const char* id : {"III", "IV"}) {
    auto r = run({"distinguish", id, "--json", "--pi", "3.141592653589793"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"numeric_oracle\""));
    CHECK_FALSE(has(r.out, "\"ok\": false"));
  }
}

TEST_CASE("cli certify exit codes and replay") {
  auto i = run({"certify", "I"});
  CHECK(i.code == 0);
  CHECK(has(i.out, "representation equivalent: YES via almost_inner"));
  auto iii = run({"certify", "III"});
  CHECK(iii.code == 1);
  CHECK(has(iii.out, "isospectral: YES"));
  CHECK(has(iii.out, "representation equivalent: NO"));

  auto j = run({"certify", "V", "--json"});
  REQUIRE(j.code == 1);
  const auto cert = scratch("cert.json", j.out);
  auto rp = run({"certify", "--replay", cert.string()});
  CHECK(rp.code == 0);
  CHECK(has(rp.out, "replay identical"));
  CHECK_FALSE(has(rp.out, "DIFFERS"));

  std::string tampered = j.out;
  const auto pos = tampered.find("\"verdict\": true");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 15, "\"verdict\": false");
  auto bad = run({"certify", "--replay", scratch("tampered.json", tampered).string()});
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "REPLAY DIFFERS"));

  auto none = run({"certify"});
  CHECK(none.code == 2);
}

TEST_CASE("cli certify accepts a record file") {
  const char* data = std::getenv("NILSPEC_DATA");
  REQUIRE(data != nullptr);
  auto r = run({"certify", (fs::path(data) / "examples" / "II.json").string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "example II"));
}

TEST_CASE("cli input errors have distinct messages and exit 2") {
  auto unknown = run({"certify", "VI"});
  CHECK(unknown.code == 2);
  CHECK(has(unknown.err, "unknown example 'VI'"));

  auto malformed = run({"validate", scratch("malformed.json", "{ \"dim\": ").string()});
  CHECK(malformed.code == 2);
  CHECK(has(malformed.err, "malformed JSON"));

  auto missing = run({"validate", "/nonexistent/alg.json"});
  CHECK(missing.code == 2);
  CHECK(has(missing.err, "cannot open"));

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"search-iso", "II", "--denoms", "1,0"}).code == 2);
  CHECK(run({"search-iso", "II", "--bound", "x"}).code == 2);
  auto sector = run({"multiplicities", "III", "--sector", "VII"});
  CHECK(sector.code == 2);
  CHECK(has(sector.err, "unknown sector"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli validate lists the violating Jacobi triple") {
  // [A, B] = C, [A, C] = A: J(A, B, C) = -C.
  const auto bad = scratch("jacobi.json",
                           R"({"dim": 3, "names": ["A", "B", "C"], "brackets": [[0, 1, [[2, "1"]]], [0, 2, [[0, "1"]]]]})");
  auto r = run({"validate", bad.string()});
  CHECK(r.code == 2);
  CHECK(has(r.out, "violating triple (A, B, C)"));
  CHECK(has(r.err, "Jacobi identity fails for (A, B, C)"));

  const char* data = std::getenv("NILSPEC_DATA");
  REQUIRE(data != nullptr);
  auto ok = run({"validate", (fs::path(data) / "algebras" / "alg7.json").string(), "--json"});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "\"step\": 3"));
}

TEST_CASE("cli multiplicities") {
  auto ii = run({"multiplicities", "III", "--sector", "II", "--range", "3", "--json"});
  CHECK(ii.code == 0);
  CHECK(has(ii.out, "\"sector\": \"II\""));
  auto text = run({"multiplicities", "III", "--sector", "II", "--range", "1"});
  CHECK(has(text.out, "1/2 alpha2 + zeta2"));
  auto top = run({"multiplicities", "I", "--sector", "IV", "--range", "2"});
  CHECK(top.code == 0);
  CHECK(has(top.out, "moore_wolf"));
  auto chars = run({"multiplicities", "IV", "--sector", "I"});
  CHECK(has(chars.out, "character"));
}

TEST_CASE("cli search-iso outcomes are labeled as evidence") {
  auto ii = run({"search-iso", "II", "--bound", "4", "--denoms", "1,2,4"});
  CHECK(ii.code == 0);
  CHECK(has(ii.out, "X1 -> X1 + 1/2 Y2"));
  CHECK(has(ii.out, "Y1 -> Y1 + 1/2 Z"));
  auto iv = run({"search-iso", "IV", "--bound", "4", "--denoms", "1,2,4"});
  CHECK(iv.code == 1);
  CHECK(has(iv.out, "none_within_bound"));
  CHECK(has(iv.out, "not a proof"));
}

TEST_CASE("cli json output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> cmds = {
      {"distinguish", "III", "--json"},
      {"certify", "I", "--json", "--seed", "7"},
      {"search-iso", "IV", "--json", "--bound", "2"},
      {"multiplicities", "IV", "--sector", "II", "--json"},
      {"table1", "III", "IV", "--json", "--bound", "1"},
  };
  for (const auto& c : cmds) {
    INFO(c[0]);
    auto a = run(c), b = run(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    CHECK(!a.out.empty());
  }
  auto s1 = run({"certify", "I", "--json", "--seed", "1"});
  auto s2 = run({"certify", "I", "--json", "--seed", "2"});
  CHECK(s1.out != s2.out);
}

TEST_CASE("cli table1 on a subset") {
  auto r = run({"table1", "III", "IV", "--bound", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "not a proof"));
  CHECK(has(r.out, "out of scope"));
}

TEST_CASE("cli honours NILSPEC_DATA") {
  const char* prev = std::getenv("NILSPEC_DATA");
  const std::string saved = prev ? prev : "";
  setenv("NILSPEC_DATA", "/nonexistent/nilspec-data", 1);
  auto r = run({"certify", "I"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "/nonexistent/nilspec-data"));
  if (prev) setenv("NILSPEC_DATA", saved.c_str(), 1);
  else unsetenv("NILSPEC_DATA");
}
