// Copyright 2026 The zwtick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "zwtick/normalform.hpp"
#include "zwtick/random.hpp"
#include "zwtick/rules.hpp"
#include "zwtick/semantics.hpp"

using namespace zwtick;

TEST_CASE("schema inventory") {
  std::set<std::string> names;
  for (const RuleSchema& r : axiom_schemas()) names.insert(r.name);
  for (const char* n : {"zs", "id", "fl", "ws", "in", "rm", "di", "b", "ho", "ad", "bw", "fw", "fz", "fi", "yb", "fr",
                        "fs", "nz", "nw", "nf", "zt", "tl", "th", "td", "snake", "swap-nat", "flex-z", "flex-w",
                        "flex-tick", "tick-snake"}) {
    CAPTURE(n);
    CHECK(names.count(n) == 1);
  }
  CHECK(names.size() == 30);
  CHECK_THROWS_AS(find_rule("nope"), std::out_of_range);
}

TEST_CASE("instantiate examples") {
  auto [l, r] = instantiate(find_rule("id"), {});
  CHECK(l == z_spider(Scalar(1), 1, 1));
  CHECK(r == id(1));
  RuleParams p;
  p.r = Scalar(1);
  p.s = Scalar(-1);
  p.m = 1;
  auto [al, ar] = instantiate(find_rule("ad"), p);
  CHECK(ar == z_spider(Scalar(0), 0, 1));
  CHECK(diagrams_equal(al, ar));
  RuleParams b01;
  b01.n = 0;
  b01.m = 1;
  CHECK_THROWS_AS(instantiate(find_rule("b"), b01), SideConditionError);
  RuleParams b00;
  CHECK_NOTHROW(instantiate(find_rule("b"), b00));
  RuleParams wide;
  wide.n = 4;
  CHECK_THROWS_AS(instantiate(find_rule("zs"), wide), SideConditionError);
}

TEST_CASE("sample grid") {
  CHECK(sample_scalars().size() == 7);
  CHECK(sample_params(find_rule("zs")).size() == 7 * 7 * 16);
  CHECK(sample_params(find_rule("b")).size() == 13);
  CHECK(sample_params(find_rule("fi")).size() == 1);
}

TEST_CASE("tick-free schemas hold under the pure interpretation too") {
  for (const RuleSchema& r : axiom_schemas()) {
    if (r.group != "zw") continue;
    for (const RuleParams& p : sample_params(r)) {
      if (p.n + p.m > 4) continue;
      auto [lhs, rhs] = instantiate(r, p);
      CAPTURE(r.name);
      CHECK(oracle::interp(lhs) == oracle::interp(rhs));
    }
  }
}

TEST_CASE("mutated schemas are caught") {
  RuleSchema fl = find_rule("fl");
  fl.rhs = [](const RuleParams&) { return z_spider(Scalar(1), 1, 1); };
  Report rep = check_soundness(fl, sample_params(fl));
  CHECK(rep.failed() == 1);
  RuleSchema nz = find_rule("nz");
  nz.rhs = [](const RuleParams& p) { return Diagram::compose(z_spider(p.r, p.n, p.m), tensor_power(tick(), p.n)); };
  Report rep2 = check_soundness(nz, sample_params(nz));
  CHECK(rep2.failed() > 0);
}

TEST_CASE("report formats") {
  Report rep = check_soundness(find_rule("nf"), sample_params(find_rule("nf")));
  CHECK(rep.text() == "RULE nf - PASS\n1/1/0 failures\n");
  std::istringstream lines(rep.json_lines());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.is_object());
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("lemma corpus") {
  auto corpus = lemma_corpus();
  CHECK(corpus.size() >= 30);
  std::set<std::string> names;
  for (const auto& e : corpus) names.insert(e.name);
  for (const char* n : {"ti", "snake-1", "obvious", "obvious-2", "untitled", "E3-through-Z", "E3-through-W",
                        "ground-removed-by-E3", "sum-branch-NF", "ground-phase", "ground-scalar", "ground-Z",
                        "ground-fswap", "ground-H"}) {
    CAPTURE(n);
    CHECK(names.count(n) == 1);
  }
  Report rep = check_corpus(corpus);
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
  }
}

TEST_CASE("tick-free corpus entries hold under plain interp") {
  for (const auto& e : lemma_corpus()) {
    if (e.lhs.has_tick() || e.rhs.has_tick()) continue;
    CAPTURE(e.name);
    CHECK(interp(e.lhs) == interp(e.rhs));
  }
}

TEST_CASE("daggering an asymmetric corpus side is caught") {
  std::vector<CorpusEntry> mutated;
  for (const auto& e : lemma_corpus())
    if (e.name == "obvious-2" || e.name == "untitled" || e.name == "E3-through-Z" || e.name == "fswap-unit")
      mutated.push_back({e.name, e.lhs, dagger(e.rhs), e.source});
  REQUIRE(mutated.size() == 4);
  Report rep = check_corpus(mutated);
  CHECK(rep.failed() == 4);
}

TEST_CASE("apply_rule examples") {
  const Scalar r = Scalar::omega(1);
  RuleParams p;
  p.r = r;
  p.n = 1;
  p.m = 1;
  Diagram d = Diagram::compose(tick(), z_spider(r, 1, 1));
  Diagram out = apply_rule(d, find_rule("nz"), p, {});
  CHECK(out == Diagram::compose(z_spider(r.conj(), 1, 1), tick()));
  CHECK_THROWS_AS(apply_rule(tick(), find_rule("id"), {}, {}), MatchError);
  CHECK_THROWS_AS(apply_rule(d, find_rule("id"), {}, {0, 0}), MatchError);
}

TEST_CASE("matching is modulo associativity") {
  Diagram lhs = compose_all({tick(), not_gate(), tick()});
  Diagram other = Diagram::compose(Diagram::compose(tick(), not_gate()), tick());
  CHECK(lhs != other);
  CHECK(equal_modulo_associativity(lhs, other));
  CHECK(equal_modulo_associativity(id(2), Diagram::tensor(id(1), id(1))));
  CHECK_FALSE(equal_modulo_associativity(Diagram::compose(tick(), not_gate()), Diagram::compose(not_gate(), tick())));
  Diagram ctx = Diagram::tensor(other, id(1));
  Diagram rewritten = rewrite_at(ctx, {0}, lhs, not_gate());
  CHECK(rewritten == Diagram::tensor(not_gate(), id(1)));
}

TEST_CASE("scripted tick involution") {
  // tick . (id . tick): insert Z(1) for the identity, then move the tick through it.
  Diagram d = Diagram::compose(tick(), Diagram::compose(id(1), tick()));
  Diagram step1 = apply_rule(d, find_rule("id"), {}, {1, 0}, Direction::RightToLeft);
  CHECK(step1 == Diagram::compose(tick(), Diagram::compose(z_spider(Scalar(1), 1, 1), tick())));
  RuleParams p;
  p.r = Scalar(1);
  p.n = 1;
  p.m = 1;
  Diagram step2 = apply_rule(step1, find_rule("nz"), p, {1}, Direction::RightToLeft);
  CHECK(step2 == Diagram::compose(tick(), Diagram::compose(tick(), z_spider(Scalar(1), 1, 1))));
  CHECK(diagrams_equal(step2, id(1)));
}

TEST_CASE("rewriting preserves canonical forms") {
  Rng rng(50);
  const auto& schemas = axiom_schemas();
  int applied = 0;
  for (int t = 0; t < 60; ++t) {
    const RuleSchema& rule = schemas[rng() % schemas.size()];
    auto params = sample_params(rule);
    RuleParams p = params[rng() % params.size()];
    if (p.n + p.m > 4) continue;
    auto [lhs, rhs] = instantiate(rule, p);
    TermOptions o{3, 3, true, true, lhs.outputs() + 1, {}};
    Diagram after = random_diagram(rng, o);
    Diagram d = Diagram::compose(after, Diagram::tensor(lhs, id(1)));
    Diagram e = apply_rule(d, rule, p, {1, 0});
    CHECK(canonical_of_map(d) == canonical_of_map(e));
    ++applied;
  }
  CHECK(applied > 20);
}
