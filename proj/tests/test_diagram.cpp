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

#include <algorithm>
#include <regex>

#include "oracle.hpp"
#include "zwtick/diagram.hpp"
#include "zwtick/random.hpp"

using namespace zwtick;

namespace {

// Arity recomputed from scratch, ignoring the cached values.
std::pair<unsigned, unsigned> arity_of(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Gen: return {d.generator().inputs, d.generator().outputs};
    case Diagram::Kind::Compose: return {arity_of(d.second()).first, arity_of(d.first()).second};
    case Diagram::Kind::Tensor: {
      auto a = arity_of(d.first()), b = arity_of(d.second());
      return {a.first + b.first, a.second + b.second};
    }
  }
  return {};
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("build examples") {
  Diagram scalar = Diagram::compose(cup(), cap());
  CHECK(scalar.inputs() == 0);
  CHECK(scalar.outputs() == 0);
  CHECK_THROWS_AS(Diagram::compose(tick(), cup()), ArityError);
  try {
    Diagram::compose(tick(), cup());
  } catch (const ArityError& e) {
    const std::string what = e.what();
    CHECK(what.find("1->1") != std::string::npos);
    CHECK(what.find("2->0") != std::string::npos);
  }
  Diagram two = Diagram::tensor(id(1), tick());
  CHECK(two.inputs() == 2);
  CHECK(two.outputs() == 2);
}

TEST_CASE("derived constructors have the stated arities") {
  CHECK(ground().inputs() == 1);
  CHECK(ground().outputs() == 0);
  CHECK(ket0().outputs() == 1);
  CHECK(ket1().outputs() == 1);
  CHECK(bra0().inputs() == 1);
  CHECK(bra1().inputs() == 1);
  CHECK(ticked_cup().inputs() == 2);
  CHECK(ticked_cap().outputs() == 2);
  Matrix x(2, 2);
  x(0, 1) = Scalar(1);
  x(1, 0) = Scalar(1);
  CHECK(oracle::interp(not_gate()) == x);
  Matrix one(2, 1);
  one(1, 0) = Scalar(1);
  CHECK(oracle::interp(ket1()) == one);
}

TEST_CASE("dagger") {
  CHECK(dagger(cup()) == cap());
  CHECK(dagger(cap()) == cup());
  CHECK(dagger(z_spider(Scalar::omega(1), 1, 2)) == z_spider(-Scalar::omega(3), 2, 1));
  CHECK(dagger(tick()) == tick());
  CHECK(dagger(fswap()) == fswap());
  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_diagram(rng, {8, 3, true, true, {}, {}});
    Diagram dd = dagger(d);
    CHECK(dd.inputs() == d.outputs());
    CHECK(dd.outputs() == d.inputs());
    CHECK(dagger(dd) == d);
  }
}

TEST_CASE("cached arities agree with the recursive computation") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_diagram(rng, {8, 4, true, true, {}, {}});
    auto [in, out] = arity_of(d);
    CHECK(in == d.inputs());
    CHECK(out == d.outputs());
  }
}

TEST_CASE("parse examples") {
  Diagram a = parse_diagram("(compose cap (id 0))");
  CHECK(a.inputs() == 0);
  CHECK(a.outputs() == 2);
  CHECK(parse_diagram("(z 1/2 1 2)") == z_spider(Scalar::rational(1, 2), 1, 2));
  Diagram t = parse_diagram("(tensor tick tick)");
  CHECK(t.inputs() == 2);
  CHECK(t.outputs() == 2);
  CHECK(parse_diagram("; comment\n ground ; trailing\n") == ground());
  CHECK(parse_diagram("(w 0 3)") == w_spider(0, 3));
}

TEST_CASE("parse errors") {
  for (const char* bad : {"", "(compose tick", "(z 1 1)", "(foo)", "tick tick", "(id -1)", "(z 1/0 1 1)", ")"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_diagram(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_diagram("(compose tick cup)"), ArityError);
  try {
    parse_diagram("(compose\n  tick\n  (bogus))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("print and parse round trip") {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    Diagram d = random_diagram(rng, {8, 3, true, true, {}, {}});
    const std::string text = print_diagram(d);
    Diagram back = parse_diagram(text);
    CHECK(back == d);
    CHECK(print_diagram(back) == text);
  }
}

TEST_CASE("permutation helper routes wires") {
  Diagram p = permutation({2, 0, 1});
  Matrix m = oracle::interp(p);
  // Output j carries input perm[j]: |abc> -> |c a b>.
  for (std::uint64_t x = 0; x < 8; ++x) {
    const std::uint64_t a = (x >> 2) & 1, b = (x >> 1) & 1, c = x & 1;
    CHECK(m((c << 2) | (a << 1) | b, x) == Scalar(1));
  }
}

TEST_CASE("render_dot") {
  const std::string t = render_dot(tick());
  CHECK(count(t, "style=dashed") == 1);
  CHECK(t.find("in0 -> out0") != std::string::npos);
  CHECK(t.find("∤") != std::string::npos);
  const std::string z = render_dot(z_spider(Scalar(1), 0, 0));
  CHECK(count(z, "shape=circle") == 1);
  CHECK(count(z, "->") == 0);
  Diagram five = compose_all({w_spider(2, 1), Diagram::tensor(z_spider(Scalar(2), 1, 1), w_spider(1, 1)), fswap(),
                              Diagram::tensor(z_spider(Scalar::omega(1), 1, 1), id(1))});
  const std::string f = render_dot(five);
  const std::size_t nodes = count(f, "[label=");
  CHECK(nodes == five.generator_count() - 1 + five.inputs() + five.outputs());  // the id is an edge
  CHECK(f.find("Z(w)") != std::string::npos);
}
