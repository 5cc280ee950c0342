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

#include "zwtick/rules.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

#include "zwtick/normalform.hpp"

namespace zwtick {

namespace {

Diagram X() { return not_gate(); }
// Binary black node read as a merge / split of at most one excitation.
Diagram merge2() { return Diagram::compose(X(), w_spider(2, 1)); }
Diagram split2() { return Diagram::compose(w_spider(1, 2), X()); }
Diagram zero_param_spider(unsigned n, unsigned m) { return z_spider(Scalar(1), n, m); }

Diagram ticks(unsigned k) { return tensor_power(tick(), k); }

std::string no_condition(const RuleParams&) { return ""; }

RuleSchema schema(std::string name, std::string group, std::string_view params,
                  std::function<Diagram(const RuleParams&)> lhs, std::function<Diagram(const RuleParams&)> rhs,
                  std::function<std::string(const RuleParams&)> side = no_condition) {
  RuleSchema s;
  s.name = std::move(name);
  s.group = std::move(group);
  s.uses_r = params.find('r') != std::string_view::npos;
  s.uses_s = params.find('s') != std::string_view::npos;
  s.uses_n = params.find('n') != std::string_view::npos;
  s.uses_m = params.find('m') != std::string_view::npos;
  s.side_condition = std::move(side);
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return s;
}

std::vector<RuleSchema> build_schemas() {
  std::vector<RuleSchema> out;
  const Scalar w = Scalar::omega(1);

  // ZW-calculus rules.
  out.push_back(schema(
      "zs", "zw", "rsnm",
      [](const RuleParams& p) {
        return Diagram::compose(z_spider(p.s, 2, p.m), Diagram::tensor(z_spider(p.r, p.n, 1), id(1)));
      },
      [](const RuleParams& p) { return z_spider(p.r * p.s, p.n + 1, p.m); }));
  out.push_back(schema(
      "id", "zw", "", [](const RuleParams&) { return z_spider(Scalar(1), 1, 1); },
      [](const RuleParams&) { return id(1); }));
  out.push_back(schema(
      "fl", "zw", "",
      [](const RuleParams&) {
        return compose_all({Diagram::tensor(id(1), cup()), Diagram::tensor(fswap(), id(1)),
                            Diagram::tensor(id(1), cap())});
      },
      [](const RuleParams&) { return z_spider(Scalar(-1), 1, 1); }));
  out.push_back(schema(
      "ws", "zw", "nm",
      [](const RuleParams& p) {
        return Diagram::compose(w_spider(2, p.m),
                                Diagram::tensor(Diagram::compose(X(), w_spider(p.n, 1)), id(1)));
      },
      [](const RuleParams& p) { return w_spider(p.n + 1, p.m); }));
  out.push_back(schema(
      "in", "zw", "", [](const RuleParams&) { return Diagram::compose(X(), X()); },
      [](const RuleParams&) { return id(1); }));
  out.push_back(schema(
      "rm", "zw", "", [](const RuleParams&) { return Diagram::compose(w_spider(2, 1), fswap()); },
      [](const RuleParams&) { return w_spider(2, 1); }));
  out.push_back(schema(
      "di", "zw", "nm",
      [](const RuleParams& p) { return Diagram::compose(tensor_power(X(), p.m), zero_param_spider(p.n, p.m)); },
      [](const RuleParams& p) { return Diagram::compose(zero_param_spider(p.n, p.m), tensor_power(X(), p.n)); }));
  out.push_back(schema(
      "b", "zw", "nm",
      [](const RuleParams& p) { return Diagram::compose(w_spider(1, p.m), zero_param_spider(p.n, 1)); },
      [](const RuleParams& p) {
        std::vector<unsigned> perm(p.n * p.m);
        for (unsigned i = 0; i < p.n; ++i)
          for (unsigned j = 0; j < p.m; ++j) perm[j * p.n + i] = i * p.m + j;
        return compose_all({tensor_power(zero_param_spider(p.n, 1), p.m), permutation(perm),
                            tensor_power(w_spider(1, p.m), p.n)});
      },
      [](const RuleParams& p) -> std::string {
        if (p.n == 0 && p.m != 0) return "bialgebra requires either n=m=0 or n>0";
        return "";
      }));
  out.push_back(schema(
      "ho", "zw", "", [](const RuleParams&) { return Diagram::compose(w_spider(2, 1), zero_param_spider(1, 2)); },
      [](const RuleParams&) { return Diagram::compose(w_spider(0, 1), z_spider(Scalar(0), 1, 0)); }));
  out.push_back(schema(
      "ad", "zw", "rsm",
      [](const RuleParams& p) {
        return compose_all({zero_param_spider(1, p.m), X(), w_spider(2, 1),
                            Diagram::tensor(z_spider(p.r, 0, 1), z_spider(p.s, 0, 1))});
      },
      [](const RuleParams& p) { return z_spider(p.r + p.s, 0, p.m); }));
  out.push_back(schema(
      "bw", "zw", "", [](const RuleParams&) { return Diagram::compose(w_spider(1, 2), w_spider(2, 1)); },
      [](const RuleParams&) {
        return compose_all({Diagram::tensor(merge2(), merge2()), tensor_all({id(1), fswap(), id(1)}),
                            Diagram::tensor(split2(), split2())});
      }));
  out.push_back(schema(
      "fw", "zw", "",
      [](const RuleParams&) { return Diagram::compose(fswap(), Diagram::tensor(merge2(), id(1))); },
      [](const RuleParams&) {
        return compose_all({Diagram::tensor(id(1), merge2()), Diagram::tensor(fswap(), id(1)),
                            Diagram::tensor(id(1), fswap())});
      }));
  out.push_back(schema(
      "fz", "zw", "r",
      [](const RuleParams& p) {
        return compose_all({Diagram::tensor(fswap(), id(1)), Diagram::tensor(id(1), fswap()),
                            Diagram::tensor(z_spider(p.r, 1, 2), id(1))});
      },
      [](const RuleParams& p) { return Diagram::compose(Diagram::tensor(id(1), z_spider(p.r, 1, 2)), swap()); }));
  out.push_back(schema(
      "fi", "zw", "", [](const RuleParams&) { return Diagram::compose(fswap(), fswap()); },
      [](const RuleParams&) { return id(2); }));
  out.push_back(schema(
      "yb", "zw", "",
      [](const RuleParams&) {
        return compose_all({Diagram::tensor(fswap(), id(1)), Diagram::tensor(id(1), fswap()),
                            Diagram::tensor(fswap(), id(1))});
      },
      [](const RuleParams&) {
        return compose_all({Diagram::tensor(id(1), fswap()), Diagram::tensor(fswap(), id(1)),
                            Diagram::tensor(id(1), fswap())});
      }));
  out.push_back(schema(
      "fr", "zw", "",
      [](const RuleParams&) {
        return compose_all({Diagram::tensor(id(2), cup()), tensor_all({id(1), fswap(), id(1)}),
                            Diagram::tensor(cap(), id(2))});
      },
      [](const RuleParams&) { return fswap(); }));
  out.push_back(schema(
      "fs", "zw", "", [](const RuleParams&) { return Diagram::compose(fswap(), swap()); },
      [](const RuleParams&) { return Diagram::compose(swap(), fswap()); }));

  // Naturality of the tick.
  out.push_back(schema(
      "nz", "tick", "rnm", [](const RuleParams& p) { return Diagram::compose(ticks(p.m), z_spider(p.r, p.n, p.m)); },
      [](const RuleParams& p) { return Diagram::compose(z_spider(p.r.conj(), p.n, p.m), ticks(p.n)); }));
  out.push_back(schema(
      "nw", "tick", "nm", [](const RuleParams& p) { return Diagram::compose(ticks(p.m), w_spider(p.n, p.m)); },
      [](const RuleParams& p) { return Diagram::compose(w_spider(p.n, p.m), ticks(p.n)); }));
  out.push_back(schema(
      "nf", "tick", "", [](const RuleParams&) { return Diagram::compose(ticks(2), fswap()); },
      [](const RuleParams&) { return Diagram::compose(fswap(), ticks(2)); }));

  // Additional axioms.
  out.push_back(schema(
      "zt", "additional", "r",
      [](const RuleParams& p) { return Diagram::compose(Diagram::tensor(id(1), ticked_cup()), z_spider(p.r, 1, 3)); },
      [](const RuleParams& p) { return Diagram::compose(Diagram::tensor(id(1), ground()), z_spider(p.r, 1, 2)); }));
  out.push_back(schema(
      "tl", "additional", "", [w](const RuleParams&) { return Diagram::compose(ticked_cup(), z_spider(w, 1, 2)); },
      [](const RuleParams&) { return Diagram::compose(ticked_cup(), zero_param_spider(1, 2)); }));
  out.push_back(schema(
      "th", "additional", "",
      [](const RuleParams&) {
        return compose_all({X(), w_spider(2, 1), Diagram::tensor(pairing_state(), pairing_state())});
      },
      [](const RuleParams&) { return Diagram::tensor(z_spider(Scalar::i(), 0, 0), w_spider(0, 1)); }));
  out.push_back(schema(
      "td", "additional", "",
      [](const RuleParams&) { return Diagram::compose(w_spider(2, 0), Diagram::tensor(pairing_state(), id(1))); },
      [](const RuleParams&) { return pairing_effect(); }));

  // Structural equations of the prop with cups and caps.
  out.push_back(schema(
      "snake", "structural", "",
      [](const RuleParams&) {
        return Diagram::compose(Diagram::tensor(id(1), cup()), Diagram::tensor(cap(), id(1)));
      },
      [](const RuleParams&) { return id(1); }));
  out.push_back(schema(
      "swap-nat", "structural", "r",
      [](const RuleParams& p) { return Diagram::compose(swap(), Diagram::tensor(z_spider(p.r, 1, 1), tick())); },
      [](const RuleParams& p) { return Diagram::compose(Diagram::tensor(tick(), z_spider(p.r, 1, 1)), swap()); }));
  out.push_back(schema(
      "flex-z", "structural", "rnm",
      [](const RuleParams& p) {
        return Diagram::compose(Diagram::tensor(z_spider(p.r, p.n + 1, p.m), id(1)),
                                Diagram::tensor(id(p.n), cap()));
      },
      [](const RuleParams& p) { return z_spider(p.r, p.n, p.m + 1); }));
  out.push_back(schema(
      "flex-w", "structural", "nm",
      [](const RuleParams& p) {
        return Diagram::compose(Diagram::tensor(w_spider(p.n + 1, p.m), id(1)), Diagram::tensor(id(p.n), cap()));
      },
      [](const RuleParams& p) { return w_spider(p.n, p.m + 1); }));
  out.push_back(schema(
      "flex-tick", "structural", "", [](const RuleParams&) { return Diagram::compose(Diagram::tensor(tick(), id(1)), cap()); },
      [](const RuleParams&) { return Diagram::compose(Diagram::tensor(id(1), tick()), cap()); }));
  out.push_back(schema(
      "tick-snake", "structural", "",
      [](const RuleParams&) {
        return compose_all({Diagram::tensor(id(1), cup()), tensor_all({id(1), tick(), id(1)}),
                            Diagram::tensor(cap(), id(1))});
      },
      [](const RuleParams&) { return tick(); }));
  return out;
}

// ---------------------------------------------------------------------------
// Flattened view used by matching.

struct Flat {
  enum class Kind { Leaf, Seq, Par } kind = Kind::Leaf;
  Generator gen;
  std::vector<Flat> kids;

  bool operator==(const Flat&) const = default;
};

Flat flatten(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Gen: {
      const Generator& g = d.generator();
      if (g.kind == GenKind::Id && g.inputs >= 2) {
        Flat par{Flat::Kind::Par, {}, {}};
        for (unsigned k = 0; k < g.inputs; ++k) par.kids.push_back({Flat::Kind::Leaf, Generator::id(1), {}});
        return par;
      }
      return {Flat::Kind::Leaf, g, {}};
    }
    case Diagram::Kind::Compose:
    case Diagram::Kind::Tensor: {
      const Flat::Kind k = d.kind() == Diagram::Kind::Compose ? Flat::Kind::Seq : Flat::Kind::Par;
      Flat out{k, {}, {}};
      for (const Diagram* child : {&d.first(), &d.second()}) {
        Flat f = flatten(*child);
        if (f.kind == k) {
          for (auto& kid : f.kids) out.kids.push_back(std::move(kid));
        } else {
          out.kids.push_back(std::move(f));
        }
      }
      return out;
    }
  }
  return {};
}

Diagram replace(const Diagram& d, const std::vector<unsigned>& path, std::size_t depth, const Diagram& to) {
  if (depth == path.size()) return to;
  if (d.kind() == Diagram::Kind::Gen) throw MatchError("path descends into a generator");
  const unsigned which = path[depth];
  if (which > 1) throw MatchError("path component must be 0 or 1");
  Diagram a = which == 0 ? replace(d.first(), path, depth + 1, to) : d.first();
  Diagram b = which == 1 ? replace(d.second(), path, depth + 1, to) : d.second();
  return d.kind() == Diagram::Kind::Compose ? Diagram::compose(a, b) : Diagram::tensor(a, b);
}

std::string arity(const Diagram& d) { return std::to_string(d.inputs()) + "->" + std::to_string(d.outputs()); }

Matrix hadamard_matrix() {
  const Scalar h = Scalar::sqrt2().inverse();
  Matrix m(2, 2);
  m(0, 0) = h;
  m(0, 1) = h;
  m(1, 0) = h;
  m(1, 1) = -h;
  return m;
}

}  // namespace

Diagram hadamard() { return pure_map_from_matrix(hadamard_matrix()); }

Diagram x_spider(unsigned n, unsigned m) {
  Matrix out(std::size_t{1} << m, std::size_t{1} << n);
  Scalar norm(1);
  const Scalar h = Scalar::sqrt2().inverse();
  for (unsigned k = 0; k < n + m; ++k) norm *= h;
  for (std::uint64_t y = 0; y < out.rows(); ++y)
    for (std::uint64_t x = 0; x < out.cols(); ++x)
      if ((std::popcount(x) + std::popcount(y)) % 2 == 0) out(y, x) = norm * Scalar(2);
  return pure_map_from_matrix(out);
}

Diagram scalar_diagram(const Scalar& c) { return z_spider(c - Scalar(1), 0, 0); }

Diagram pairing_effect() {
  return compose_all({w_spider(2, 0), Diagram::tensor(id(1), tick()), z_spider(Scalar(1), 1, 2)});
}

std::string RuleSchema::describe(const RuleParams& p) const {
  std::string out;
  auto add = [&](const std::string& part) {
    if (!out.empty()) out += ' ';
    out += part;
  };
  if (uses_r) add("r=" + p.r.str());
  if (uses_s) add("s=" + p.s.str());
  if (uses_n) add("n=" + std::to_string(p.n));
  if (uses_m) add("m=" + std::to_string(p.m));
  return out.empty() ? "-" : out;
}

const std::vector<RuleSchema>& axiom_schemas() {
  static const std::vector<RuleSchema> schemas = build_schemas();
  return schemas;
}

const RuleSchema& find_rule(std::string_view name) {
  for (const RuleSchema& s : axiom_schemas())
    if (s.name == name) return s;
  throw std::out_of_range("unknown rule '" + std::string(name) + "'");
}

std::pair<Diagram, Diagram> instantiate(const RuleSchema& rule, const RuleParams& params) {
  if ((rule.uses_n && params.n > 3) || (rule.uses_m && params.m > 3))
    throw SideConditionError("rule " + rule.name + ": arities are supported in 0..3");
  if (std::string why = rule.side_condition(params); !why.empty())
    throw SideConditionError("rule " + rule.name + ": " + why);
  std::pair<Diagram, Diagram> sides{rule.lhs(params), rule.rhs(params)};
  if (sides.first.inputs() != sides.second.inputs() || sides.first.outputs() != sides.second.outputs())
    throw std::logic_error("rule " + rule.name + " sides have arities " + arity(sides.first) + " and " +
                           arity(sides.second));
  return sides;
}

const std::vector<Scalar>& sample_scalars() {
  static const std::vector<Scalar> grid = {Scalar(0),
                                           Scalar(1),
                                           Scalar(-1),
                                           Scalar::rational(1, 2),
                                           Scalar::omega(1),
                                           -Scalar::omega(3),
                                           Scalar(1) + Scalar::omega(2)};
  return grid;
}

std::vector<RuleParams> sample_params(const RuleSchema& rule) {
  const std::vector<Scalar> one{Scalar(1)};
  const std::vector<unsigned> zero{0};
  const std::vector<unsigned> arities{0, 1, 2, 3};
  const auto& rs = rule.uses_r ? sample_scalars() : one;
  const auto& ss = rule.uses_s ? sample_scalars() : one;
  const auto& ns = rule.uses_n ? arities : zero;
  const auto& ms = rule.uses_m ? arities : zero;
  std::vector<RuleParams> out;
  for (const Scalar& r : rs)
    for (const Scalar& s : ss)
      for (unsigned n : ns)
        for (unsigned m : ms) {
          RuleParams p{r, s, n, m};
          if (rule.side_condition(p).empty()) out.push_back(p);
        }
  return out;
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }));
}

std::string Report::text() const {
  std::ostringstream os;
  for (const ReportEntry& e : entries) {
    os << e.kind << ' ' << e.name << ' ' << e.params << ' ' << (e.pass ? "PASS" : "FAIL");
    if (!e.detail.empty()) os << " (" << e.detail << ')';
    os << '\n';
  }
  os << total() << '/' << passed() << '/' << failed() << " failures\n";
  return os.str();
}

std::string Report::json_lines() const {
  std::ostringstream os;
  for (const ReportEntry& e : entries) {
    nlohmann::json j{{"kind", e.kind}, {"name", e.name}, {"params", e.params}, {"pass", e.pass}};
    if (!e.detail.empty()) j["detail"] = e.detail;
    os << j.dump() << '\n';
  }
  os << nlohmann::json{{"total", total()}, {"pass", passed()}, {"fail", failed()}}.dump() << '\n';
  return os.str();
}

Report check_soundness(const RuleSchema& rule, const std::vector<RuleParams>& params) {
  Report report;
  for (const RuleParams& p : params) {
    ReportEntry e{"RULE", rule.name, rule.describe(p), false, ""};
    try {
      auto [lhs, rhs] = instantiate(rule, p);
      e.pass = canonical_of_map(lhs) == canonical_of_map(rhs);
    } catch (const std::exception& ex) {
      e.detail = ex.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

Report check_soundness(const std::vector<RuleSchema>& rules) {
  std::vector<const RuleSchema*> order;
  for (const RuleSchema& r : rules) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->name < b->name; });
  Report report;
  for (const RuleSchema* r : order) {
    Report part = check_soundness(*r, sample_params(*r));
    for (auto& e : part.entries) report.entries.push_back(std::move(e));
  }
  return report;
}

Report check_corpus(const std::vector<CorpusEntry>& corpus) {
  Report report;
  for (const CorpusEntry& c : corpus) {
    ReportEntry e{"LEMMA", c.name, c.source, false, ""};
    try {
      if (c.lhs.inputs() != c.rhs.inputs() || c.lhs.outputs() != c.rhs.outputs()) {
        e.detail = "arity mismatch " + arity(c.lhs) + " vs " + arity(c.rhs);
      } else {
        e.pass = canonical_of_map(c.lhs) == canonical_of_map(c.rhs);
      }
    } catch (const std::exception& ex) {
      e.detail = ex.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool equal_modulo_associativity(const Diagram& a, const Diagram& b) { return flatten(a) == flatten(b); }

const Diagram& subterm(const Diagram& d, const std::vector<unsigned>& path) {
  const Diagram* cur = &d;
  for (unsigned step : path) {
    if (cur->kind() == Diagram::Kind::Gen) throw MatchError("path descends into a generator");
    if (step > 1) throw MatchError("path component must be 0 or 1");
    cur = step == 0 ? &cur->first() : &cur->second();
  }
  return *cur;
}

Diagram rewrite_at(const Diagram& d, const std::vector<unsigned>& path, const Diagram& from, const Diagram& to) {
  const Diagram& found = subterm(d, path);
  if (!equal_modulo_associativity(found, from))
    throw MatchError("no match: expected " + print_diagram(from) + " but found " + print_diagram(found));
  return replace(d, path, 0, to);
}

Diagram apply_rule(const Diagram& d, const RuleSchema& rule, const RuleParams& params,
                   const std::vector<unsigned>& path, Direction direction) {
  auto [lhs, rhs] = instantiate(rule, params);
  return direction == Direction::LeftToRight ? rewrite_at(d, path, lhs, rhs) : rewrite_at(d, path, rhs, lhs);
}

// ---------------------------------------------------------------------------
// Derived-equation corpus

std::vector<CorpusEntry> lemma_corpus() {
  std::vector<CorpusEntry> c;
  const Scalar w = Scalar::omega(1);
  const Scalar r = Scalar(1) + Scalar::omega(2);
  const Scalar s = Scalar::rational(1, 2) - Scalar::omega(3);
  const Diagram E = pairing_effect();
  const Diagram H = hadamard();
  const Diagram S = z_spider(Scalar::i(), 1, 1);
  const Scalar inv_sqrt2 = Scalar::sqrt2().inverse();
  auto add = [&](std::string name, Diagram lhs, Diagram rhs, std::string source) {
    c.push_back({std::move(name), std::move(lhs), std::move(rhs), std::move(source)});
  };

  // Prop structure.
  add("snake-1", Diagram::compose(Diagram::tensor(id(1), cup()), Diagram::tensor(cap(), id(1))), id(1), "snake");
  add("snake-2", Diagram::compose(Diagram::tensor(cup(), id(1)), Diagram::tensor(id(1), cap())), id(1), "snake");
  add("cup-swap", Diagram::compose(cup(), swap()), cup(), "swap-invariance");
  add("cap-swap", Diagram::compose(swap(), cap()), cap(), "swap-invariance");
  add("flex-z-inputs", Diagram::compose(z_spider(r, 3, 1), Diagram::tensor(swap(), id(1))), z_spider(r, 3, 1),
      "flexsymmetry");
  add("flex-z-bend", Diagram::compose(Diagram::tensor(id(1), cup()), Diagram::tensor(z_spider(r, 1, 2), id(1))),
      z_spider(r, 2, 1), "flexsymmetry");
  add("flex-w-outputs", Diagram::compose(Diagram::tensor(id(1), swap()), w_spider(1, 3)), w_spider(1, 3),
      "flexsymmetry");
  add("flex-w-bend", Diagram::compose(Diagram::tensor(cup(), id(1)), Diagram::tensor(id(1), w_spider(1, 2))),
      w_spider(2, 1), "flexsymmetry");
  add("flex-tick-cup", Diagram::compose(cup(), Diagram::tensor(tick(), id(1))),
      Diagram::compose(cup(), Diagram::tensor(id(1), tick())), "flexsymmetry");
  add("tick-snake",
      compose_all({Diagram::tensor(id(1), cup()), tensor_all({id(1), tick(), id(1)}), Diagram::tensor(cap(), id(1))}),
      tick(), "tick-snake");
  add("ti", Diagram::compose(tick(), tick()), id(1), "tick");
  add("tcup-symmetric", Diagram::compose(ticked_cup(), swap()), ticked_cup(), "ticked cup");

  // Appendix lemmas.
  add("obvious", compose_all({tick(), X(), z_spider(r, 1, 1), tick()}), Diagram::compose(X(), z_spider(r.conj(), 1, 1)),
      "spider phases");
  add("obvious-2", compose_all({z_spider(r, 1, 1), tick(), z_spider(s, 1, 1), tick()}),
      z_spider(r * s.conj(), 1, 1), "spider phases");
  add("untitled", compose_all({ticks(2), w_spider(1, 2), z_spider(r, 1, 1), tick()}),
      Diagram::compose(w_spider(1, 2), z_spider(r.conj(), 1, 1)), "spider phases");
  add("E3-through-Z", Diagram::compose(E, z_spider(s, 1, 1)), compose_all({E, z_spider(s.conj(), 1, 1), tick()}),
      "pairing effect");
  add("E3-through-W", Diagram::compose(E, X()), E, "pairing effect");
  add("ground-removed-by-E3", Diagram::compose(Diagram::tensor(E, ground()), w_spider(1, 2)), E,
      "pairing effect");
  {
    NormalForm nf;
    nf.n = 1;
    nf.terms = {{0, 0, Scalar(1)}, {0, 1, w.conj()}, {1, 1, Scalar(-2)}};
    add("sum-branch-NF", nf_to_diagram(nf, false), nf_to_diagram(nf, true), "normal form");
  }

  // Pure ZW lemmas: Hadamard, X spiders and the fswap.
  add("h-decomposition", H,
      Diagram::tensor(scalar_diagram(w.inverse()), compose_all({S, H, S, H, S})), "pure ZW");
  add("h-involution", Diagram::compose(H, H), id(1), "pure ZW");
  add("colour-change", compose_all({Diagram::tensor(H, H), zero_param_spider(1, 2), H}), x_spider(1, 2),
      "pure ZW");
  add("x-frobenius",
      Diagram::compose(Diagram::tensor(x_spider(2, 1), id(1)), Diagram::tensor(id(1), x_spider(1, 2))),
      Diagram::compose(x_spider(1, 2), x_spider(2, 1)), "pure ZW");
  add("z-x-bialgebra", Diagram::compose(zero_param_spider(1, 2), x_spider(2, 1)),
      Diagram::tensor(scalar_diagram(Scalar::sqrt2()),
                      compose_all({Diagram::tensor(x_spider(2, 1), x_spider(2, 1)), tensor_all({id(1), swap(), id(1)}),
                                   Diagram::tensor(zero_param_spider(1, 2), zero_param_spider(1, 2))})),
      "pure ZW");
  add("hopf", Diagram::compose(x_spider(2, 1), zero_param_spider(1, 2)),
      Diagram::tensor(scalar_diagram(Scalar::rational(1, 2)),
                      Diagram::compose(x_spider(0, 1), zero_param_spider(1, 0))),
      "pure ZW");
  add("x-associativity", Diagram::compose(x_spider(2, 1), Diagram::tensor(x_spider(2, 1), id(1))),
      Diagram::compose(x_spider(2, 1), Diagram::tensor(id(1), x_spider(2, 1))), "pure ZW");
  add("i-minus-i", Diagram::compose(S, z_spider(-Scalar::i(), 1, 1)), id(1), "pure ZW");
  add("h-ket1", Diagram::compose(H, w_spider(0, 1)),
      Diagram::tensor(scalar_diagram(inv_sqrt2), z_spider(Scalar(-1), 0, 1)), "pure ZW");
  {
    Diagram cx = Diagram::tensor(scalar_diagram(Scalar::sqrt2()),
                                 Diagram::compose(Diagram::tensor(id(1), x_spider(2, 1)),
                                                  Diagram::tensor(zero_param_spider(1, 2), id(1))));
    add("fswap-decomposition", fswap(),
        compose_all({swap(), Diagram::tensor(id(1), H), cx, Diagram::tensor(id(1), H)}), "pure ZW");
  }

  // Discard equations.
  add("ground-phase", Diagram::compose(ground(), z_spider(w, 1, 1)), ground(), "discard equations");
  add("ground-scalar", Diagram::compose(ground(), ket0()), id(0), "discard equations");
  add("ground-Z", Diagram::compose(Diagram::tensor(ground(), ground()), zero_param_spider(1, 2)), ground(),
      "discard equations");
  add("ground-fswap", Diagram::compose(Diagram::tensor(ground(), ground()), fswap()),
      Diagram::tensor(ground(), ground()), "discard equations");
  add("ground-H", Diagram::compose(ground(), H), ground(), "discard equations");

  // Recovered pure ZW axioms.
  add("w-cocommutative", Diagram::compose(swap(), w_spider(1, 2)), w_spider(1, 2), "pure ZW axioms");
  add("w-fswap-absorb", Diagram::compose(fswap(), w_spider(1, 2)), w_spider(1, 2), "pure ZW axioms");
  add("w-unit", compose_all({X(), w_spider(2, 1), Diagram::tensor(id(1), ket0())}), id(1), "pure ZW axioms");
  add("z-unit", Diagram::compose(zero_param_spider(2, 1), Diagram::tensor(id(1), zero_param_spider(0, 1))), id(1),
      "pure ZW axioms");
  add("w-loop", Diagram::compose(w_spider(2, 0), w_spider(0, 2)), zero_param_spider(0, 0), "pure ZW axioms");
  add("ket1-copy", Diagram::compose(zero_param_spider(1, 2), ket1()), Diagram::tensor(ket1(), ket1()),
      "pure ZW axioms");
  add("ket0-copy", Diagram::compose(zero_param_spider(1, 2), ket0()), Diagram::tensor(ket0(), ket0()),
      "pure ZW axioms");
  add("fswap-unit", Diagram::compose(fswap(), Diagram::tensor(ket0(), id(1))), Diagram::tensor(id(1), ket0()),
      "pure ZW axioms");

  // Normal-form branches of a tensor product.
  {
    NormalForm a;
    a.n = 1;
    a.terms = {{0, 0, Scalar(1)}, {0, 1, w}};
    NormalForm b;
    b.n = 1;
    b.terms = {{0, 1, Scalar::i()}, {1, 1, Scalar(-1)}};
    Matrix ab = kron(a.matrix(), b.matrix());
    add("NF-tensor-branch-recomposition", Diagram::tensor(nf_to_diagram(a), nf_to_diagram(b)),
        nf_to_diagram(nf_from_matrix(ab)), "normal form");
    NormalForm single;
    single.n = 1;
    single.terms = {{0, 1, w}};
    NormalForm two;
    two.n = 2;
    two.terms = {{0, 3, Scalar(1)}, {1, 2, Scalar(1)}};
    add("NF-tensor-branch-decomposition", nf_to_diagram(nf_from_matrix(kron(single.matrix(), two.matrix()))),
        Diagram::tensor(nf_to_diagram(single), nf_to_diagram(two)), "normal form");
  }
  return c;
}

}  // namespace zwtick
