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

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zwtick/diagram.hpp"

namespace zwtick {

class SideConditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RuleParams {
  Scalar r{1};
  Scalar s{1};
  unsigned n = 0;
  unsigned m = 0;
};

struct RuleSchema {
  std::string name;
  std::string group;  // "zw", "tick", "additional" or "structural"
  bool uses_r = false;
  bool uses_s = false;
  bool uses_n = false;
  bool uses_m = false;
  /// Returns a description of the violated side condition, or "" when admissible.
  std::function<std::string(const RuleParams&)> side_condition;
  std::function<Diagram(const RuleParams&)> lhs;
  std::function<Diagram(const RuleParams&)> rhs;

  /// "r=... n=..." listing only the declared parameters.
  std::string describe(const RuleParams& p) const;
};

/// Axiom schemas followed by the structural equations, in a fixed order.
const std::vector<RuleSchema>& axiom_schemas();
/// Throws std::out_of_range for an unknown name.
const RuleSchema& find_rule(std::string_view name);

/// Throws SideConditionError for inadmissible parameters.
std::pair<Diagram, Diagram> instantiate(const RuleSchema& rule, const RuleParams& params);

/// {0, 1, -1, 1/2, w, -w^3, 1+w^2}
const std::vector<Scalar>& sample_scalars();
/// Full admissible grid over sample_scalars() and arities 0..3.
std::vector<RuleParams> sample_params(const RuleSchema& rule);

struct ReportEntry {
  std::string kind;  // "RULE" or "LEMMA"
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<ReportEntry> entries;

  std::size_t total() const { return entries.size(); }
  std::size_t passed() const;
  std::size_t failed() const { return total() - passed(); }
  bool ok() const { return failed() == 0; }
  /// One line per instance and a "total/pass/fail" summary line.
  std::string text() const;
  std::string json_lines() const;
};

/// canonical_of_map(lhs) == canonical_of_map(rhs) for every sampled instance.
Report check_soundness(const std::vector<RuleSchema>& rules);
Report check_soundness(const RuleSchema& rule, const std::vector<RuleParams>& params);

struct CorpusEntry {
  std::string name;
  Diagram lhs;
  Diagram rhs;
  std::string source;
};

std::vector<CorpusEntry> lemma_corpus();
Report check_corpus(const std::vector<CorpusEntry>& corpus);

enum class Direction { LeftToRight, RightToLeft };

/// Subterm reached by following child indices (0 = first, 1 = second).
const Diagram& subterm(const Diagram& d, const std::vector<unsigned>& path);
/// Replaces the subterm at `path`, which must equal `from` after flattening
/// compose/tensor associativity, by `to`. Throws MatchError.
Diagram rewrite_at(const Diagram& d, const std::vector<unsigned>& path, const Diagram& from, const Diagram& to);
Diagram apply_rule(const Diagram& d, const RuleSchema& rule, const RuleParams& params,
                   const std::vector<unsigned>& path, Direction direction = Direction::LeftToRight);
/// Structural equality modulo associativity of compose and tensor and
/// splitting of (id n) into single wires.
bool equal_modulo_associativity(const Diagram& a, const Diagram& b);

// Gadgets used by the schemas and the corpus.
Diagram hadamard();
/// Normalised X spider: |+..+><+..+| + |-..-><-..-|.
Diagram x_spider(unsigned n, unsigned m);
/// 0->0 diagram with value c.
Diagram scalar_diagram(const Scalar& c);
/// The pairing effect W(2,0) . (id (x) tick) . Z(1,1,2).
Diagram pairing_effect();

}  // namespace zwtick
