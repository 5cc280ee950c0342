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

// zwt: command-line front end.
//
// Exit codes: 0 success (or "equal" for eq), 1 "not equal" for eq,
// 2 usage, parse or type errors, 3 failed checks or internal errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zwtick/diagram.hpp"
#include "zwtick/normalform.hpp"
#include "zwtick/qinfo.hpp"
#include "zwtick/random.hpp"
#include "zwtick/rules.hpp"
#include "zwtick/semantics.hpp"

using namespace zwtick;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

// Bad input from the user; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Diagram read_diagram(const std::string& path) {
  try {
    return parse_diagram(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Matrix read_matrix(const std::string& path) {
  try {
    return Matrix::parse(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string show(const Matrix& m, bool as_float) { return as_float ? m.float_str() : m.str(); }

std::string show(const Scalar& x, bool as_float) {
  if (!as_float) return x.str();
  auto z = x.to_complex();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string show(const NormalForm& nf, bool as_float) {
  if (!as_float) return nf.str();
  std::ostringstream os;
  os << "n " << nf.n << '\n';
  for (const auto& t : nf.terms)
    os << bitstring(t.x, nf.n) << ' ' << bitstring(t.y, nf.n) << ' ' << show(t.lambda, true) << '\n';
  return os.str();
}

const char* yes_no(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

// Rewrites an instance placed inside a random context and compares
// canonical forms before and after.
void add_context_checks(Report& rep, std::uint64_t seed, int count) {
  Rng rng(seed);
  const auto& schemas = axiom_schemas();
  for (int k = 0; k < count;) {
    const RuleSchema& rule = schemas[rng() % schemas.size()];
    auto params = sample_params(rule);
    const RuleParams p = params[rng() % params.size()];
    auto [lhs, rhs] = instantiate(rule, p);
    if (lhs.inputs() > 3 || lhs.outputs() > 3) continue;
    Diagram before = random_diagram(rng, {2, 3, true, true, rng() % 3, lhs.inputs()});
    Diagram after = random_diagram(rng, {2, 3, true, true, lhs.outputs(), rng() % 3});
    Diagram d = Diagram::compose(after, Diagram::compose(lhs, before));
    ReportEntry e{"RULE", rule.name, rule.describe(p) + " context=" + std::to_string(k), false, ""};
    try {
      Diagram r = apply_rule(d, rule, p, {1, 0});
      e.pass = canonical_of_map(d) == canonical_of_map(r);
      if (!e.pass) e.detail = "rewriting in context changed the canonical form";
    } catch (const std::exception& ex) {
      e.detail = ex.what();
    }
    rep.entries.push_back(std::move(e));
    ++k;
  }
}

int emit_report(const Report& rep, bool json) {
  std::cout << (json ? rep.json_lines() : rep.text());
  return rep.ok() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact semantics, normal forms and rule checking for ZW diagrams with the tick generator"};
  app.require_subcommand(1);
  bool as_float = false;
  app.add_flag("--float", as_float, "print decimal approximations instead of exact scalars");

  std::string file, file2, rho_file;
  bool proper = false, json = false;
  std::uint64_t seed = 0;
  unsigned split = 1;
  std::string format = "dot";

  auto* interp_cmd = app.add_subcommand("interp", "pure interpretation of a tick-free diagram");
  interp_cmd->add_option("file", file, "diagram file")->required();
  auto* choi_cmd = app.add_subcommand("choi", "Choi matrix of a diagram");
  choi_cmd->add_option("file", file, "diagram file")->required();
  choi_cmd->add_flag("--proper", proper, "use the antilinear (proper) duality");
  auto* superop_cmd = app.add_subcommand("superop", "apply the superoperator of a diagram to a matrix");
  superop_cmd->add_option("file", file, "diagram file")->required();
  superop_cmd->add_option("--rho", rho_file, "matrix file")->required();
  auto* nf_cmd = app.add_subcommand("nf", "normal form of a diagram (maps are bent into states)");
  nf_cmd->add_option("file", file, "diagram file")->required();
  auto* eq_cmd = app.add_subcommand("eq", "decide semantic equality of two diagrams");
  eq_cmd->add_option("file1", file, "diagram file")->required();
  eq_cmd->add_option("file2", file2, "diagram file")->required();
  auto* axioms_cmd = app.add_subcommand("check-axioms", "soundness of every rule schema");
  axioms_cmd->add_flag("--json", json, "JSON-lines output");
  axioms_cmd->add_option("--seed", seed, "seed for the rewriting-in-context checks");
  auto* lemmas_cmd = app.add_subcommand("check-lemmas", "check the derived-equation corpus");
  lemmas_cmd->add_flag("--json", json, "JSON-lines output");
  auto* classify_cmd = app.add_subcommand("classify", "Hermiticity preservation and complete positivity");
  classify_cmd->add_option("file", file, "diagram file")->required();
  auto* ppt_cmd = app.add_subcommand("ppt", "positive partial transpose test");
  ppt_cmd->add_option("file", rho_file, "matrix file")->required();
  ppt_cmd->add_option("--split", split, "qubits in the first subsystem")->required();
  auto* spinflip_cmd = app.add_subcommand("spinflip", "one-qubit spin flip Y rho^T Y");
  spinflip_cmd->add_option("file", rho_file, "matrix file")->required();
  auto* render_cmd = app.add_subcommand("render", "render a diagram");
  render_cmd->add_option("file", file, "diagram file")->required();
  render_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    default_tolerance();  // rejects a malformed ZWT_TOLERANCE up front
    if (*interp_cmd) {
      Diagram d = read_diagram(file);
      if (d.has_tick()) throw UsageError("interp: diagram contains a tick; use choi or superop");
      std::cout << show(interp(d), as_float);
    } else if (*choi_cmd) {
      Diagram d = read_diagram(file);
      std::cout << show(proper ? proper_choi(d) : choi(d), as_float);
    } else if (*superop_cmd) {
      std::cout << show(apply_superop(read_diagram(file), read_matrix(rho_file)), as_float);
    } else if (*nf_cmd) {
      std::cout << show(canonical_of_map(read_diagram(file)), as_float);
    } else if (*eq_cmd) {
      const bool same = diagrams_equal(read_diagram(file), read_diagram(file2));
      std::cout << (same ? "equal" : "not equal") << '\n';
      return same ? 0 : 1;
    } else if (*axioms_cmd) {
      Report rep = check_soundness(axiom_schemas());
      add_context_checks(rep, seed, 20);
      return emit_report(rep, json);
    } else if (*lemmas_cmd) {
      return emit_report(check_corpus(lemma_corpus()), json);
    } else if (*classify_cmd) {
      Diagram d = read_diagram(file);
      std::cout << "HP: " << (is_hermiticity_preserving(d) ? "yes" : "no")
                << ", CP: " << yes_no(is_completely_positive(d)) << '\n';
    } else if (*ppt_cmd) {
      Matrix rho = read_matrix(rho_file);
      Verdict v = ppt_check(rho, split);
      std::cout << "PPT: " << yes_no(v) << '\n';
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", min_partial_transpose_eigenvalue(rho, split));
      std::cout << "min eigenvalue of partial transpose: " << buf << '\n';
    } else if (*spinflip_cmd) {
      std::cout << show(spin_flip(read_matrix(rho_file)), as_float);
    } else if (*render_cmd) {
      std::cout << render_dot(read_diagram(file));
    }
  } catch (const UsageError& e) {
    std::cerr << "zwt: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "zwt: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zwt: internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return 0;
}
