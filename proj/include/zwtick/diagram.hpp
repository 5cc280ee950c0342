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

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zwtick/scalar.hpp"

namespace zwtick {

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GenKind { ZSpider, WSpider, Fswap, Tick, Id, Swap, Cup, Cap };

/// One generator box. `inputs`/`outputs` are fixed by the kind except for the
/// spiders and Id (whose width is carried so that "(id n)" round-trips).
struct Generator {
  GenKind kind = GenKind::Id;
  Scalar param;  // Z-spider parameter only
  unsigned inputs = 1;
  unsigned outputs = 1;

  static Generator z(Scalar r, unsigned n, unsigned m) { return {GenKind::ZSpider, std::move(r), n, m}; }
  static Generator w(unsigned n, unsigned m) { return {GenKind::WSpider, Scalar(), n, m}; }
  static Generator fswap() { return {GenKind::Fswap, Scalar(), 2, 2}; }
  static Generator tick() { return {GenKind::Tick, Scalar(), 1, 1}; }
  static Generator id(unsigned n = 1) { return {GenKind::Id, Scalar(), n, n}; }
  static Generator swap() { return {GenKind::Swap, Scalar(), 2, 2}; }
  static Generator cup() { return {GenKind::Cup, Scalar(), 2, 0}; }
  static Generator cap() { return {GenKind::Cap, Scalar(), 0, 2}; }

  bool operator==(const Generator&) const = default;
};

/**
 * Immutable ZW-tick term: a generator, a sequential composition
 * (after . before) or a parallel composition (left (x) right).
 *
 * Terms are kept exactly as written; identity and associativity laws are not
 * normalised. Copies share structure.
 */
class Diagram {
 public:
  enum class Kind { Gen, Compose, Tensor };

  Diagram() : Diagram(Generator::id(0)) {}
  Diagram(Generator g);  // NOLINT(google-explicit-constructor)

  /// `after` applied to the outputs of `before`. Throws ArityError.
  static Diagram compose(const Diagram& after, const Diagram& before);
  static Diagram tensor(const Diagram& left, const Diagram& right);

  Kind kind() const;
  unsigned inputs() const;
  unsigned outputs() const;
  const Generator& generator() const;  // Kind::Gen only
  /// Compose: the `after` term; Tensor: the left term.
  const Diagram& first() const;
  /// Compose: the `before` term; Tensor: the right term.
  const Diagram& second() const;

  bool has_tick() const;
  std::size_t generator_count() const;
  std::size_t depth() const;
  /// Stable identity of the shared node, usable as a cache key.
  const void* node_id() const { return node_.get(); }

  friend bool operator==(const Diagram& a, const Diagram& b);
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

 private:
  struct Node;
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Generator shorthands.
Diagram z_spider(const Scalar& r, unsigned n, unsigned m);
Diagram w_spider(unsigned n, unsigned m);
Diagram fswap();
Diagram tick();
Diagram id(unsigned n = 1);
Diagram swap();
Diagram cup();
Diagram cap();

// Derived constructors.
Diagram ket0();
Diagram ket1();
Diagram bra0();
Diagram bra1();
Diagram not_gate();
Diagram ground();
Diagram ticked_cup();
Diagram ticked_cap();

/// a . b
Diagram operator*(const Diagram& after, const Diagram& before);
/// a (x) b
Diagram operator^(const Diagram& left, const Diagram& right);

/// Sequential chain; the first element is applied last (matches algebraic order).
Diagram compose_all(const std::vector<Diagram>& chain);
Diagram tensor_all(const std::vector<Diagram>& parts);
/// d tensored with itself k times (k = 0 gives the empty diagram).
Diagram tensor_power(const Diagram& d, unsigned k);

/**
 * Wire permutation built from Swap and Id. Output wire j carries input wire
 * `perm[j]`.
 */
Diagram permutation(const std::vector<unsigned>& perm);

Diagram dagger(const Diagram& d);

std::string print_diagram(const Diagram& d);
/// Throws ParseError (with line/column in the message) or ArityError.
Diagram parse_diagram(std::string_view text);

std::string render_dot(const Diagram& d);

}  // namespace zwtick
