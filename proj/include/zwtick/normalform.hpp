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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zwtick/diagram.hpp"
#include "zwtick/matrix.hpp"

namespace zwtick {

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One entry H[x][y] = lambda with x <= y. Wire 0 is the most significant bit.
struct NFTerm {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  Scalar lambda;

  bool operator==(const NFTerm&) const = default;
};

struct NormalForm {
  unsigned n = 0;
  std::vector<NFTerm> terms;  // sorted by (x, y)

  bool operator==(const NormalForm&) const = default;

  /// The Hermitian matrix encoded by the terms.
  Matrix matrix() const;
  /// "n <qubits>" then "<x-bits> <y-bits> <scalar>" per line; "-" stands for
  /// the empty bitstring when n = 0.
  std::string str() const;
  static NormalForm parse(std::string_view text);
};

std::string bitstring(std::uint64_t v, unsigned width);

/// Throws NotHermitianError unless H equals its conjugate transpose exactly.
NormalForm nf_from_matrix(const Matrix& h);

/**
 * 0->n diagram whose state operator is the matrix of `nf`. The reduced form
 * uses one white node per term; the unreduced form one node (carrying half
 * the entry) per nonzero matrix entry.
 */
Diagram nf_to_diagram(const NormalForm& nf, bool reduced = true);

NormalForm nf_of_diagram(const Diagram& state);

/// Bends every input of d into an output with plain caps; the bent inputs come first.
Diagram bend_to_state(const Diagram& d);
NormalForm canonical_of_map(const Diagram& d);
bool diagrams_equal(const Diagram& a, const Diagram& b);

/// 0->n diagram with zero semantics.
Diagram zero_state(unsigned n);
/// 0->1 helper whose doubled image is |01> + |10>.
Diagram pairing_state();

/// Tick-free 0->n diagram with interp equal to the given column vector.
Diagram pure_state_from_vector(const Matrix& column);
/// Tick-free diagram with interp equal to m.
Diagram pure_map_from_matrix(const Matrix& m);

}  // namespace zwtick
