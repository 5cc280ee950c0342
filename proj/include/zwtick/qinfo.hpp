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

#include "zwtick/diagram.hpp"
#include "zwtick/matrix.hpp"
#include "zwtick/semantics.hpp"

namespace zwtick {

/// Transpose on the first `first_block` wires of a square 2^k matrix.
Matrix partial_transpose(const Matrix& rho, unsigned first_block);

/// PSD test on the partial transpose. Throws NotHermitianError on non-Hermitian input.
Verdict ppt_check(const Matrix& rho, unsigned first_block, double tolerance = default_tolerance());
double min_partial_transpose_eigenvalue(const Matrix& rho, unsigned first_block);

struct BlochVector {
  Scalar rx;
  Scalar ry;
  Scalar rz;

  bool operator==(const BlochVector&) const = default;
  BlochVector operator-() const { return {-rx, -ry, -rz}; }
};

/// rho = (I + rx X + ry Y + rz Z) / 2. Requires a Hermitian 2x2 matrix of trace 1.
BlochVector bloch(const Matrix& rho);
Matrix from_bloch(const BlochVector& v);

/// Y rho^T Y.
Matrix spin_flip(const Matrix& rho);
/// not . Z(-1) . tick, whose superoperator is rho -> Y rho^T Y.
Diagram spin_flip_diagram();

/// Contracts two 0->n states wire by wire with plain or ticked cups.
Scalar sesqui_pairing(const Diagram& s1, const Diagram& s2, bool ticked);

/// The normalised pure state (|0> + i|1>)/sqrt2 as a tick-free diagram.
Diagram ket_plus_i();

/// Bends every wire of d with ticked cups and caps.
Diagram internal_dagger(const Diagram& d);
bool is_unitary_semantic(const Diagram& d);

}  // namespace zwtick
