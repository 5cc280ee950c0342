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
#include <map>
#include <stdexcept>

#include "zwtick/diagram.hpp"
#include "zwtick/matrix.hpp"

namespace zwtick {

/// Raised when a pure (tick-free) interpretation is requested for a ticked term.
class TickedDiagramError : public std::invalid_argument {
 public:
  TickedDiagramError() : std::invalid_argument("pure interpretation undefined for ticked diagram") {}
};

/// Sparse vector over computational basis states (wire 0 is the most
/// significant bit of the key).
using SparseVector = std::map<std::uint64_t, Scalar>;

/// Standard interpretation of a tick-free term as a 2^outputs x 2^inputs matrix.
Matrix interp(const Diagram& d);

/// Image of a single basis state under a tick-free term, without building the
/// full matrix.
SparseVector interp_column(const Diagram& d, std::uint64_t input_basis_state);

/// Tick-free doubling: wire i becomes wires (2i, 2i+1); the second wire of each
/// pair carries the conjugated copy; tick becomes a swap of the pair.
Diagram unzip(const Diagram& d);

/**
 * Marked pure diagram of Lin(ZW). An n->m arrow is a pure (n+m)->(m+n) term:
 * inputs are (superoperator inputs, conjugate side of the outputs), outputs are
 * (superoperator outputs, conjugate side of the inputs).
 */
struct LinZW {
  Diagram pure;
  unsigned n = 0;
  unsigned m = 0;
};

/// Erases the (n, m) markers.
inline const Diagram& iota(const LinZW& l) { return l.pure; }

LinZW lin_compose(const LinZW& after, const LinZW& before);
LinZW lin_tensor(const LinZW& left, const LinZW& right);
LinZW hp(const Diagram& d);

/// Bends a doubled 2n->2m term into Lin(ZW). Throws on odd arities.
LinZW psi(const Diagram& doubled, unsigned n, unsigned m);
Diagram psi_inv(const LinZW& l);

/// Superoperator matrix on interleaved vectorisations: vec(|x><y|) is the
/// basis state x1 y1 x2 y2 ... . Equals interp(unzip(d)).
Matrix superoperator(const Diagram& d);

/// Interleaved vectorisation of a square 2^n matrix (column vector of size 4^n).
Matrix vec(const Matrix& rho);
Matrix unvec(const Matrix& v);

Matrix apply_superop(const Diagram& d, const Matrix& rho);

/// Choi matrix F = (I (x) S)(sum_kl |k><l| (x) |k><l|); reference wires first.
Matrix choi(const Diagram& d);
/// Choi matrix built with the ticked cap (input side transposed).
Matrix proper_choi(const Diagram& d);
/// Hermitian operator represented by a state 0->n.
Matrix state_operator(const Diagram& d);

bool is_hermiticity_preserving(const Diagram& d);
/// Classifier on a raw Choi matrix.
bool is_hermitian_choi(const Matrix& choi_matrix);

enum class Verdict { Yes, No, Indeterminate };
const char* to_string(Verdict v);

/// PSD tolerance; honours ZWT_TOLERANCE when set, else 1e-9.
double default_tolerance();

/// Smallest eigenvalue of a Hermitian matrix via the float embedding.
/// Returns NaN if the eigen-solver does not converge.
double min_eigenvalue(const Matrix& hermitian);
Verdict is_psd_numeric(const Matrix& hermitian, double tolerance = default_tolerance());
/// Exact principal-minor test for dimension <= 4; throws std::invalid_argument otherwise.
bool is_psd_exact(const Matrix& hermitian);
/// Exact determinant over Q[w].
Scalar determinant(const Matrix& square);

Verdict is_completely_positive(const Diagram& d, double tolerance = default_tolerance());

}  // namespace zwtick
