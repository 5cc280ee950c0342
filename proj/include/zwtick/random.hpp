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

#include <optional>
#include <random>

#include "zwtick/diagram.hpp"
#include "zwtick/matrix.hpp"
#include "zwtick/qinfo.hpp"

namespace zwtick {

using Rng = std::mt19937_64;

/// Small coefficients: numerators in [-3, 3], denominators in {1, 2}.
Scalar random_scalar(Rng& rng);
/// Random rational in [-1, 1] with denominator up to 8.
Scalar random_real(Rng& rng);

struct TermOptions {
  unsigned max_generators = 6;
  unsigned max_wires = 3;
  bool allow_tick = true;
  bool allow_cup_cap = true;
  std::optional<unsigned> inputs;   // fixed input arity when set
  std::optional<unsigned> outputs;  // fixed output arity when set
};

/// Layered random term; every intermediate width stays within max_wires.
Diagram random_diagram(Rng& rng, const TermOptions& options = {});
Diagram random_state(Rng& rng, unsigned wires, unsigned max_generators, bool allow_tick = true);

/// Hermitian 2^n matrix; each upper-triangle entry is nonzero with probability `density`.
Matrix random_hermitian(Rng& rng, unsigned n, double density);
/// A A^dagger for a random A (positive semi-definite, exact).
Matrix random_positive(Rng& rng, unsigned n);
/// sum_i p_i rho_i (x) sigma_i with positive weights and positive factors.
Matrix random_separable(Rng& rng, unsigned a, unsigned b, unsigned terms);
/// Rational Bloch vector inside the unit ball.
BlochVector random_bloch(Rng& rng);
/// Column vector with random small entries (not all zero).
Matrix random_vector(Rng& rng, unsigned n);

}  // namespace zwtick
