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

// Reference implementations used only by tests. They follow the textbook
// definitions directly (dense Kronecker products, explicit index sums) and
// share no code paths with the library's sparse evaluator.

#pragma once

#include <bit>
#include <cstdint>

#include "zwtick/diagram.hpp"
#include "zwtick/matrix.hpp"

namespace oracle {

using zwtick::Diagram;
using zwtick::GenKind;
using zwtick::Matrix;
using zwtick::Scalar;

inline Matrix generator_matrix(const zwtick::Generator& g) {
  Matrix m(std::size_t{1} << g.outputs, std::size_t{1} << g.inputs);
  switch (g.kind) {
    case GenKind::ZSpider:
      m(0, 0) += Scalar(1);
      m(m.rows() - 1, m.cols() - 1) += g.param;
      break;
    case GenKind::WSpider:
      for (std::uint64_t y = 0; y < m.rows(); ++y)
        for (std::uint64_t x = 0; x < m.cols(); ++x)
          if (std::popcount(x) + std::popcount(y) == 1) m(y, x) = Scalar(1);
      break;
    case GenKind::Fswap:
      for (std::uint64_t i = 0; i < 2; ++i)
        for (std::uint64_t j = 0; j < 2; ++j) m((j << 1) | i, (i << 1) | j) = (i & j) ? Scalar(-1) : Scalar(1);
      break;
    case GenKind::Swap:
      for (std::uint64_t i = 0; i < 2; ++i)
        for (std::uint64_t j = 0; j < 2; ++j) m((j << 1) | i, (i << 1) | j) = Scalar(1);
      break;
    case GenKind::Id: m = Matrix::identity(std::size_t{1} << g.inputs); break;
    case GenKind::Cup:
      m(0, 0) = Scalar(1);
      m(0, 3) = Scalar(1);
      break;
    case GenKind::Cap:
      m(0, 0) = Scalar(1);
      m(3, 0) = Scalar(1);
      break;
    case GenKind::Tick: throw std::invalid_argument("oracle: tick has no pure matrix");
  }
  return m;
}

/// Dense interpretation by matrix product and Kronecker product.
inline Matrix interp(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Gen: return generator_matrix(d.generator());
    case Diagram::Kind::Compose: return interp(d.first()) * interp(d.second());
    case Diagram::Kind::Tensor: return zwtick::kron(interp(d.first()), interp(d.second()));
  }
  return {};
}

/// Partial transpose on the first `a` wires, written as an explicit index sum.
inline Matrix partial_transpose(const Matrix& rho, unsigned a) {
  const unsigned total = rho.in_wires();
  const unsigned b = total - a;
  Matrix out(rho.rows(), rho.cols());
  for (std::uint64_t x1 = 0; x1 < (1u << a); ++x1)
    for (std::uint64_t x2 = 0; x2 < (1u << b); ++x2)
      for (std::uint64_t y1 = 0; y1 < (1u << a); ++y1)
        for (std::uint64_t y2 = 0; y2 < (1u << b); ++y2)
          out((y1 << b) + x2, (x1 << b) + y2) = rho((x1 << b) + x2, (y1 << b) + y2);
  return out;
}

/// |k><l| on n wires.
inline Matrix unit(unsigned n, std::uint64_t k, std::uint64_t l) {
  Matrix m(std::size_t{1} << n, std::size_t{1} << n);
  m(k, l) = Scalar(1);
  return m;
}

/// Choi matrix from a superoperator given as a callable on matrices:
/// F = sum_kl |k><l| (x) S(|k><l|).
template <class Superop>
Matrix choi_of(unsigned n, unsigned m, Superop s) {
  Matrix f(std::size_t{1} << (n + m), std::size_t{1} << (n + m));
  for (std::uint64_t k = 0; k < (1u << n); ++k)
    for (std::uint64_t l = 0; l < (1u << n); ++l) f = f + zwtick::kron(unit(n, k, l), s(unit(n, k, l)));
  (void)m;
  return f;
}

}  // namespace oracle
