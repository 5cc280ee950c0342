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

#include "zwtick/qinfo.hpp"

#include <string>

#include "zwtick/normalform.hpp"

namespace zwtick {

Matrix partial_transpose(const Matrix& rho, unsigned first_block) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("partial transpose of a non-square matrix");
  const unsigned total = rho.in_wires();
  if (first_block > total)
    throw std::invalid_argument("split " + std::to_string(first_block) + " exceeds " + std::to_string(total) +
                                " wires");
  const unsigned rest = total - first_block;
  const std::uint64_t low = (std::uint64_t{1} << rest) - 1;
  Matrix out(rho.rows(), rho.cols());
  for (std::uint64_t r = 0; r < rho.rows(); ++r)
    for (std::uint64_t c = 0; c < rho.cols(); ++c) {
      const std::uint64_t x1 = r >> rest, x2 = r & low, y1 = c >> rest, y2 = c & low;
      out((y1 << rest) | x2, (x1 << rest) | y2) = rho(r, c);
    }
  return out;
}

Verdict ppt_check(const Matrix& rho, unsigned first_block, double tolerance) {
  if (rho.rows() != rho.cols() || !rho.is_hermitian()) throw NotHermitianError("ppt_check requires a Hermitian matrix");
  return is_psd_numeric(partial_transpose(rho, first_block), tolerance);
}

double min_partial_transpose_eigenvalue(const Matrix& rho, unsigned first_block) {
  return min_eigenvalue(partial_transpose(rho, first_block));
}

BlochVector bloch(const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw std::invalid_argument("Bloch vector of a non-qubit matrix");
  if (!rho.is_hermitian()) throw NotHermitianError("Bloch vector of a non-Hermitian matrix");
  if (rho.trace() != Scalar(1)) throw std::invalid_argument("Bloch vector requires trace 1, got " + rho.trace().str());
  const Scalar& z = rho(1, 0);
  const Scalar re = z + z.conj();                  // 2 Re z
  const Scalar im = (z - z.conj()) / Scalar::i();  // 2 Im z
  return {re, im, rho(0, 0) - rho(1, 1)};
}

Matrix from_bloch(const BlochVector& v) {
  const Scalar half = Scalar::rational(1, 2);
  Matrix m(2, 2);
  m(0, 0) = (Scalar(1) + v.rz) * half;
  m(1, 1) = (Scalar(1) - v.rz) * half;
  m(1, 0) = (v.rx + Scalar::i() * v.ry) * half;
  m(0, 1) = (v.rx - Scalar::i() * v.ry) * half;
  return m;
}

Matrix spin_flip(const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw std::invalid_argument("spin flip of a non-qubit matrix");
  Matrix y(2, 2);
  y(0, 1) = -Scalar::i();
  y(1, 0) = Scalar::i();
  return y * rho.transpose() * y;
}

Diagram spin_flip_diagram() { return compose_all({not_gate(), z_spider(Scalar(-1), 1, 1), tick()}); }

Scalar sesqui_pairing(const Diagram& s1, const Diagram& s2, bool ticked) {
  if (s1.inputs() != 0 || s2.inputs() != 0) throw ArityError("pairing expects two states");
  if (s1.outputs() != s2.outputs())
    throw ArityError("pairing of states on " + std::to_string(s1.outputs()) + " and " +
                     std::to_string(s2.outputs()) + " wires");
  const unsigned n = s1.outputs();
  std::vector<unsigned> perm;
  for (unsigned k = 0; k < n; ++k) {
    perm.push_back(k);
    perm.push_back(n + k);
  }
  Diagram closing = tensor_power(ticked ? ticked_cup() : cup(), n);
  Diagram scalar = compose_all({closing, permutation(perm), Diagram::tensor(s1, s2)});
  return state_operator(scalar)(0, 0);
}

Diagram ket_plus_i() {
  // Z(i,0,1) = |0> + i|1>, rescaled by 1/sqrt2 = (w - w^3)/2.
  const Scalar norm = (Scalar::omega(1) - Scalar::omega(3)) * Scalar::rational(1, 2);
  return Diagram::tensor(z_spider(Scalar::i(), 0, 1), z_spider(norm - Scalar(1), 0, 0));
}

Diagram internal_dagger(const Diagram& d) {
  const unsigned n = d.inputs();
  const unsigned m = d.outputs();
  // Start from the new inputs y(m) and n ticked caps [p_t, q_t].
  Diagram start = Diagram::tensor(id(m), tensor_power(ticked_cap(), n));
  // -> y, p, q
  std::vector<unsigned> p1;
  for (unsigned t = 0; t < m; ++t) p1.push_back(t);
  for (unsigned t = 0; t < n; ++t) p1.push_back(m + 2 * t);
  for (unsigned t = 0; t < n; ++t) p1.push_back(m + 2 * t + 1);
  Diagram body = tensor_all({id(m), d, id(n)});  // -> y, o, q
  // -> [o_t, y_t]..., q
  std::vector<unsigned> p2;
  for (unsigned t = 0; t < m; ++t) {
    p2.push_back(m + t);
    p2.push_back(t);
  }
  for (unsigned t = 0; t < n; ++t) p2.push_back(2 * m + t);
  Diagram finish = Diagram::tensor(tensor_power(ticked_cup(), m), id(n));
  return compose_all({finish, permutation(p2), body, permutation(p1), start});
}

bool is_unitary_semantic(const Diagram& d) {
  if (d.inputs() != d.outputs()) return false;
  const Diagram dd = internal_dagger(d);
  const Diagram ident = id(d.inputs());
  return diagrams_equal(Diagram::compose(dd, d), ident) && diagrams_equal(Diagram::compose(d, dd), ident);
}

}  // namespace zwtick
