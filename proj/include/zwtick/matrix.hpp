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

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zwtick/scalar.hpp"

namespace zwtick {

/// Dense 2^m x 2^n matrix of exact scalars, row-major. Basis states are
/// bitstrings read most-significant-wire-first.
class Matrix {
 public:
  Matrix() : Matrix(1, 1) {}
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t dim);
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Number of wires on the output (row) side.
  unsigned out_wires() const;
  /// Number of wires on the input (column) side.
  unsigned in_wires() const;

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;
  bool is_hermitian() const;
  bool is_zero() const;
  Scalar trace() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  bool operator==(const Matrix& o) const = default;

  Eigen::MatrixXcd to_eigen() const;

  /// "rows cols" header then one row per line, entries in the scalar grammar.
  std::string str() const;
  /// Same layout with "re+imi" decimals (12 significant digits).
  std::string float_str() const;
  static Matrix parse(std::string_view text);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace zwtick
