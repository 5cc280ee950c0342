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

#include "zwtick/matrix.hpp"

#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace zwtick {

namespace {

bool power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (!power_of_two(rows) || !power_of_two(cols))
    throw std::invalid_argument("matrix dimensions must be powers of two, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

unsigned Matrix::out_wires() const { return static_cast<unsigned>(std::countr_zero(rows_)); }
unsigned Matrix::in_wires() const { return static_cast<unsigned>(std::countr_zero(cols_)); }

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::conj() const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
  return m;
}

bool Matrix::is_hermitian() const { return rows_ == cols_ && *this == adjoint(); }

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(cols_) +
                                " vs " + std::to_string(o.rows_));
  Matrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (b.is_zero()) continue;
        m(r, c) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
  return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

Eigen::MatrixXcd Matrix::to_eigen() const {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).to_complex();
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).str();
    }
    os << '\n';
  }
  return os.str();
}

std::string Matrix::float_str() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  char buf[96];
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      auto z = (*this)(r, c).to_complex();
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

Matrix Matrix::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(is >> rows >> cols)) throw ParseError("expected matrix header 'rows cols'", 0);
  if (!power_of_two(rows) || !power_of_two(cols))
    throw ParseError("matrix dimensions must be powers of two", 0);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::string tok;
      if (!(is >> tok))
        throw ParseError("matrix has too few entries (row " + std::to_string(r) + ")",
                         text.size());
      try {
        m(r, c) = Scalar::parse(tok);
      } catch (const ParseError& e) {
        throw ParseError("bad entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + e.what(),
                         e.position());
      }
    }
  std::string extra;
  if (is >> extra) throw ParseError("trailing data after matrix entries", text.size());
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Scalar& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          m(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
    }
  return m;
}

}  // namespace zwtick
