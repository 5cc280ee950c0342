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

#include "zwtick/semantics.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include <Eigen/Eigenvalues>

namespace zwtick {

namespace {

constexpr unsigned kMaxWires = 62;

std::uint64_t ones(unsigned n) { return n == 0 ? 0 : (std::uint64_t{1} << n) - 1; }

void accumulate(SparseVector& into, std::uint64_t key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = into.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) into.erase(it);
  }
}

SparseVector generator_column(const Generator& g, std::uint64_t key) {
  SparseVector out;
  switch (g.kind) {
    case GenKind::ZSpider:
      if (key == 0) accumulate(out, 0, Scalar(1));
      if (key == ones(g.inputs)) accumulate(out, ones(g.outputs), g.param);
      break;
    case GenKind::WSpider: {
      int w = std::popcount(key);
      if (w == 1) {
        accumulate(out, 0, Scalar(1));
      } else if (w == 0) {
        for (unsigned k = 0; k < g.outputs; ++k) accumulate(out, std::uint64_t{1} << k, Scalar(1));
      }
      break;
    }
    case GenKind::Fswap: {
      std::uint64_t i = (key >> 1) & 1;
      std::uint64_t j = key & 1;
      accumulate(out, (j << 1) | i, (i & j) ? Scalar(-1) : Scalar(1));
      break;
    }
    case GenKind::Swap: {
      std::uint64_t i = (key >> 1) & 1;
      std::uint64_t j = key & 1;
      accumulate(out, (j << 1) | i, Scalar(1));
      break;
    }
    case GenKind::Id: accumulate(out, key, Scalar(1)); break;
    case GenKind::Cup:
      if (key == 0 || key == 3) accumulate(out, 0, Scalar(1));
      break;
    case GenKind::Cap:
      accumulate(out, 0, Scalar(1));
      accumulate(out, 3, Scalar(1));
      break;
    case GenKind::Tick: throw TickedDiagramError();
  }
  return out;
}

class Evaluator {
 public:
  const SparseVector& column(const Diagram& d, std::uint64_t key) {
    auto& memo = cache_[d.node_id()];
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SparseVector out = compute(d, key);
    return memo.emplace(key, std::move(out)).first->second;
  }

 private:
  SparseVector compute(const Diagram& d, std::uint64_t key) {
    switch (d.kind()) {
      case Diagram::Kind::Gen: return generator_column(d.generator(), key);
      case Diagram::Kind::Compose: {
        SparseVector mid = column(d.second(), key);
        SparseVector out;
        for (const auto& [k, c] : mid) {
          const SparseVector& col = column(d.first(), k);
          for (const auto& [o, v] : col) accumulate(out, o, c * v);
        }
        return out;
      }
      case Diagram::Kind::Tensor: {
        const unsigned right_in = d.second().inputs();
        const unsigned right_out = d.second().outputs();
        SparseVector left = column(d.first(), key >> right_in);
        const SparseVector& right = column(d.second(), key & ones(right_in));
        SparseVector out;
        for (const auto& [a, x] : left)
          for (const auto& [b, y] : right) accumulate(out, (a << right_out) | b, x * y);
        return out;
      }
    }
    return {};
  }

  std::unordered_map<const void*, std::unordered_map<std::uint64_t, SparseVector>> cache_;
};

void check_width(const Diagram& d) {
  if (d.inputs() > kMaxWires || d.outputs() > kMaxWires) throw std::invalid_argument("diagram too wide to evaluate");
}

std::uint64_t bit(std::uint64_t v, unsigned width, unsigned j) { return (v >> (width - 1 - j)) & 1; }

// Interleaves x and y (each `width` bits) into x1 y1 x2 y2 ...
std::uint64_t interleave(std::uint64_t x, std::uint64_t y, unsigned width) {
  std::uint64_t out = 0;
  for (unsigned j = 0; j < width; ++j) out = (out << 2) | (bit(x, width, j) << 1) | bit(y, width, j);
  return out;
}

Diagram conj_generator(const Generator& g) {
  if (g.kind == GenKind::ZSpider) return z_spider(g.param.conj(), g.inputs, g.outputs);
  return Diagram(g);
}

// (p1..pn, c1..cn) -> interleaved (p1, c1, ..., pn, cn)
Diagram interleave_wires(unsigned n) {
  std::vector<unsigned> perm(2 * n);
  for (unsigned k = 0; k < n; ++k) {
    perm[2 * k] = k;
    perm[2 * k + 1] = n + k;
  }
  return permutation(perm);
}

// interleaved -> (p1..pn, c1..cn)
Diagram deinterleave_wires(unsigned n) {
  std::vector<unsigned> perm(2 * n);
  for (unsigned k = 0; k < n; ++k) {
    perm[k] = 2 * k;
    perm[n + k] = 2 * k + 1;
  }
  return permutation(perm);
}

}  // namespace

SparseVector interp_column(const Diagram& d, std::uint64_t input_basis_state) {
  if (d.has_tick()) throw TickedDiagramError();
  check_width(d);
  Evaluator ev;
  return ev.column(d, input_basis_state);
}

Matrix interp(const Diagram& d) {
  if (d.has_tick()) throw TickedDiagramError();
  if (d.inputs() > 16 || d.outputs() > 16) throw std::invalid_argument("diagram too wide for a dense matrix");
  Evaluator ev;
  Matrix m(std::size_t{1} << d.outputs(), std::size_t{1} << d.inputs());
  for (std::uint64_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : ev.column(d, c)) m(r, c) = v;
  return m;
}

Diagram unzip(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Compose: return Diagram::compose(unzip(d.first()), unzip(d.second()));
    case Diagram::Kind::Tensor: return Diagram::tensor(unzip(d.first()), unzip(d.second()));
    case Diagram::Kind::Gen: break;
  }
  const Generator& g = d.generator();
  if (g.kind == GenKind::Tick) return swap();
  if (g.kind == GenKind::Id) return Diagram::tensor(id(g.inputs), id(g.inputs));
  Diagram pair = Diagram::tensor(d, conj_generator(g));
  return compose_all({interleave_wires(g.outputs), pair, deinterleave_wires(g.inputs)});
}

// ---------------------------------------------------------------------------
// Lin(ZW)

LinZW lin_compose(const LinZW& after, const LinZW& before) {
  if (after.n != before.m) throw ArityError("Lin(ZW) composition arity mismatch");
  const unsigned n = before.n;
  const unsigned m = before.m;
  const unsigned k = after.m;
  // Wires: a(n) i(k) then m caps [c_t, c'_t].
  Diagram start = Diagram::tensor(id(n + k), tensor_power(cap(), m));
  // -> a, c, i, c'
  std::vector<unsigned> p1;
  for (unsigned t = 0; t < n; ++t) p1.push_back(t);
  for (unsigned t = 0; t < m; ++t) p1.push_back(n + k + 2 * t);
  for (unsigned t = 0; t < k; ++t) p1.push_back(n + t);
  for (unsigned t = 0; t < m; ++t) p1.push_back(n + k + 2 * t + 1);
  Diagram step1 = Diagram::tensor(before.pure, id(k + m));  // -> o1(m) b(n) i(k) c'(m)
  // -> o1, i, b, c'
  std::vector<unsigned> p2;
  for (unsigned t = 0; t < m; ++t) p2.push_back(t);
  for (unsigned t = 0; t < k; ++t) p2.push_back(m + n + t);
  for (unsigned t = 0; t < n; ++t) p2.push_back(m + t);
  for (unsigned t = 0; t < m; ++t) p2.push_back(m + n + k + t);
  Diagram step2 = Diagram::tensor(after.pure, id(n + m));  // -> o2(k) j'(m) b(n) c'(m)
  // -> o2, b, [j'_t, c'_t]...
  std::vector<unsigned> p3;
  for (unsigned t = 0; t < k; ++t) p3.push_back(t);
  for (unsigned t = 0; t < n; ++t) p3.push_back(k + m + t);
  for (unsigned t = 0; t < m; ++t) {
    p3.push_back(k + t);
    p3.push_back(k + m + n + t);
  }
  Diagram finish = Diagram::tensor(id(k + n), tensor_power(cup(), m));
  Diagram pure =
      compose_all({finish, permutation(p3), step2, permutation(p2), step1, permutation(p1), start});
  return {pure, n, k};
}

LinZW lin_tensor(const LinZW& left, const LinZW& right) {
  const unsigned n1 = left.n, m1 = left.m, n2 = right.n, m2 = right.m;
  // (a1, a2, i1, i2) -> (a1, i1, a2, i2)
  std::vector<unsigned> pin;
  for (unsigned t = 0; t < n1; ++t) pin.push_back(t);
  for (unsigned t = 0; t < m1; ++t) pin.push_back(n1 + n2 + t);
  for (unsigned t = 0; t < n2; ++t) pin.push_back(n1 + t);
  for (unsigned t = 0; t < m2; ++t) pin.push_back(n1 + n2 + m1 + t);
  // (o1, b1, o2, b2) -> (o1, o2, b1, b2)
  std::vector<unsigned> pout;
  for (unsigned t = 0; t < m1; ++t) pout.push_back(t);
  for (unsigned t = 0; t < m2; ++t) pout.push_back(m1 + n1 + t);
  for (unsigned t = 0; t < n1; ++t) pout.push_back(m1 + t);
  for (unsigned t = 0; t < n2; ++t) pout.push_back(m1 + n1 + m2 + t);
  Diagram pure = compose_all({permutation(pout), Diagram::tensor(left.pure, right.pure), permutation(pin)});
  return {pure, n1 + n2, m1 + m2};
}

LinZW hp(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Compose: return lin_compose(hp(d.first()), hp(d.second()));
    case Diagram::Kind::Tensor: return lin_tensor(hp(d.first()), hp(d.second()));
    case Diagram::Kind::Gen: break;
  }
  const Generator& g = d.generator();
  if (g.kind == GenKind::Tick) return {Diagram::compose(cap(), cup()), 1, 1};
  return {Diagram::tensor(d, dagger(d)), g.inputs, g.outputs};
}

LinZW psi(const Diagram& doubled, unsigned n, unsigned m) {
  if (doubled.inputs() % 2 != 0 || doubled.outputs() % 2 != 0)
    throw ArityError("psi requires a doubled diagram with even arities, got " + std::to_string(doubled.inputs()) +
                     "->" + std::to_string(doubled.outputs()));
  if (doubled.inputs() != 2 * n || doubled.outputs() != 2 * m)
    throw ArityError("psi arity mismatch: diagram is not 2n->2m for the requested (n, m)");
  // a(n) i(m) [b'_t, b_t]...
  Diagram start = Diagram::tensor(id(n + m), tensor_power(cap(), n));
  // -> a1 b'1 ... an b'n, i, b
  std::vector<unsigned> p1;
  for (unsigned t = 0; t < n; ++t) {
    p1.push_back(t);
    p1.push_back(n + m + 2 * t);
  }
  for (unsigned t = 0; t < m; ++t) p1.push_back(n + t);
  for (unsigned t = 0; t < n; ++t) p1.push_back(n + m + 2 * t + 1);
  Diagram body = Diagram::tensor(doubled, id(m + n));  // -> o1 i'1 ... om i'm, i(m), b(n)
  // -> o, [i'_t, i_t]..., b
  std::vector<unsigned> p2;
  for (unsigned t = 0; t < m; ++t) p2.push_back(2 * t);
  for (unsigned t = 0; t < m; ++t) {
    p2.push_back(2 * t + 1);
    p2.push_back(2 * m + t);
  }
  for (unsigned t = 0; t < n; ++t) p2.push_back(3 * m + t);
  Diagram finish = tensor_all({id(m), tensor_power(cup(), m), id(n)});
  return {compose_all({finish, permutation(p2), body, permutation(p1), start}), n, m};
}

Diagram psi_inv(const LinZW& l) {
  const unsigned n = l.n;
  const unsigned m = l.m;
  // (a1 b1 ... an bn) [i'_t, i_t]...
  Diagram start = Diagram::tensor(id(2 * n), tensor_power(cap(), m));
  // -> a, i', b, i
  std::vector<unsigned> p1;
  for (unsigned t = 0; t < n; ++t) p1.push_back(2 * t);
  for (unsigned t = 0; t < m; ++t) p1.push_back(2 * n + 2 * t);
  for (unsigned t = 0; t < n; ++t) p1.push_back(2 * t + 1);
  for (unsigned t = 0; t < m; ++t) p1.push_back(2 * n + 2 * t + 1);
  Diagram body = Diagram::tensor(l.pure, id(n + m));  // -> o(m) b'(n) b(n) i(m)
  // -> [b'_t, b_t]..., o1 i1 ... om im
  std::vector<unsigned> p2;
  for (unsigned t = 0; t < n; ++t) {
    p2.push_back(m + t);
    p2.push_back(m + n + t);
  }
  for (unsigned t = 0; t < m; ++t) {
    p2.push_back(t);
    p2.push_back(m + 2 * n + t);
  }
  Diagram finish = Diagram::tensor(tensor_power(cup(), n), id(2 * m));
  return compose_all({finish, permutation(p2), body, permutation(p1), start});
}

// ---------------------------------------------------------------------------
// Superoperators and Choi matrices

Matrix superoperator(const Diagram& d) {
  if (d.inputs() > 8 || d.outputs() > 8) throw std::invalid_argument("superoperator too large for a dense matrix");
  return interp(unzip(d));
}

Matrix vec(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("vec expects a square matrix");
  const unsigned n = rho.in_wires();
  Matrix v(rho.rows() * rho.cols(), 1);
  for (std::uint64_t x = 0; x < rho.rows(); ++x)
    for (std::uint64_t y = 0; y < rho.cols(); ++y) v(interleave(x, y, n), 0) = rho(x, y);
  return v;
}

Matrix unvec(const Matrix& v) {
  if (v.cols() != 1 || v.out_wires() % 2 != 0) throw std::invalid_argument("unvec expects a 4^n column vector");
  const unsigned n = v.out_wires() / 2;
  Matrix rho(std::size_t{1} << n, std::size_t{1} << n);
  for (std::uint64_t x = 0; x < rho.rows(); ++x)
    for (std::uint64_t y = 0; y < rho.cols(); ++y) rho(x, y) = v(interleave(x, y, n), 0);
  return rho;
}

Matrix apply_superop(const Diagram& d, const Matrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() != (std::size_t{1} << d.inputs()))
    throw std::invalid_argument("density matrix dimension " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()) + " does not match a " + std::to_string(d.inputs()) +
                                "-wire input");
  return unvec(superoperator(d) * vec(rho));
}

Matrix choi(const Diagram& d) {
  const unsigned n = d.inputs();
  const unsigned m = d.outputs();
  Matrix u = superoperator(d);
  Matrix f(std::size_t{1} << (n + m), std::size_t{1} << (n + m));
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
    for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l) {
      const std::uint64_t col = interleave(k, l, n);
      for (std::uint64_t o = 0; o < (std::uint64_t{1} << m); ++o)
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i)
          f((k << m) | o, (l << m) | i) = u(interleave(o, i, m), col);
    }
  return f;
}

Matrix proper_choi(const Diagram& d) {
  const unsigned n = d.inputs();
  const unsigned m = d.outputs();
  Matrix f = choi(d);
  Matrix g(f.rows(), f.cols());
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
    for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l)
      for (std::uint64_t o = 0; o < (std::uint64_t{1} << m); ++o)
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i)
          g((k << m) | o, (l << m) | i) = f((l << m) | o, (k << m) | i);
  return g;
}

Matrix state_operator(const Diagram& d) {
  if (d.inputs() != 0)
    throw ArityError("state_operator expects a state (0 inputs), got " + std::to_string(d.inputs()) + " inputs");
  const unsigned n = d.outputs();
  if (n > 12) throw std::invalid_argument("state too wide for a dense operator");
  Matrix rho(std::size_t{1} << n, std::size_t{1} << n);
  for (const auto& [key, v] : interp_column(unzip(d), 0)) {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    for (unsigned j = 0; j < n; ++j) {
      x = (x << 1) | bit(key, 2 * n, 2 * j);
      y = (y << 1) | bit(key, 2 * n, 2 * j + 1);
    }
    rho(x, y) = v;
  }
  return rho;
}

bool is_hermitian_choi(const Matrix& choi_matrix) { return choi_matrix.is_hermitian(); }

bool is_hermiticity_preserving(const Diagram& d) { return is_hermitian_choi(choi(d)); }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

double default_tolerance() {
  if (const char* env = std::getenv("ZWT_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v >= 0) return v;
    throw std::invalid_argument(std::string("ZWT_TOLERANCE is not a non-negative decimal: ") + env);
  }
  return 1e-9;
}

double min_eigenvalue(const Matrix& hermitian) {
  if (hermitian.rows() != hermitian.cols()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian.to_eigen(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return std::numeric_limits<double>::quiet_NaN();
  return solver.eigenvalues().minCoeff();
}

Verdict is_psd_numeric(const Matrix& hermitian, double tolerance) {
  double lo = min_eigenvalue(hermitian);
  if (!std::isfinite(lo)) return Verdict::Indeterminate;
  return lo >= -tolerance ? Verdict::Yes : Verdict::No;
}

Scalar determinant(const Matrix& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = square.rows();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = square(r, c);
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Scalar inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Scalar f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

bool is_psd_exact(const Matrix& hermitian) {
  if (!hermitian.is_hermitian()) return false;
  const std::size_t n = hermitian.rows();
  if (n > 4) throw std::invalid_argument("exact PSD certification is limited to dimension <= 4");
  // All principal minors must be non-negative. Sizes are powers of two, so
  // minors are stored in plain vectors rather than Matrix.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    const std::size_t s = idx.size();
    std::vector<std::vector<Scalar>> a(s, std::vector<Scalar>(s));
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) a[r][c] = hermitian(idx[r], idx[c]);
    Scalar det(1);
    bool singular = false;
    for (std::size_t col = 0; col < s && !singular; ++col) {
      std::size_t piv = col;
      while (piv < s && a[piv][col].is_zero()) ++piv;
      if (piv == s) {
        singular = true;
        break;
      }
      if (piv != col) {
        std::swap(a[piv], a[col]);
        det = -det;
      }
      det *= a[col][col];
      Scalar inv = a[col][col].inverse();
      for (std::size_t r = col + 1; r < s; ++r) {
        Scalar f = a[r][col] * inv;
        for (std::size_t c = col; c < s; ++c) a[r][c] -= f * a[col][c];
      }
    }
    if (!singular && det.real_sign() < 0) return false;
  }
  return true;
}

Verdict is_completely_positive(const Diagram& d, double tolerance) {
  Matrix f = choi(d);
  if (!f.is_hermitian()) return Verdict::No;
  return is_psd_numeric(f, tolerance);
}

}  // namespace zwtick
