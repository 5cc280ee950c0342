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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "zwtick/qinfo.hpp"
#include "zwtick/random.hpp"
#include "zwtick/semantics.hpp"

using namespace zwtick;

namespace {

constexpr double kEigTol = 1e-9;

Matrix swap_matrix() { return oracle::interp(swap()); }

Matrix bell_corners() {
  Matrix m(4, 4);
  for (std::size_t r : {0u, 3u})
    for (std::size_t c : {0u, 3u}) m(r, c) = Scalar(1);
  return m;
}

TermOptions pure_terms(unsigned gens = 6, unsigned wires = 3) { return {gens, wires, false, true, {}, {}}; }
TermOptions ticked_terms(unsigned gens = 6, unsigned wires = 3) { return {gens, wires, true, true, {}, {}}; }

// Inverse Choi map: S(rho) = Tr_ref[F (rho^T (x) 1)].
Matrix from_choi(const Matrix& f, unsigned n, unsigned m, const Matrix& rho) {
  Matrix out(std::size_t{1} << m, std::size_t{1} << m);
  for (std::uint64_t o = 0; o < out.rows(); ++o)
    for (std::uint64_t i = 0; i < out.cols(); ++i)
      for (std::uint64_t k = 0; k < (1u << n); ++k)
        for (std::uint64_t l = 0; l < (1u << n); ++l)
          out(o, i) += f((k << m) | o, (l << m) | i) * rho(k, l);
  return out;
}

}  // namespace

TEST_CASE("interp examples") {
  Matrix w03(8, 1);
  w03(1, 0) = w03(2, 0) = w03(4, 0) = Scalar(1);
  CHECK(interp(w_spider(0, 3)) == w03);
  Matrix z5 = Matrix::identity(2);
  z5(1, 1) = Scalar(5);
  CHECK(interp(z_spider(Scalar(5), 1, 1)) == z5);
  Matrix f = interp(fswap());
  CHECK(f(3, 3) == Scalar(-1));
  CHECK(f(1, 2) == Scalar(1));
  CHECK(f(2, 1) == Scalar(1));
  CHECK(interp(Diagram::compose(cup(), cap())).rows() == 1);
  CHECK(interp(Diagram::compose(cup(), cap()))(0, 0) == Scalar(2));
  CHECK_THROWS_AS(interp(tick()), TickedDiagramError);
}

TEST_CASE("sparse interp agrees with the dense Kronecker oracle") {
  Rng rng(20);
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_diagram(rng, pure_terms(8, 4));
    CHECK(interp(d) == oracle::interp(d));
  }
}

TEST_CASE("functoriality") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    Diagram a = random_diagram(rng, pure_terms());
    TermOptions o = pure_terms();
    o.inputs = a.outputs();
    Diagram b = random_diagram(rng, o);
    CHECK(interp(Diagram::compose(b, a)) == interp(b) * interp(a));
    CHECK(interp(Diagram::tensor(a, b)) == kron(interp(a), interp(b)));
  }
}

TEST_CASE("unzip examples") {
  CHECK(unzip(tick()) == swap());
  CHECK(unzip(id(1)) == Diagram::tensor(id(1), id(1)));
  Matrix expected(4, 4);
  expected(0, 0) = Scalar(1);
  expected(1, 1) = Scalar::omega(1).conj();
  expected(2, 2) = Scalar::omega(1);
  expected(3, 3) = Scalar(1);
  CHECK(interp(unzip(z_spider(Scalar::omega(1), 1, 1))) == expected);
}

TEST_CASE("doubling law") {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    Diagram d = random_diagram(rng, pure_terms());
    Matrix a = oracle::interp(d);
    Matrix rho = random_hermitian(rng, d.inputs(), 0.7);
    CHECK(apply_superop(d, rho) == a * rho * a.adjoint());
  }
}

TEST_CASE("superoperator examples") {
  Matrix e01(2, 2);
  e01(0, 1) = Scalar(1);
  CHECK(apply_superop(tick(), e01) == e01.transpose());
  Rng rng(23);
  Matrix rho = random_hermitian(rng, 1, 1.0);
  Matrix tr = apply_superop(ground(), rho);
  CHECK(tr.rows() == 1);
  CHECK(tr(0, 0) == rho.trace());
  Matrix x = oracle::interp(not_gate());
  CHECK(apply_superop(not_gate(), rho) == x * rho * x);
  CHECK_THROWS_AS(apply_superop(tick(), Matrix::identity(4)), std::invalid_argument);
}

TEST_CASE("tick acts as a partial transpose") {
  Rng rng(24);
  for (int t = 0; t < 50; ++t) {
    Matrix rho = random_hermitian(rng, 3, 0.6);
    CHECK(apply_superop(Diagram::tensor(tick(), id(2)), rho) == oracle::partial_transpose(rho, 1));
    CHECK(apply_superop(Diagram::tensor(tick(), id(2)), rho) == partial_transpose(rho, 1));
  }
}

TEST_CASE("psi of unzip equals hp") {
  CHECK(interp(psi(unzip(tick()), 1, 1).pure) == interp(hp(tick()).pure));
  Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    Diagram d = random_diagram(rng, ticked_terms(6, 3));
    LinZW l = hp(d);
    CHECK(l.n == d.inputs());
    CHECK(l.m == d.outputs());
    CHECK(interp(iota(l)) == interp(iota(psi(unzip(d), d.inputs(), d.outputs()))));
  }
}

TEST_CASE("psi and psi_inv are inverse") {
  CHECK_THROWS_AS(psi(tick(), 1, 1), ArityError);
  CHECK_THROWS_AS(psi(w_spider(1, 2), 1, 1), ArityError);
  LinZW ident = psi(Diagram::tensor(id(1), id(1)), 1, 1);
  CHECK(interp(ident.pure) == Matrix::identity(4));
  Rng rng(26);
  for (int t = 0; t < 50; ++t) {
    TermOptions o = pure_terms(6, 4);
    Diagram f = random_diagram(rng, o);
    if (f.inputs() % 2 || f.outputs() % 2) continue;
    const unsigned n = f.inputs() / 2, m = f.outputs() / 2;
    LinZW l = psi(f, n, m);
    CHECK(interp(psi_inv(l)) == interp(f));
    CHECK(interp(psi(psi_inv(l), n, m).pure) == interp(l.pure));
  }
}

TEST_CASE("choi examples") {
  CHECK(choi(id(1)) == bell_corners());
  CHECK(choi(tick()) == swap_matrix());
  CHECK(choi(ground()) == Matrix::identity(2));
  CHECK(proper_choi(id(1)) == swap_matrix());
  CHECK(proper_choi(tick()) == bell_corners());
  Diagram diag = z_spider(Scalar::omega(1), 1, 1);
  CHECK(proper_choi(diag) == oracle::partial_transpose(choi(diag), 1));
  CHECK(proper_choi(diag) != choi(diag));
}

TEST_CASE("choi agrees with the definition and its inverse") {
  Rng rng(27);
  for (int t = 0; t < 40; ++t) {
    Diagram d = random_diagram(rng, ticked_terms(5, 2));
    const unsigned n = d.inputs(), m = d.outputs();
    Matrix f = choi(d);
    CHECK(f == oracle::choi_of(n, m, [&](const Matrix& r) { return apply_superop(d, r); }));
    Matrix rho = random_hermitian(rng, n, 0.8);
    CHECK(from_choi(f, n, m, rho) == apply_superop(d, rho));
  }
}

TEST_CASE("state operators") {
  Matrix p0(2, 2);
  p0(0, 0) = Scalar(1);
  CHECK(state_operator(z_spider(Scalar(0), 0, 1)) == p0);
  CHECK(state_operator(Diagram::compose(Diagram::tensor(id(1), tick()), cap())) == swap_matrix());
  Matrix empty = state_operator(id(0));
  CHECK(empty.rows() == 1);
  CHECK(empty(0, 0) == Scalar(1));
  CHECK_THROWS_AS(state_operator(tick()), ArityError);
  Rng rng(28);
  for (int t = 0; t < 100; ++t) {
    Diagram s = random_state(rng, 1 + t % 3, 6);
    Matrix h = state_operator(s);
    CHECK(h == h.adjoint());
    CHECK(h == choi(s));
  }
}

TEST_CASE("hermiticity preservation") {
  CHECK(is_hermiticity_preserving(tick()));
  Matrix bad(2, 2);
  bad(0, 1) = Scalar(1);
  CHECK_FALSE(is_hermitian_choi(bad));
  Rng rng(29);
  for (int t = 0; t < 100; ++t) CHECK(is_hermiticity_preserving(random_diagram(rng, ticked_terms(6, 3))));
}

TEST_CASE("complete positivity") {
  CHECK(is_completely_positive(ground()) == Verdict::Yes);
  CHECK(is_completely_positive(tick()) == Verdict::No);
  CHECK(min_eigenvalue(choi(tick())) == doctest::Approx(-1.0).epsilon(kEigTol));
  Rng rng(30);
  for (int t = 0; t < 30; ++t) CHECK(is_completely_positive(random_diagram(rng, pure_terms(5, 2))) == Verdict::Yes);
}

TEST_CASE("exact PSD certificate agrees with the numeric test") {
  CHECK(is_psd_exact(Matrix::identity(4)));
  CHECK_FALSE(is_psd_exact(swap_matrix()));
  CHECK(is_psd_exact(bell_corners()));
  CHECK_THROWS_AS(is_psd_exact(Matrix::identity(8)), std::invalid_argument);
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    Matrix h = t % 2 ? random_positive(rng, 2) : random_hermitian(rng, 2, 0.8);
    const bool exact = is_psd_exact(h);
    const Verdict numeric = is_psd_numeric(h, kEigTol);
    if (numeric != Verdict::Indeterminate) CHECK(exact == (numeric == Verdict::Yes));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(swap_matrix()) == Scalar(-1));
  CHECK(determinant(bell_corners()) == Scalar(0));
  Matrix m = Matrix::identity(2);
  m(0, 1) = Scalar::omega(1);
  m(1, 0) = Scalar::omega(3);
  CHECK(determinant(m) == Scalar(1) - Scalar::omega(4));
}

TEST_CASE("tolerance comes from the environment") {
  CHECK(default_tolerance() > 0.0);
}
