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

#include "oracle.hpp"
#include "zwtick/normalform.hpp"
#include "zwtick/qinfo.hpp"
#include "zwtick/random.hpp"

using namespace zwtick;

namespace {

constexpr double kEigTol = 1e-9;

Matrix bell_projector() {
  Matrix m(4, 4);
  for (std::size_t r : {0u, 3u})
    for (std::size_t c : {0u, 3u}) m(r, c) = Scalar(1);
  return m;
}

Matrix projector(unsigned n, std::uint64_t k) { return oracle::unit(n, k, k); }

Diagram doubled_basis(int bit) { return bit ? ket1() : ket0(); }

}  // namespace

TEST_CASE("partial transpose") {
  CHECK(partial_transpose(bell_projector(), 1) == oracle::interp(swap()));
  Rng rng(60);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_hermitian(rng, 1, 1.0), b = random_hermitian(rng, 2, 0.7);
    CHECK(partial_transpose(kron(a, b), 1) == kron(a.transpose(), b));
    Matrix rho = random_hermitian(rng, 3, 0.6);
    CHECK(partial_transpose(partial_transpose(rho, 2), 2) == rho);
    CHECK(partial_transpose(rho, 2) == oracle::partial_transpose(rho, 2));
  }
  CHECK_THROWS_AS(partial_transpose(Matrix(4, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(partial_transpose(Matrix::identity(4), 3), std::invalid_argument);
}

TEST_CASE("PPT criterion") {
  CHECK(ppt_check(bell_projector(), 1, kEigTol) == Verdict::No);
  CHECK(min_partial_transpose_eigenvalue(bell_projector(), 1) == doctest::Approx(-1.0).epsilon(kEigTol));
  CHECK(ppt_check(projector(2, 0), 1, kEigTol) == Verdict::Yes);
  CHECK(ppt_check(projector(2, 0) + projector(2, 3), 1, kEigTol) == Verdict::Yes);
  Matrix bad(4, 4);
  bad(0, 1) = Scalar(1);
  CHECK_THROWS_AS(ppt_check(bad, 1), NotHermitianError);
  Rng rng(61);
  for (int t = 0; t < 20; ++t) CHECK(ppt_check(random_separable(rng, 1, 1, 3), 1, kEigTol) == Verdict::Yes);
}

TEST_CASE("Bloch vectors") {
  Matrix p0 = projector(1, 0);
  CHECK(bloch(p0) == BlochVector{Scalar(0), Scalar(0), Scalar(1)});
  Matrix mixed = Matrix::identity(2) * Scalar::rational(1, 2);
  CHECK(bloch(mixed) == BlochVector{Scalar(0), Scalar(0), Scalar(0)});
  CHECK_THROWS_AS(bloch(Matrix::identity(2)), std::invalid_argument);
  Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    BlochVector v = random_bloch(rng);
    Matrix rho = from_bloch(v);
    CHECK(rho.trace() == Scalar(1));
    CHECK(bloch(rho) == v);
    CHECK(from_bloch(bloch(rho)) == rho);
  }
}

TEST_CASE("spin flip") {
  CHECK(spin_flip(projector(1, 0)) == projector(1, 1));
  Matrix mixed = Matrix::identity(2) * Scalar::rational(1, 2);
  CHECK(spin_flip(mixed) == mixed);
  Rng rng(63);
  for (int t = 0; t < 50; ++t) {
    Matrix rho = from_bloch(random_bloch(rng));
    CHECK(bloch(spin_flip(rho)) == -bloch(rho));
    CHECK(apply_superop(spin_flip_diagram(), rho) == spin_flip(rho));
  }
}

TEST_CASE("sesquilinear pairing") {
  Diagram pi = ket_plus_i();
  CHECK(sesqui_pairing(pi, pi, false) == Scalar(0));
  CHECK(sesqui_pairing(pi, pi, true) == Scalar(1));
  CHECK(sesqui_pairing(doubled_basis(0), doubled_basis(1), true) == Scalar(0));
  CHECK(sesqui_pairing(doubled_basis(0), doubled_basis(0), true) == Scalar(1));
  CHECK_THROWS_AS(sesqui_pairing(ket0(), cap(), true), ArityError);
  // Plain and ticked pairings agree on real-amplitude states.
  Rng rng(64);
  for (int t = 0; t < 20; ++t) {
    Matrix v(4, 1), u(4, 1);
    for (std::size_t r = 0; r < 4; ++r) {
      v(r, 0) = random_real(rng);
      u(r, 0) = random_real(rng);
    }
    if (v.is_zero() || u.is_zero()) continue;
    Diagram a = pure_state_from_vector(v), b = pure_state_from_vector(u);
    CHECK(sesqui_pairing(a, b, false) == sesqui_pairing(a, b, true));
    // Ticked pairing of pure states is |<v|u>|^2.
    Scalar inner = (v.adjoint() * u)(0, 0);
    CHECK(sesqui_pairing(a, b, true) == inner * inner.conj());
  }
}

TEST_CASE("internal dagger") {
  CHECK(diagrams_equal(internal_dagger(id(1)), id(1)));
  Rng rng(65);
  for (int t = 0; t < 20; ++t) {
    Diagram d = random_diagram(rng, {5, 2, true, true, {}, {}});
    CHECK(diagrams_equal(internal_dagger(internal_dagger(d)), d));
  }
  for (int t = 0; t < 20; ++t) {
    TermOptions o{4, 2, true, true, 1, 2};
    Diagram d = random_diagram(rng, o);
    Diagram x = pure_state_from_vector(random_vector(rng, 2));
    Diagram y = pure_state_from_vector(random_vector(rng, 1));
    CHECK(sesqui_pairing(Diagram::compose(internal_dagger(d), x), y, true) ==
          sesqui_pairing(x, Diagram::compose(d, y), true));
  }
}

TEST_CASE("semantic unitarity") {
  CHECK(is_unitary_semantic(not_gate()));
  CHECK(is_unitary_semantic(tick()));
  CHECK(is_unitary_semantic(fswap()));
  CHECK_FALSE(is_unitary_semantic(Diagram::compose(ket0(), ground())));
  CHECK_FALSE(is_unitary_semantic(w_spider(1, 2)));
}
