# Copyright 2026 The zwtick Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath

import pytest

import zwtick as zw


def test_scalar_field():
    w = zw.Scalar.omega()
    assert w * w * w * w == zw.Scalar(-1)
    assert zw.Scalar.sqrt2() * zw.Scalar.sqrt2() == zw.Scalar(2)
    assert complex(w) == pytest.approx(cmath.exp(1j * cmath.pi / 4))
    assert zw.Scalar("1/2") + zw.Scalar("1/2") == zw.Scalar(1)


def test_tick_is_an_involution():
    tt = zw.Diagram.parse("(compose tick tick)")
    assert zw.diagrams_equal(tt, zw.id(1))
    assert not zw.diagrams_equal(zw.tick(), zw.id(1))


def test_choi_and_classification():
    swap = zw.Matrix.from_rows([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert zw.choi(zw.tick()) == swap
    assert zw.is_hermiticity_preserving(zw.tick())
    assert zw.is_completely_positive(zw.tick()) == "no"
    assert zw.is_completely_positive(zw.ground()) == "yes"


def test_normal_form_round_trip():
    w = zw.Scalar.omega()
    h = zw.Matrix.from_rows([[1, w.conj()], [w, -2]])
    nf = zw.nf_from_matrix(h)
    assert nf.n == 1
    assert zw.state_operator(zw.nf_to_diagram(nf)) == h
    assert zw.NormalForm.parse(str(nf)) == nf


def test_ppt_and_spin_flip():
    bell = zw.Matrix.from_rows([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]])
    assert zw.ppt_check(bell, 1) == "no"
    rho = zw.Matrix.from_rows([["3/4", "1/4"], ["1/4", "1/4"]])
    x, y, z = zw.bloch(rho)
    fx, fy, fz = zw.bloch(zw.spin_flip(rho))
    assert (fx, fy, fz) == (-x, -y, -z)
    assert zw.apply_superop(zw.spin_flip_diagram(), rho) == zw.spin_flip(rho)


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        zw.Diagram.parse("(compose tick")
    with pytest.raises(ValueError):
        zw.Diagram.compose(zw.tick(), zw.cup())


def test_reports():
    assert zw.check_lemmas().endswith("/0 failures\n")
    assert "tl" in zw.rule_names()
