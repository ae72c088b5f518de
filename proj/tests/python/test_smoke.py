# Copyright 2026 The chernsim Authors
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

import math

import pytest

chernsim = pytest.importorskip("chernsim")


def test_qwz_hamiltonian_values():
    h = chernsim.qwz_h(0.0, 0.0, 1.0)
    assert abs(h[0][0] - 3.0) < 1e-12
    assert abs(h[1][1] + 3.0) < 1e-12
    assert abs(h[0][1]) < 1e-12


def test_oracle_chern_table():
    for u, expected in [(-3.0, 0), (-1.0, -1), (1.0, 1), (3.0, 0)]:
        _, chern, real = chernsim.chern_fukui(chernsim.QwzModel(u), 15)
        assert chern == expected
        assert abs(real - expected) < 1e-9


def test_haldane_classification():
    _, chern, _ = chernsim.chern_fukui(chernsim.HaldaneModel(0.0, math.pi / 2), 15)
    assert chern == 1
    _, chern, _ = chernsim.chern_fukui(chernsim.HaldaneModel(6.0, 0.7), 15)
    assert chern == 0


def test_gap_closure_raises():
    with pytest.raises(chernsim.GapClosureError):
        chernsim.chern_fukui(chernsim.QwzModel(-2.0), 15)


def test_wilson_loop_and_winding():
    states = [[1.0, 0.0], [0.70710678118654757, 0.70710678118654757j]]
    # two-state loop: arg(<s1|s2><s2|s1>) = 0
    assert abs(chernsim.wilson_loop(states)) < 1e-12
    centers = [
        math.remainder(-math.pi + 2 * math.pi * i / 16, 2 * math.pi) for i in range(16)
    ]
    assert chernsim.winding_number(centers) == 1


def test_hybrid_wannier_trace():
    ky, centers, winding = chernsim.hybrid_wannier_trace(chernsim.QwzModel(1.0), 60, 16)
    assert winding == 1
    assert len(ky) == len(centers) == 16


def test_reconstruct_theta():
    assert abs(chernsim.reconstruct_theta(1.0, 0.5)) < 1e-12
    assert abs(chernsim.reconstruct_theta(0.5, 0.0) - math.pi / 2) < 1e-12


def test_flux_pipeline_statevector_small_grid():
    record = chernsim.flux(model="qwz", u=1.0, backend="statevector", grid_n=9)
    assert record["chern_int"] == 1
    assert abs(record["chern_real"] - 1.0) < 0.1
    assert len(record["grid"]) == 9


def test_wannier_pipeline_small_qpe():
    record = chernsim.wannier(
        model="qwz",
        u=1.0,
        backend="mps",
        chi_max=8,
        n_k=24,
        qpe_m=7,
        qpe_m_meas=6,
        n_ky=10,
        total_time=6.0,
    )
    assert record["trace"]["winding"] == 1


def test_heisenberg_quantization():
    gamma, nearest, residual = chernsim.heisenberg_twist_phase(4, n_theta=100)
    assert residual < 1e-6
    assert nearest in (0.0, math.pi)
