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

"""Topological invariants of two-dimensional band models.

The heavy lifting lives in the compiled extension: exact Wilson-loop /
plaquette-flux oracles, statevector and bond-dimension-limited MPS circuit
simulation, Hadamard-test and phase-estimation readout.
"""

from ._core import (  # noqa: F401
    BackendError,
    BlochModel,
    ConfigError,
    GapClosureError,
    HaldaneModel,
    QwzModel,
    __version__,
    chern_fukui,
    flux,
    ground_prep_unitary,
    ground_state,
    haldane_h,
    heisenberg_twist_phase,
    hybrid_wannier_trace,
    plaquette_flux,
    qwz_h,
    reconstruct_theta,
    sweep,
    wannier,
    wilson_loop,
    winding_number,
)

__all__ = [
    "BackendError",
    "BlochModel",
    "ConfigError",
    "GapClosureError",
    "HaldaneModel",
    "QwzModel",
    "__version__",
    "chern_fukui",
    "flux",
    "ground_prep_unitary",
    "ground_state",
    "haldane_h",
    "heisenberg_twist_phase",
    "hybrid_wannier_trace",
    "plaquette_flux",
    "qwz_h",
    "reconstruct_theta",
    "sweep",
    "wannier",
    "wilson_loop",
    "winding_number",
]
