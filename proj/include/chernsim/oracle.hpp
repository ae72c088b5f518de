// Copyright 2026 The chernsim Authors
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

#include <vector>

#include "chernsim/common.hpp"
#include "chernsim/models.hpp"

namespace chernsim::oracle {

/// N x N grid of per-plaquette Berry fluxes over the first reduced zone
/// [-pi, pi)^2. grid[iy][ix] is the flux through the plaquette whose
/// lower-left corner sits at (-pi + ix*dk, -pi + iy*dk) with dk = 2pi/N.
struct FluxGrid {
  int n = 0;
  double origin = -kPi;
  double extent = 2.0 * kPi;
  std::vector<std::vector<double>> flux;  // [iy][ix], radians, |flux| <= pi
  double chern_real = 0.0;                // sum(flux) / 2pi
  int chern_int = 0;                      // rounded half away from zero

  double total_flux() const;
};

/// Hybrid Wannier centers X_W(ky) with the winding extracted over the
/// closed ky sweep.
struct WannierTrace {
  std::vector<double> ky;
  std::vector<double> centers;  // in [-pi, pi)
  int winding = 0;
};

/// Berry phase of a discretized closed loop of states: the argument of the
/// ordered product of consecutive overlaps <s_j|s_{j+1}> (closure term
/// included). Gauge invariant; result in (-pi, pi]. Sign convention: this
/// equals minus the phase an adiabatic evolution along the loop
/// accumulates, and is what the interferometric readout reconstructs (its
/// sine branch conjugates the kicked-back phase).
///
/// Throws std::invalid_argument when fewer than 2 states are given and
/// std::runtime_error when a consecutive overlap has modulus below 1e-6
/// (loop discretization too coarse).
double wilson_loop(const std::vector<VectorXc>& states);

/// Berry flux through one plaquette, computed from the four gauge-covariant
/// corner overlaps taken counterclockwise from k_corner.
/// Throws GapClosureError when a corner is degenerate.
double plaquette_flux(const BlochModel& model, const Vector2d& k_corner, double dk);

/// Lattice Chern number on an N x N plaquette grid. The total flux is an
/// exact multiple of 2pi for any gapped model (each link overlap appears in
/// exactly two plaquettes with opposite orientation).
FluxGrid chern_fukui(const BlochModel& model, int n);

/// Per-ky Wilson loop along kx with periodic closure, plus the winding of
/// the resulting centers across the zone.
WannierTrace hybrid_wannier_trace(const BlochModel& model, int n_kx, int n_ky);

/// Ground-state Berry phase of the twisted Heisenberg chain over the
/// theta in [0, 2pi) loop, discretized at n_theta points. The result is
/// quantized to {0, pi} (mod 2pi); callers check the residual.
/// Throws std::runtime_error on ground-state degeneracy along the loop.
double heisenberg_twist_berry_phase(const TwistedHeisenbergChain& chain, int n_theta);

/// Rounding rule used for Chern estimates: half away from zero.
int round_chern(double chern_real);

}  // namespace chernsim::oracle
