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

namespace chernsim::adiabatic {

/// Where the Hamiltonian is sampled within each momentum increment.
enum class SamplePoint { kLeftEndpoint, kMidpoint };

/// Discretized momentum path. `points` has one entry per increment endpoint;
/// closed paths repeat the first point bitwise at the end. `deltas[j]` is
/// the increment vector from points[j] (kept explicitly so closure across
/// the zone boundary keeps a well-defined direction).
struct MomentumPath {
  std::vector<Vector2d> points;
  std::vector<Vector2d> deltas;
  bool closed = false;
  double total_time = 0.0;  // assigned when a plan is built; 0 = untimed

  int increments() const { return static_cast<int>(deltas.size()); }
  Vector2d sample(int j, SamplePoint mode) const;
};

/// One Trotter factor exp(-i * sign * h * dt).
struct PlanFactor {
  Matrix2c h;
  double dt = 0.0;
  int sign = +1;

  Matrix2c gate() const { return numerics::expm_i_hermitian_2x2(h, dt, sign); }
};

/// Ordered factor list realizing a (possibly sign-split) adiabatic
/// evolution; factors apply to the state front-to-back.
struct EvolutionPlan {
  std::vector<PlanFactor> factors;
  MomentumPath path;

  /// Product of all factor gates, latest leftmost (test oracle).
  Matrix2c unitary() const;
  /// Factors in reverse order with flipped signs: the exact inverse.
  EvolutionPlan reversed() const;
  /// This plan followed by `other`.
  EvolutionPlan then(const EvolutionPlan& other) const;
};

/// Counterclockwise square loop: corner -> +dk in x -> +dk in y -> back,
/// each link subdivided into steps_per_link equal increments. Closed
/// bitwise.
MomentumPath plaquette_path(const Vector2d& k_corner, double dk, int steps_per_link);

/// Line sweep at fixed ky with kx from -pi to pi, closed by zone
/// periodicity. Each half of the sweep carries n_k increments of pi/n_k (so
/// n_k = 100 gives 200 increments of pi/100 in total); the final point
/// wraps to kx = -pi bitwise.
MomentumPath line_path(double ky, int n_k);

/// One exponential factor per path increment with dt = T / increments.
EvolutionPlan trotterize(const BlochModel& model, const MomentumPath& path, double total_time,
                         int sign, SamplePoint mode = SamplePoint::kLeftEndpoint);

/// Forward traversal (sign +1) followed by the same traversal with sign -1:
/// acting on the ground state the dynamical phases cancel factor by factor
/// and the accumulated phase is twice the loop Berry phase.
EvolutionPlan double_loop_plan(const BlochModel& model, const MomentumPath& path,
                               double total_time, SamplePoint mode = SamplePoint::kLeftEndpoint);

/// Single kx sweep with the evolution sign flipped at the midpoint,
/// exploiting E0(kx, ky) = E0(-kx, ky). Samples each increment at its
/// midpoint so the flipped-sign half cancels the dynamical phase of the
/// first half exactly, pair by pair; the accumulated phase is the Berry
/// phase itself (not twice it). Each half spans total_time.
/// Throws std::invalid_argument when the model violates the mirror symmetry
/// by more than 1e-9 at any paired sample.
EvolutionPlan mirror_symmetric_plan(const BlochModel& model, double ky, int n_k,
                                    double total_time);

}  // namespace chernsim::adiabatic
