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

#include "chernsim/adiabatic.hpp"

#include <cmath>

namespace chernsim::adiabatic {

Vector2d MomentumPath::sample(int j, SamplePoint mode) const {
  const Vector2d& left = points[static_cast<std::size_t>(j)];
  if (mode == SamplePoint::kLeftEndpoint) return left;
  return left + 0.5 * deltas[static_cast<std::size_t>(j)];
}

Matrix2c EvolutionPlan::unitary() const {
  Matrix2c u = Matrix2c::Identity();
  for (const PlanFactor& f : factors) u = f.gate() * u;
  return u;
}

EvolutionPlan EvolutionPlan::reversed() const {
  EvolutionPlan out;
  out.path = path;
  out.factors.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out.factors.push_back({it->h, it->dt, -it->sign});
  }
  return out;
}

EvolutionPlan EvolutionPlan::then(const EvolutionPlan& other) const {
  EvolutionPlan out = *this;
  out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
  return out;
}

MomentumPath plaquette_path(const Vector2d& k_corner, double dk, int steps_per_link) {
  if (steps_per_link < 1) throw std::invalid_argument("plaquette_path: steps_per_link must be >= 1");
  const Vector2d legs[4] = {{dk, 0.0}, {0.0, dk}, {-dk, 0.0}, {0.0, -dk}};
  MomentumPath path;
  path.closed = true;
  Vector2d at = k_corner;
  path.points.push_back(at);
  for (const Vector2d& leg : legs) {
    const Vector2d step = leg / steps_per_link;
    for (int s = 0; s < steps_per_link; ++s) {
      at += step;
      path.deltas.push_back(step);
      path.points.push_back(at);
    }
  }
  path.points.back() = k_corner;  // bitwise closure
  return path;
}

MomentumPath line_path(double ky, int n_k) {
  if (n_k < 2) throw std::invalid_argument("line_path: n_k must be >= 2");
  const int total = 2 * n_k;  // two halves of n_k increments each
  const double step = kPi / n_k;
  MomentumPath path;
  path.closed = true;
  for (int j = 0; j <= total; ++j) {
    path.points.push_back(Vector2d(-kPi + j * step, ky));
    if (j < total) path.deltas.push_back(Vector2d(step, 0.0));
  }
  path.points.back() = Vector2d(-kPi, ky);  // identified with the start by periodicity
  return path;
}

EvolutionPlan trotterize(const BlochModel& model, const MomentumPath& path, double total_time,
                         int sign, SamplePoint mode) {
  if (!(total_time > 0.0)) throw std::invalid_argument("trotterize: total_time must be > 0");
  if (path.increments() < 1) throw std::invalid_argument("trotterize: empty path");
  EvolutionPlan plan;
  plan.path = path;
  plan.path.total_time = total_time;
  const double dt = total_time / path.increments();
  plan.factors.reserve(static_cast<std::size_t>(path.increments()));
  for (int j = 0; j < path.increments(); ++j) {
    plan.factors.push_back({model.h(path.sample(j, mode)), dt, sign});
  }
  return plan;
}

EvolutionPlan double_loop_plan(const BlochModel& model, const MomentumPath& path,
                               double total_time, SamplePoint mode) {
  if (!path.closed) throw std::invalid_argument("double_loop_plan: path must be closed");
  EvolutionPlan forward = trotterize(model, path, total_time, +1, mode);
  EvolutionPlan backward = trotterize(model, path, total_time, -1, mode);
  return forward.then(backward);
}

EvolutionPlan mirror_symmetric_plan(const BlochModel& model, double ky, int n_k,
                                    double total_time) {
  MomentumPath path = line_path(ky, n_k);
  const int total = path.increments();
  // midpoint samples make the paired energies match exactly:
  // the second-half sample at kx is the mirror image -kx of a first-half one
  EvolutionPlan plan;
  plan.path = path;
  plan.path.total_time = total_time;
  const double dt = total_time / n_k;  // each half spans total_time
  for (int j = 0; j < total; ++j) {
    const int sign = j < n_k ? +1 : -1;
    plan.factors.push_back({model.h(path.sample(j, SamplePoint::kMidpoint)), dt, sign});
  }
  // verify the symmetry premise on the paired samples
  for (int j = 0; j < n_k; ++j) {
    const auto lo = numerics::eig_hermitian_2x2(plan.factors[static_cast<std::size_t>(j)].h);
    const auto hi = numerics::eig_hermitian_2x2(plan.factors[static_cast<std::size_t>(total - 1 - j)].h);
    if (std::abs(lo.values[0] - hi.values[0]) > numerics::kDegeneracyTol) {
      throw std::invalid_argument(
          "mirror_symmetric_plan: model violates E0(kx, ky) = E0(-kx, ky); use the double loop");
    }
  }
  return plan;
}

}  // namespace chernsim::adiabatic
