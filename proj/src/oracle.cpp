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

#include "chernsim/oracle.hpp"

#include <cmath>

#include "chernsim/readout.hpp"

namespace chernsim::oracle {

double FluxGrid::total_flux() const {
  double total = 0.0;
  for (const auto& row : flux) {
    for (double w : row) total += w;
  }
  return total;
}

int round_chern(double chern_real) {
  return static_cast<int>(std::round(chern_real));  // std::round is half away from zero
}

double wilson_loop(const std::vector<VectorXc>& states) {
  if (states.size() < 2) throw std::invalid_argument("wilson_loop: need at least 2 states");
  Complex product(1.0, 0.0);
  for (std::size_t j = 0; j < states.size(); ++j) {
    const VectorXc& here = states[j];
    const VectorXc& next = states[(j + 1) % states.size()];
    const Complex overlap = here.dot(next);  // M_{j,j+1} = <here|next>
    if (std::abs(overlap) < 1e-6) {
      throw std::runtime_error(
          "wilson_loop: consecutive states nearly orthogonal (|overlap| = " +
          std::to_string(std::abs(overlap)) + "); refine the loop discretization");
    }
    product *= overlap / std::abs(overlap);
  }
  return std::arg(product);
}

double plaquette_flux(const BlochModel& model, const Vector2d& k_corner, double dk) {
  const Vector2d corners[4] = {
      k_corner,
      k_corner + Vector2d(dk, 0.0),
      k_corner + Vector2d(dk, dk),
      k_corner + Vector2d(0.0, dk),
  };
  std::vector<VectorXc> states;
  states.reserve(4);
  for (const Vector2d& k : corners) states.push_back(ground_state(model, k));
  return wilson_loop(states);
}

FluxGrid chern_fukui(const BlochModel& model, int n) {
  if (n < 1) throw std::invalid_argument("chern_fukui: grid size must be >= 1");
  const double dk = 2.0 * kPi / n;

  // ground states on the (n x n) corner grid; corner (ix, iy) is reused by
  // the four plaquettes that share it, and the grid is periodic
  std::vector<std::vector<Vector2c>> corner(static_cast<std::size_t>(n));
  for (int iy = 0; iy < n; ++iy) {
    corner[static_cast<std::size_t>(iy)].resize(static_cast<std::size_t>(n));
    for (int ix = 0; ix < n; ++ix) {
      const Vector2d k(-kPi + ix * dk, -kPi + iy * dk);
      corner[static_cast<std::size_t>(iy)][static_cast<std::size_t>(ix)] = ground_state(model, k);
    }
  }

  auto link_phase = [&](int ix_a, int iy_a, int ix_b, int iy_b) {
    const Vector2c& a = corner[static_cast<std::size_t>(iy_a % n)][static_cast<std::size_t>(ix_a % n)];
    const Vector2c& b = corner[static_cast<std::size_t>(iy_b % n)][static_cast<std::size_t>(ix_b % n)];
    const Complex overlap = a.dot(b);  // M_{a,b} = <a|b>
    if (std::abs(overlap) < 1e-6) {
      throw std::runtime_error("chern_fukui: overlap vanishes; grid too coarse or gap closing");
    }
    return overlap / std::abs(overlap);
  };

  FluxGrid grid;
  grid.n = n;
  grid.flux.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const Complex loop = link_phase(ix, iy, ix + 1, iy) * link_phase(ix + 1, iy, ix + 1, iy + 1) *
                           link_phase(ix + 1, iy + 1, ix, iy + 1) * link_phase(ix, iy + 1, ix, iy);
      grid.flux[static_cast<std::size_t>(iy)][static_cast<std::size_t>(ix)] = std::arg(loop);
    }
  }
  grid.chern_real = grid.total_flux() / (2.0 * kPi);
  grid.chern_int = round_chern(grid.chern_real);
  return grid;
}

WannierTrace hybrid_wannier_trace(const BlochModel& model, int n_kx, int n_ky) {
  if (n_kx < 3 || n_ky < 1) throw std::invalid_argument("hybrid_wannier_trace: grid too small");
  WannierTrace trace;
  trace.ky.reserve(static_cast<std::size_t>(n_ky));
  trace.centers.reserve(static_cast<std::size_t>(n_ky));
  for (int j = 0; j < n_ky; ++j) {
    const double ky = -kPi + j * 2.0 * kPi / n_ky;
    std::vector<VectorXc> line;
    line.reserve(static_cast<std::size_t>(n_kx));
    for (int i = 0; i < n_kx; ++i) {
      const double kx = -kPi + i * 2.0 * kPi / n_kx;
      line.push_back(ground_state(model, Vector2d(kx, ky)));
    }
    double center = wilson_loop(line);
    if (center >= kPi) center = -kPi;  // map the +pi branch point into [-pi, pi)
    trace.ky.push_back(ky);
    trace.centers.push_back(center);
  }
  trace.winding = readout::winding_number(trace.centers);
  return trace;
}

double heisenberg_twist_berry_phase(const TwistedHeisenbergChain& chain, int n_theta) {
  if (n_theta < 3) throw std::invalid_argument("heisenberg_twist_berry_phase: n_theta too small");
  std::vector<VectorXc> states;
  states.reserve(static_cast<std::size_t>(n_theta));
  for (int j = 0; j < n_theta; ++j) {
    TwistedHeisenbergChain at = chain;
    at.theta = 2.0 * kPi * j / n_theta;
    const MatrixXc h = heisenberg_twisted_h(at);
    const auto spectrum = numerics::eig_hermitian_dense(h);
    if (spectrum.size() > 1 &&
        spectrum[1].value - spectrum[0].value < numerics::kDegeneracyTol) {
      throw std::runtime_error("heisenberg_twist_berry_phase: ground state degenerate at theta = " +
                               std::to_string(at.theta));
    }
    states.push_back(spectrum[0].vector);
  }
  return wilson_loop(states);
}

}  // namespace chernsim::oracle
