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

#include <doctest.h>

#include "chernsim/oracle.hpp"
#include "test_util.hpp"

using namespace chernsim;
using namespace chernsim::oracle;
using namespace chernsim::testutil;

TEST_CASE("wilson_loop: identical states give zero phase") {
  const VectorXc v = Vector2c(0.6, Complex(0.0, 0.8));
  CHECK(wilson_loop({v, v, v, v}) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("wilson_loop: explicit four-state cycle matches hand arithmetic") {
  const VectorXc s1 = Vector2c(1.0, 0.0);
  const VectorXc s2 = Vector2c(1.0, Complex(0.0, 1.0)) / std::sqrt(2.0);
  const VectorXc s3 = Vector2c(0.0, 1.0);
  const VectorXc s4 = Vector2c(1.0, -1.0) / std::sqrt(2.0);
  // product <s1|s2><s2|s3><s3|s4><s4|s1> = (1/sqrt2)(-i/sqrt2)(-1/sqrt2)(1/sqrt2) = i/4
  const Complex product = s1.dot(s2) * s2.dot(s3) * s3.dot(s4) * s4.dot(s1);
  CHECK(std::abs(product - Complex(0.0, 0.25)) < 1e-15);
  CHECK(wilson_loop({s1, s2, s3, s4}) == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("wilson_loop: orthogonal consecutive states demand refinement") {
  const VectorXc s1 = Vector2c(1.0, 0.0);
  const VectorXc s2 = Vector2c(1.0, Complex(0.0, 1.0)) / std::sqrt(2.0);
  const VectorXc s3 = Vector2c(0.0, 1.0);  // closure <s3|s1> vanishes
  CHECK_THROWS_WITH_AS(wilson_loop({s1, s2, s3}), doctest::Contains("refine"), std::runtime_error);
  CHECK_THROWS_AS(wilson_loop({s1}), std::invalid_argument);
}

TEST_CASE("wilson_loop: equator family accumulates +pi") {
  // |psi(phi)> = (|0> + e^{i phi}|1>)/sqrt(2): each overlap contributes
  // +pi/N under the forward-product convention
  const int n = 24;
  std::vector<VectorXc> loop;
  for (int i = 0; i < n; ++i) {
    loop.push_back(Vector2c(1.0, std::polar(1.0, 2.0 * kPi * i / n)) / std::sqrt(2.0));
  }
  CHECK(std::abs(std::remainder(wilson_loop(loop) - kPi, 2.0 * kPi)) < 1e-12);
}

TEST_CASE("wilson_loop: gauge invariance under random per-state phases") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(900 + seed);
    std::vector<VectorXc> loop;
    for (int i = 0; i < 6; ++i) loop.push_back(random_state(rng, 3));
    double base;
    try {
      base = wilson_loop(loop);
    } catch (const std::runtime_error&) {
      continue;  // random loop happened to be too coarse
    }
    std::vector<VectorXc> rephased = loop;
    for (VectorXc& v : rephased) v *= std::polar(1.0, 2.0 * kPi * rng.next_double());
    CHECK(std::abs(wilson_loop(rephased) - base) < 1e-12);
  }
}

TEST_CASE("wilson_loop: plaquette discretization converges") {
  const QwzModel model(1.0);
  const Vector2d corner(0.3, -0.9);
  const double dk = 2.0 * kPi / 15.0;
  auto loop_at = [&](int points_per_link) {
    std::vector<VectorXc> states;
    const Vector2d legs[4] = {{dk, 0}, {0, dk}, {-dk, 0}, {0, -dk}};
    Vector2d at = corner;
    for (const auto& leg : legs) {
      for (int s = 0; s < points_per_link; ++s) {
        states.push_back(ground_state(model, at));
        at += leg / points_per_link;
      }
    }
    return wilson_loop(states);
  };
  CHECK(std::abs(loop_at(10) - loop_at(100)) < 1e-3);
}

TEST_CASE("plaquette_flux: trivial phase sums to zero Chern") {
  const auto grid = chern_fukui(QwzModel(3.0), 15);
  CHECK(grid.chern_int == 0);
  CHECK(std::abs(grid.total_flux()) < 1e-9);
}

TEST_CASE("plaquette_flux: conjugated model negates every flux") {
  const QwzModel model(1.0);
  const CallableModel conjugated("qwz-conj", [&](const Vector2d& q) {
    return model.h(Vector2d(-q[0], -q[1])).conjugate().eval();
  });
  Rng rng(21);
  const double dk = 2.0 * kPi / 15.0;
  for (int i = 0; i < 12; ++i) {
    const Vector2d corner(-kPi + 2 * kPi * rng.next_double(), -kPi + 2 * kPi * rng.next_double());
    const double direct = plaquette_flux(model, corner, dk);
    // time reversal maps the plaquette at k to the reversed loop at -k
    const double mapped = plaquette_flux(conjugated, Vector2d(-corner[0] - dk, -corner[1] - dk), dk);
    CHECK(std::abs(direct + mapped) < 1e-10);
  }
}

TEST_CASE("plaquette_flux: quadrisection is additive") {
  const QwzModel model(1.0);
  Rng rng(22);
  const double dk = 2.0 * kPi / 15.0;
  for (int i = 0; i < 8; ++i) {
    const Vector2d corner(-kPi + 2 * kPi * rng.next_double(), -kPi + 2 * kPi * rng.next_double());
    const double parent = plaquette_flux(model, corner, dk);
    const double half = dk / 2.0;
    double sum = 0.0;
    for (int sx = 0; sx < 2; ++sx) {
      for (int sy = 0; sy < 2; ++sy) {
        sum += plaquette_flux(model, corner + Vector2d(sx * half, sy * half), half);
      }
    }
    CHECK(std::abs(std::remainder(sum - parent, 2.0 * kPi)) < 1e-6);
  }
}

TEST_CASE("chern_fukui: QWZ phase assignments with exact lattice quantization") {
  const double expected[4] = {0.0, -1.0, 1.0, 0.0};
  const double u_values[4] = {-3.0, -1.0, 1.0, 3.0};
  for (int i = 0; i < 4; ++i) {
    const auto grid = chern_fukui(QwzModel(u_values[i]), 15);
    CHECK(grid.chern_int == static_cast<int>(expected[i]));
    CHECK(std::abs(grid.total_flux() - 2.0 * kPi * expected[i]) < 1e-9);
  }
}

TEST_CASE("chern_fukui: Haldane classification cases") {
  CHECK(chern_fukui(HaldaneModel(0.0, -kPi / 2), 15).chern_int == -1);
  CHECK(chern_fukui(HaldaneModel(6.0, 0.7), 15).chern_int == 0);   // |m| > 3 sqrt(3)
  CHECK(chern_fukui(HaldaneModel(6.0, -2.2), 15).chern_int == 0);
}

TEST_CASE("chern_fukui: gap closure on the grid is reported") {
  CHECK_THROWS_AS(chern_fukui(QwzModel(-2.0), 15), GapClosureError);
}

TEST_CASE("chern_fukui: integer stable across grid resolutions") {
  for (double u : {-1.0, 1.0, 3.0}) {
    const int at9 = chern_fukui(QwzModel(u), 9).chern_int;
    CHECK(chern_fukui(QwzModel(u), 15).chern_int == at9);
    CHECK(chern_fukui(QwzModel(u), 25).chern_int == at9);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(1000 + seed);
    const double u = 1.0 + 0.8 * (2.0 * rng.next_double() - 1.0) * 0.9;  // inside (0, 2)
    const auto grid = chern_fukui(QwzModel(u), 15);
    CHECK(grid.chern_int == 1);
    CHECK(std::abs(grid.total_flux() - 2.0 * kPi) < 1e-9);  // quantization
    for (const auto& row : grid.flux) {
      for (double f : row) CHECK(std::abs(f) <= kPi);  // principal branch
    }
  }
}

TEST_CASE("hybrid_wannier_trace: windings and the flat-band limit") {
  CHECK(hybrid_wannier_trace(QwzModel(3.0), 60, 16).winding == 0);
  CHECK(hybrid_wannier_trace(QwzModel(1.0), 60, 30).winding == 1);
  CHECK(hybrid_wannier_trace(QwzModel(-1.0), 60, 30).winding == -1);

  const CallableModel flat("flat", [](const Vector2d&) {
    Matrix2c h = Matrix2c::Zero();
    h(0, 0) = 1.0;
    h(1, 1) = -1.0;
    return h;
  });
  const auto trace = hybrid_wannier_trace(flat, 40, 16);
  CHECK(trace.winding == 0);
  for (double c : trace.centers) CHECK(std::abs(c) < 1e-12);
}

TEST_CASE("heisenberg twist phase: quantization for small chains") {
  // 2-site chain: the twisted singlet picks up exactly pi over one cycle
  auto chain2 = TwistedHeisenbergChain::uniform(2, 1.0, 0, 0.0);
  const double gamma2 = heisenberg_twist_berry_phase(chain2, 50);
  CHECK(std::abs(std::remainder(gamma2 - kPi, 2.0 * kPi)) < 1e-10);

  // 4-site open chain, twist on link (0, 1): quantized and stable in N
  auto chain4 = TwistedHeisenbergChain::uniform(4, 1.0, 0, 0.0);
  const double gamma4 = heisenberg_twist_berry_phase(chain4, 100);
  const double res0 = std::abs(std::remainder(gamma4, 2.0 * kPi));
  const double res_pi = std::abs(std::remainder(gamma4 - kPi, 2.0 * kPi));
  CHECK(std::min(res0, res_pi) < 1e-6);
  const double gamma4b = heisenberg_twist_berry_phase(chain4, 200);
  CHECK(std::abs(std::remainder(gamma4b - gamma4, 2.0 * kPi)) < 1e-8);
}

TEST_CASE("heisenberg twist phase: a decoupled twisted link gives zero") {
  auto chain = TwistedHeisenbergChain::uniform(4, 1.0, 1, 0.0);
  chain.couplings[1] = 0.0;  // the twist acts on a dead link
  const double gamma = heisenberg_twist_berry_phase(chain, 60);
  CHECK(std::abs(std::remainder(gamma, 2.0 * kPi)) < 1e-10);
}
