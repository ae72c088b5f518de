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

// End-to-end acceptance suite. Each criterion prints one line:
//   [PASS] criterion N: <summary>
//   [FAIL] criterion N: <summary> (<details>)
// Run without arguments to execute all criteria, or pass criterion numbers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "chernsim/adiabatic.hpp"
#include "chernsim/models.hpp"
#include "chernsim/mps.hpp"
#include "chernsim/oracle.hpp"
#include "chernsim/pipeline.hpp"
#include "chernsim/readout.hpp"
#include "chernsim/rng.hpp"

#include "../test_util.hpp"

using namespace chernsim;

namespace {

int g_failures = 0;

struct Criterion {
  int number;
  const char* summary;
  std::function<std::string()> body;  // empty string = pass, else details
};

void run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  std::string details;
  try {
    details = c.body();
  } catch (const std::exception& e) {
    details = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (details.empty()) {
    std::printf("[PASS] criterion %d: %s (%.1fs)\n", c.number, c.summary, seconds);
  } else {
    std::printf("[FAIL] criterion %d: %s (%s, %.1fs)\n", c.number, c.summary, details.c_str(),
                seconds);
    ++g_failures;
  }
  std::fflush(stdout);
}

std::string check(bool ok, const std::string& details) { return ok ? "" : details; }

// ---------------------------------------------------------------------------
// criterion 1: oracle QWZ Chern table with exact lattice quantization, < 1 s
// ---------------------------------------------------------------------------
std::string criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const double u_values[4] = {-3.0, -1.0, 1.0, 3.0};
  const int expected[4] = {0, -1, 1, 0};
  for (int i = 0; i < 4; ++i) {
    const auto grid = oracle::chern_fukui(QwzModel(u_values[i]), 15);
    if (grid.chern_int != expected[i]) {
      return "u=" + std::to_string(u_values[i]) + " gave C=" + std::to_string(grid.chern_int);
    }
    const double residual = std::abs(grid.total_flux() - 2.0 * kPi * expected[i]);
    if (residual >= 1e-9) {
      return "quantization residual " + std::to_string(residual) + " at u=" +
             std::to_string(u_values[i]);
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check(seconds < 1.0, "runtime " + std::to_string(seconds) + "s exceeds 1s");
}

// ---------------------------------------------------------------------------
// criterion 2: oracle Haldane phase diagram, 21x21, off-boundary exact, < 30 s
// ---------------------------------------------------------------------------
std::string criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  pipeline::RunConfig cfg;
  cfg.model = "haldane";
  cfg.backend = "oracle";
  cfg.grid_n = 15;
  const auto record = pipeline::cmd_phase_diagram(cfg, -6.0, 6.0, 21, -kPi, kPi, 21);
  const double cell_m = 12.0 / 20.0;
  const double cell_phi = 2.0 * kPi / 20.0;
  int tested = 0;
  for (std::size_t i = 0; i < record.mass_values.size(); ++i) {
    for (std::size_t j = 0; j < record.phi_values.size(); ++j) {
      const double m = record.mass_values[i];
      const double phi = record.phi_values[j];
      // distance to the boundary curve |m| = 3 sqrt(3) |sin phi| in grid cells
      double min_cells = 1e9;
      for (int s = -400; s <= 400; ++s) {
        const double p = phi + s * cell_phi / 100.0;
        const double b = 3.0 * std::sqrt(3.0) * std::abs(std::sin(p));
        for (double sign : {-1.0, 1.0}) {
          const double dm = std::abs(m - sign * b) / cell_m;
          const double dp = std::abs(p - phi) / cell_phi;
          min_cells = std::min(min_cells, std::hypot(dm, dp));
        }
      }
      if (min_cells <= 1.0) continue;
      // phi = 0 and phi = +-pi are gapless lines for small m; the analytic
      // classification still assigns 0 for m != 0
      if (!record.errors[i][j].empty()) {
        return "unexpected error at m=" + std::to_string(m) + " phi=" + std::to_string(phi) +
               ": " + record.errors[i][j];
      }
      const double boundary = 3.0 * std::sqrt(3.0) * std::abs(std::sin(phi));
      const int expect = std::abs(m) < boundary ? (phi < 0 ? -1 : 1) : 0;
      ++tested;
      if (record.chern_int[i][j] != expect) {
        return "cell m=" + std::to_string(m) + " phi=" + std::to_string(phi) + " gave " +
               std::to_string(record.chern_int[i][j]) + ", expected " + std::to_string(expect);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (tested < 300) return "only " + std::to_string(tested) + " off-boundary cells tested";
  return check(seconds < 30.0, "runtime " + std::to_string(seconds) + "s exceeds 30s");
}

// ---------------------------------------------------------------------------
// criterion 3: circuit-pipeline QWZ Chern, exact and shot-based, < 5 min
// ---------------------------------------------------------------------------
std::string criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  const double u_values[4] = {-3.0, -1.0, 1.0, 3.0};
  const double expected[4] = {0.0, -1.0, 1.0, 0.0};
  for (int i = 0; i < 4; ++i) {
    pipeline::RunConfig cfg;
    cfg.u = u_values[i];
    cfg.backend = "statevector";
    cfg.grid_n = 15;
    cfg.steps_per_link = 2;
    const auto record = pipeline::cmd_flux(cfg);
    if (std::abs(record.chern_real - expected[i]) >= 0.1) {
      return "exact probabilities: u=" + std::to_string(u_values[i]) + " C_est=" +
             std::to_string(record.chern_real);
    }
  }
  for (int i = 0; i < 4; ++i) {
    pipeline::RunConfig cfg;
    cfg.u = u_values[i];
    cfg.backend = "statevector+shots";
    cfg.shots = 8192;
    cfg.grid_n = 15;
    cfg.steps_per_link = 2;
    cfg.repeats = 2;
    cfg.seed = 20260809;
    const auto record = pipeline::cmd_flux(cfg);
    if (std::abs(record.chern_real - expected[i]) >= 0.3) {
      return "8192 shots: u=" + std::to_string(u_values[i]) + " C_est=" +
             std::to_string(record.chern_real);
    }
    if (record.chern_runs.size() != 2) return "expected 2 seeded runs";
    if (!(record.spread >= 0.0)) return "spread not reported";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check(seconds < 300.0, "runtime " + std::to_string(seconds) + "s exceeds 5min");
}

// ---------------------------------------------------------------------------
// criterion 4: per-plaquette flux map agreement, max |dev| < 5e-2 at u = 1
// ---------------------------------------------------------------------------
std::string criterion_4() {
  const QwzModel model(1.0);
  pipeline::RunConfig cfg;
  cfg.backend = "statevector";
  const int n = 15;
  const double dk = 2.0 * kPi / n;
  double worst = 0.0;
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const Vector2d corner(-kPi + ix * dk, -kPi + iy * dk);
      const double exact = oracle::plaquette_flux(model, corner, dk);
      const double est = pipeline::circuit_plaquette_flux(model, corner, dk, cfg, 0);
      worst = std::max(worst, std::abs(est - exact));
    }
  }
  return check(worst < 5e-2, "max |flux deviation| = " + std::to_string(worst));
}

// ---------------------------------------------------------------------------
// criterion 5: Wannier winding via QPE on the MPS backend at chi = 2 and 60
// ---------------------------------------------------------------------------
std::string criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  const double u_values[4] = {-3.0, -1.0, 1.0, 3.0};
  const int expected[4] = {0, -1, 1, 0};
  for (int chi : {2, 60}) {
    for (int i = 0; i < 4; ++i) {
      pipeline::RunConfig cfg;
      cfg.u = u_values[i];
      cfg.backend = "mps";
      cfg.chi_max = chi;
      cfg.qpe_m = 11;
      cfg.qpe_m_meas = 9;
      cfg.n_k = 100;
      cfg.total_time = 10.0;
      cfg.n_ky = 16;
      const auto record = pipeline::cmd_wannier(cfg);
      if (record.trace.winding != expected[i]) {
        return "chi=" + std::to_string(chi) + " u=" + std::to_string(u_values[i]) +
               " winding=" + std::to_string(record.trace.winding) + ", expected " +
               std::to_string(expected[i]);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check(seconds < 1200.0, "runtime " + std::to_string(seconds) + "s exceeds 20min");
}

// ---------------------------------------------------------------------------
// criterion 6: Hadamard-test round trip, exact and at 8192 shots
// ---------------------------------------------------------------------------
std::string criterion_6() {
  Rng rng(0xC0FFEE);
  int within = 0;
  const int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const double theta = (2.0 * rng.next_double() - 1.0) * (kPi - 1e-9);
    adiabatic::EvolutionPlan plan;
    Matrix2c h = Matrix2c::Zero();
    h(0, 0) = theta;  // kickback -theta; reported theta after conjugation
    plan.factors.push_back({h, 1.0, +1});

    const auto exact =
        readout::hadamard_test(plan, Matrix2c::Identity(), readout::Execution::statevector());
    if (std::abs(exact.theta - theta) >= 1e-9) {
      return "exact reconstruction error " + std::to_string(std::abs(exact.theta - theta)) +
             " at theta=" + std::to_string(theta);
    }
    const auto sampled = readout::hadamard_test(
        plan, Matrix2c::Identity(),
        readout::Execution::statevector_shots(8192, stable_hash(0xC0FFEE, i)));
    if (std::abs(std::remainder(sampled.theta - theta, 2.0 * kPi)) <
        3.0 * (2.0 / std::sqrt(8192.0))) {
      ++within;
    }
  }
  return check(within >= 95, "only " + std::to_string(within) + "/100 within the shot envelope");
}

// ---------------------------------------------------------------------------
// criterion 7: double-loop phase vs 2x oracle flux + monotone (T, N) doublings
// ---------------------------------------------------------------------------
std::string criterion_7() {
  const QwzModel model(1.0);
  const double dk = 2.0 * kPi / 15.0;
  // deviation floor: the 4-corner lattice flux and the continuum loop phase
  // differ by about this much at a 15-grid plaquette size
  const double floor = 1e-2;
  Rng rng(777);
  for (int p = 0; p < 20; ++p) {
    const Vector2d corner(-kPi + 2.0 * kPi * rng.next_double(),
                          -kPi + 2.0 * kPi * rng.next_double());
    const double target = 2.0 * oracle::plaquette_flux(model, corner, dk);
    double previous = 0.0;
    for (int doubling = 0; doubling < 4; ++doubling) {
      const auto plan = adiabatic::double_loop_plan(
          model, adiabatic::plaquette_path(corner, dk, 2 << doubling), 10.0 * (1 << doubling),
          adiabatic::SamplePoint::kMidpoint);
      const auto est = readout::hadamard_test(plan, ground_prep_unitary(model, corner),
                                              readout::Execution::statevector());
      const double dev = std::abs(std::remainder(est.theta - target, 2.0 * kPi));
      if (doubling == 0 && dev >= 5e-2) {
        return "plaquette " + std::to_string(p) + ": deviation " + std::to_string(dev) +
               " at the base settings";
      }
      if (doubling > 0 && dev > std::max(1.10 * previous, floor)) {
        return "plaquette " + std::to_string(p) + ": non-monotone step " +
               std::to_string(previous) + " -> " + std::to_string(dev);
      }
      previous = dev;
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// criterion 8: backend equivalence on random circuits at unbounded chi
// ---------------------------------------------------------------------------
std::string criterion_8() {
  for (int i = 0; i < 50; ++i) {
    Rng rng(stable_hash(88, i));
    const int width = 2 + static_cast<int>(rng.next_below(9));  // 2..10
    const Circuit c = testutil::random_circuit(rng, width, 20);
    MpsState mps(width, 1 << ((width + 1) / 2));
    mps.run_circuit(c);
    const StateVector exact = run(c, StateVector(width));
    const double fidelity = std::norm(mps.contract_to_statevector().amplitudes().dot(exact.amplitudes()));
    if (!(fidelity > 1.0 - 1e-8)) {
      return "circuit " + std::to_string(i) + " width " + std::to_string(width) + ": fidelity " +
             std::to_string(fidelity);
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// criterion 9: twisted-chain quantization for n in {2, 4, 6}
// ---------------------------------------------------------------------------
std::string criterion_9() {
  for (int n : {2, 4, 6}) {
    const auto chain = TwistedHeisenbergChain::uniform(n, 1.0, 0, 0.0);
    const double gamma = oracle::heisenberg_twist_berry_phase(chain, 100);
    const double res0 = std::abs(std::remainder(gamma, 2.0 * kPi));
    const double res_pi = std::abs(std::remainder(gamma - kPi, 2.0 * kPi));
    if (std::min(res0, res_pi) >= 1e-6) {
      return "n=" + std::to_string(n) + ": residual " + std::to_string(std::min(res0, res_pi));
    }
    const double doubled = oracle::heisenberg_twist_berry_phase(chain, 200);
    if (std::abs(std::remainder(doubled - gamma, 2.0 * kPi)) >= 1e-8) {
      return "n=" + std::to_string(n) + ": unstable under N_theta doubling";
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// criterion 10: module property suites over a fixed 10-seed matrix
// ---------------------------------------------------------------------------
std::string criterion_10() {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    Rng rng(seed);

    {  // numerics: expm sign inverse, eigen round trip, SVD identity
      const Matrix2c h = testutil::random_hermitian(rng, 2);
      const double t = 3.0 * rng.next_double() + 0.1;
      const Matrix2c round =
          numerics::expm_i_hermitian_2x2(h, t, +1) * numerics::expm_i_hermitian_2x2(h, t, -1);
      if ((round - Matrix2c::Identity()).cwiseAbs().maxCoeff() >= 1e-10) return tag + "expm inverse";

      const MatrixXc hd = testutil::random_hermitian(rng, 6);
      const auto spectrum = numerics::eig_hermitian_dense(hd);
      MatrixXc v(6, 6);
      VectorXc e(6);
      for (int i = 0; i < 6; ++i) {
        v.col(i) = spectrum[static_cast<std::size_t>(i)].vector;
        e[i] = spectrum[static_cast<std::size_t>(i)].value;
      }
      if (((v * e.asDiagonal() * v.adjoint()) - hd).cwiseAbs().maxCoeff() >=
          1e-8 * std::max(1.0, hd.cwiseAbs().maxCoeff())) {
        return tag + "eigen round trip";
      }

      const MatrixXc m = testutil::random_complex(rng, 5, 5);
      const auto svd = numerics::svd_truncated(m, 3, 0.0);
      MatrixXc rebuilt = MatrixXc::Zero(5, 5);
      for (std::size_t i = 0; i < svd.singular_values.size(); ++i) {
        rebuilt += svd.singular_values[i] * svd.u.col(static_cast<Eigen::Index>(i)) *
                   svd.v_dagger.row(static_cast<Eigen::Index>(i));
      }
      if (std::abs((m - rebuilt).squaredNorm() - svd.discarded_weight) >= 1e-9) {
        return tag + "svd discarded weight";
      }
    }

    {  // gauge determinism: bit-identical repeated eigensolve
      const Matrix2c h = testutil::random_hermitian(rng, 2);
      const auto a = numerics::eig_hermitian_2x2(h);
      const auto b = numerics::eig_hermitian_2x2(h);
      if (std::memcmp(a.vectors[0].data(), b.vectors[0].data(), 2 * sizeof(Complex)) != 0) {
        return tag + "gauge determinism";
      }
    }

    {  // backends: unitarity, composition, sampling determinism, mps parity
      const int width = 3 + static_cast<int>(rng.next_below(3));
      const Circuit c1 = testutil::random_circuit(rng, width, 10);
      const Circuit c2 = testutil::random_circuit(rng, width, 10);
      const StateVector s0(width);
      const StateVector mid = run(c1, s0);
      if (std::abs(mid.norm() - 1.0) >= 1e-10) return tag + "statevector unitarity";
      Circuit chained(width);
      chained.append_all(c1);
      chained.append_all(c2);
      if ((run(c2, mid).amplitudes() - run(chained, s0).amplitudes()).cwiseAbs().maxCoeff() >=
          1e-10) {
        return tag + "composition";
      }
      if (sample(mid, {0, 1}, 128, seed) != sample(mid, {0, 1}, 128, seed)) {
        return tag + "sampling determinism";
      }
      MpsState mps(width, 1 << ((width + 1) / 2));
      mps.run_circuit(chained);
      if (mps.max_bond_dim() > (1 << ((width + 1) / 2))) return tag + "chi cap";
      const double fid =
          std::norm(mps.contract_to_statevector().amplitudes().dot(run(c2, mid).amplitudes()));
      if (!(fid > 1.0 - 1e-8)) return tag + "mps exact-regime parity";
    }

    {  // oracle: gauge invariance, flux additivity, band sum rule, quantization
      std::vector<VectorXc> loop;
      for (int i = 0; i < 6; ++i) loop.push_back(testutil::random_state(rng, 2));
      try {
        const double base = oracle::wilson_loop(loop);
        for (VectorXc& v : loop) v *= std::polar(1.0, 2.0 * kPi * rng.next_double());
        if (std::abs(oracle::wilson_loop(loop) - base) >= 1e-12) return tag + "gauge invariance";
      } catch (const std::runtime_error&) {
        // loop too coarse for this seed; the property is vacuous here
      }

      const double u = rng.next_double() < 0.5 ? 0.6 + 1.2 * rng.next_double()
                                               : -0.6 - 1.2 * rng.next_double();
      const QwzModel model(u);
      const double dk = 2.0 * kPi / 15.0;
      const Vector2d corner(-kPi + 2.0 * kPi * rng.next_double(),
                            -kPi + 2.0 * kPi * rng.next_double());
      const double parent = oracle::plaquette_flux(model, corner, dk);
      double quads = 0.0;
      for (int sx = 0; sx < 2; ++sx) {
        for (int sy = 0; sy < 2; ++sy) {
          quads += oracle::plaquette_flux(model, corner + Vector2d(sx * dk / 2, sy * dk / 2),
                                          dk / 2);
        }
      }
      if (std::abs(std::remainder(quads - parent, 2.0 * kPi)) >= 1e-6) {
        return tag + "flux additivity";
      }

      const auto grid = oracle::chern_fukui(model, 15);
      const double quantization =
          std::abs(grid.total_flux() - 2.0 * kPi * grid.chern_int);
      if (quantization >= 1e-9) return tag + "lattice quantization";
      const CallableModel flipped("upper", [&](const Vector2d& q) { return (-model.h(q)).eval(); });
      if (grid.chern_int + oracle::chern_fukui(flipped, 15).chern_int != 0) {
        return tag + "band sum rule";
      }
      if (oracle::chern_fukui(model, 9).chern_int != grid.chern_int) return tag + "grid stability";
    }

    {  // readout: winding gauge shifts and QPE grid exactness
      std::vector<double> centers;
      for (int i = 0; i < 16; ++i) centers.push_back(wrap_angle(-kPi + 2.0 * kPi * i / 16.0));
      const int base = readout::winding_number(centers);
      const double offset = 2.0 * kPi * rng.next_double();
      for (double& c : centers) c = wrap_angle(c + offset);
      centers[static_cast<std::size_t>(rng.next_below(16))] += 2.0 * kPi;
      if (readout::winding_number(centers) != base) return tag + "winding gauge shift";

      adiabatic::EvolutionPlan plan;
      Matrix2c h = Matrix2c::Zero();
      h(0, 0) = 2.0 * rng.next_double() - 1.0;
      plan.factors.push_back({h, 1.0, +1});
      const auto qpe = readout::qpe_run(plan, Matrix2c::Identity(), 5, 4,
                                        readout::Execution::statevector_shots(64, seed), 1);
      const double step = 2.0 * kPi / 16.0;
      for (const auto& [phase, weight] : qpe.decoded_phases) {
        const double cells = phase / step;
        if (std::abs(cells - std::round(cells)) >= 1e-9) return tag + "qpe grid";
      }
    }

    {  // adiabatic: plan product unitarity
      const QwzModel model(1.0);
      const auto plan = adiabatic::double_loop_plan(
          model, adiabatic::plaquette_path(Vector2d(rng.next_double(), rng.next_double()),
                                           2.0 * kPi / 15.0, 2),
          10.0);
      if (!numerics::is_unitary(plan.unitary(), 1e-9)) return tag + "plan unitarity";
    }
  }
  return "";
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "oracle QWZ Chern table {0,-1,+1,0} with quantization < 1e-9", criterion_1},
      {2, "oracle Haldane 21x21 phase diagram exact off-boundary", criterion_2},
      {3, "circuit-pipeline QWZ Chern within 0.1 exact / 0.3 at 8192 shots", criterion_3},
      {4, "per-plaquette statevector flux within 5e-2 of the oracle at u=1", criterion_4},
      {5, "QPE Wannier winding {0,-1,+1,0} on MPS at chi=2 and chi=60", criterion_5},
      {6, "Hadamard-test round trip exact to 1e-9, 95% within the shot envelope", criterion_6},
      {7, "double-loop phase = 2x oracle flux within 5e-2, improving under doublings", criterion_7},
      {8, "MPS at unbounded chi matches the statevector on 50 random circuits", criterion_8},
      {9, "twisted-chain Berry phase quantized to {0, pi} within 1e-6", criterion_9},
      {10, "module invariants hold over the 10-seed matrix", criterion_10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  for (const Criterion& c : criteria()) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    run_criterion(c);
  }
  return g_failures == 0 ? 0 : 1;
}
