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

#include "chernsim/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "chernsim/rng.hpp"

namespace chernsim {

namespace {

constexpr int kMaxWidth = 20;

std::vector<int> sorted_lines(const std::vector<int>& lines, int width) {
  std::vector<int> out = lines;
  std::sort(out.begin(), out.end());
  if (!out.empty() && (out.front() < 0 || out.back() >= width)) {
    throw BackendError("measurement line outside register");
  }
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw BackendError("repeated measurement line");
  }
  return out;
}

std::string bits_of(std::size_t key, std::size_t n_lines) {
  std::string s(n_lines, '0');
  for (std::size_t i = 0; i < n_lines; ++i) {
    if (key & (std::size_t(1) << (n_lines - 1 - i))) s[i] = '1';
  }
  return s;
}

}  // namespace

StateVector::StateVector(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) throw BackendError("StateVector: unsupported width");
  amps_ = VectorXc::Zero(Eigen::Index(1) << width);
  amps_[0] = 1.0;
}

StateVector::StateVector(int width, VectorXc amplitudes) : width_(width), amps_(std::move(amplitudes)) {
  if (width < 1 || width > kMaxWidth) throw BackendError("StateVector: unsupported width");
  if (amps_.size() != (Eigen::Index(1) << width)) {
    throw BackendError("StateVector: amplitude count does not match width");
  }
}

StateVector StateVector::from_basis(int width, const std::string& bitstring) {
  if (static_cast<int>(bitstring.size()) != width) {
    throw BackendError("from_basis: bitstring length must equal width");
  }
  StateVector s(width);
  Eigen::Index idx = 0;
  for (int i = 0; i < width; ++i) {
    if (bitstring[static_cast<std::size_t>(i)] == '1') idx |= Eigen::Index(1) << (width - 1 - i);
  }
  s.amps_.setZero();
  s.amps_[idx] = 1.0;
  return s;
}

void StateVector::apply_gate(const Gate& g) {
  for (int line : g.lines) {
    if (line < 0 || line >= width_) throw BackendError("apply_gate: line outside register");
  }
  const MatrixXc local = g.local_unitary();
  const int arity = g.arity();
  const Eigen::Index local_dim = Eigen::Index(1) << arity;
  const Eigen::Index dim = amps_.size();

  std::vector<Eigen::Index> line_bit(static_cast<std::size_t>(arity));
  Eigen::Index touched = 0;
  for (int i = 0; i < arity; ++i) {
    line_bit[static_cast<std::size_t>(i)] = Eigen::Index(1) << (width_ - 1 - g.lines[static_cast<std::size_t>(i)]);
    touched |= line_bit[static_cast<std::size_t>(i)];
  }

  VectorXc block(local_dim);
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & touched) continue;
    for (Eigen::Index s = 0; s < local_dim; ++s) {
      Eigen::Index idx = base;
      for (int i = 0; i < arity; ++i) {
        if (s & (Eigen::Index(1) << (arity - 1 - i))) idx |= line_bit[static_cast<std::size_t>(i)];
      }
      block[s] = amps_[idx];
    }
    block = (local * block).eval();
    for (Eigen::Index s = 0; s < local_dim; ++s) {
      Eigen::Index idx = base;
      for (int i = 0; i < arity; ++i) {
        if (s & (Eigen::Index(1) << (arity - 1 - i))) idx |= line_bit[static_cast<std::size_t>(i)];
      }
      amps_[idx] = block[s];
    }
  }
}

void NoiseSpec::validate() const {
  auto in_range = [](double p) { return p >= 0.0 && p < 1.0; };
  if (!in_range(depolarizing_p1) || !in_range(depolarizing_p2) || !in_range(readout_flip_p)) {
    throw ConfigError("NoiseSpec: probabilities must lie in [0, 1)");
  }
}

NoiseSpec NoiseSpec::uniform(double p, double readout, std::uint64_t seed) {
  NoiseSpec n;
  n.depolarizing_p1 = p;
  n.depolarizing_p2 = p;
  n.readout_flip_p = readout;
  n.seed = seed;
  n.validate();
  return n;
}

NoiseSpec NoiseSpec::device_like(std::uint64_t seed) {
  NoiseSpec n;
  n.depolarizing_p1 = 1.0 - 0.996;
  n.depolarizing_p2 = 1.0 - 0.961;
  n.seed = seed;
  return n;
}

StateVector run(const Circuit& c, const StateVector& initial) {
  if (c.width() != initial.width()) throw BackendError("run: circuit/state width mismatch");
  StateVector out = initial;
  for (const Gate& g : c.gates()) out.apply_gate(g);
  return out;
}

std::map<std::string, double> probabilities(const StateVector& s, const std::vector<int>& lines) {
  const std::vector<int> ls = sorted_lines(lines, s.width());
  const std::size_t n = ls.size();
  std::vector<double> acc(std::size_t(1) << n, 0.0);
  const VectorXc& a = s.amplitudes();
  for (Eigen::Index idx = 0; idx < a.size(); ++idx) {
    const double p = std::norm(a[idx]);
    if (p == 0.0) continue;
    std::size_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (idx & (Eigen::Index(1) << (s.width() - 1 - ls[i]))) key |= std::size_t(1) << (n - 1 - i);
    }
    acc[key] += p;
  }
  std::map<std::string, double> out;
  for (std::size_t key = 0; key < acc.size(); ++key) {
    if (acc[key] > 0.0) out[bits_of(key, n)] = acc[key];
  }
  return out;
}

std::map<std::string, std::uint64_t> sample(const StateVector& s, const std::vector<int>& lines,
                                            std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw BackendError("sample: shots must be >= 1");
  const std::vector<int> ls = sorted_lines(lines, s.width());
  const std::size_t n = ls.size();
  std::vector<double> weights(std::size_t(1) << n, 0.0);
  for (const auto& [bits, p] : probabilities(s, ls)) {
    std::size_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits[i] == '1') key |= std::size_t(1) << (n - 1 - i);
    }
    weights[key] = p;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> counts(weights.size(), 0);
  for (std::uint64_t shot = 0; shot < shots; ++shot) counts[rng.next_weighted(weights)]++;

  std::map<std::string, std::uint64_t> out;
  for (std::size_t key = 0; key < counts.size(); ++key) {
    if (counts[key] > 0) out[bits_of(key, n)] = counts[key];
  }
  return out;
}

StateVector run_noisy(const Circuit& c, const StateVector& initial, const NoiseSpec& noise) {
  noise.validate();
  if (!noise.enabled()) return run(c, initial);
  if (c.width() != initial.width()) throw BackendError("run_noisy: width mismatch");

  static const Matrix2c kPauli[3] = {
      (Matrix2c() << 0, 1, 1, 0).finished(),
      (Matrix2c() << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)).finished(),
      (Matrix2c() << 1, 0, 0, -1).finished()};

  Rng rng(noise.seed);
  StateVector out = initial;
  for (const Gate& g : c.gates()) {
    out.apply_gate(g);
    const double p = g.arity() == 1 ? noise.depolarizing_p1 : noise.depolarizing_p2;
    if (p <= 0.0) continue;
    for (int line : g.lines) {
      if (rng.next_double() >= p) continue;
      const std::uint64_t which = rng.next_below(4);
      if (which == 0) continue;  // identity branch of the uniform Pauli
      out.apply_gate(make_unitary_1q(line, kPauli[which - 1]));
    }
  }
  return out;
}

std::map<std::string, std::uint64_t> sample_noisy(const Circuit& c, const StateVector& initial,
                                                  const std::vector<int>& lines,
                                                  std::uint64_t shots, const NoiseSpec& noise) {
  noise.validate();
  if (shots < 1) throw BackendError("sample_noisy: shots must be >= 1");
  const std::vector<int> ls = sorted_lines(lines, c.width());

  std::map<std::string, std::uint64_t> out;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    NoiseSpec traj = noise;
    traj.seed = stable_hash(noise.seed, shot);
    StateVector state = run_noisy(c, initial, traj);
    Rng rng(stable_hash(traj.seed, 0x5a5a5a5aULL));
    std::vector<double> weights(std::size_t(1) << ls.size(), 0.0);
    for (const auto& [bits, p] : probabilities(state, ls)) {
      std::size_t key = 0;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (bits[i] == '1') key |= std::size_t(1) << (ls.size() - 1 - i);
      }
      weights[key] = p;
    }
    std::size_t key = rng.next_weighted(weights);
    if (noise.readout_flip_p > 0.0) {
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (rng.next_double() < noise.readout_flip_p) key ^= std::size_t(1) << (ls.size() - 1 - i);
      }
    }
    out[bits_of(key, ls.size())]++;
  }
  return out;
}

}  // namespace chernsim
