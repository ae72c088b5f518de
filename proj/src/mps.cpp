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

#include "chernsim/mps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chernsim/numerics.hpp"
#include "chernsim/rng.hpp"

namespace chernsim {

namespace {

constexpr int kContractWidthCap = 14;

Matrix4c swap_local() {
  Matrix4c sw = Matrix4c::Zero();
  sw(0, 0) = sw(1, 2) = sw(2, 1) = sw(3, 3) = 1.0;
  return sw;
}

// reorder a 4x4 two-qubit matrix so the roles of the high and low bit swap
Matrix4c transpose_qubits(const Matrix4c& g) {
  auto perm = [](Eigen::Index i) { return ((i & 1) << 1) | (i >> 1); };
  Matrix4c out;
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < 4; ++c) out(perm(r), perm(c)) = g(r, c);
  }
  return out;
}

}  // namespace

MpsState::MpsState(int width, int chi_max, double cutoff)
    : width_(width), chi_max_(chi_max), cutoff_(cutoff) {
  if (width < 1) throw BackendError("MpsState: width must be >= 1");
  if (chi_max < 1) throw BackendError("MpsState: chi_max must be >= 1");
  if (cutoff < 0.0) throw BackendError("MpsState: cutoff must be >= 0");
  sites_.resize(static_cast<std::size_t>(width));
  for (auto& site : sites_) {
    site.a[0] = MatrixXc::Constant(1, 1, Complex(1.0, 0.0));
    site.a[1] = MatrixXc::Zero(1, 1);
  }
  line_to_pos_.resize(static_cast<std::size_t>(width));
  pos_to_line_.resize(static_cast<std::size_t>(width));
  std::iota(line_to_pos_.begin(), line_to_pos_.end(), 0);
  std::iota(pos_to_line_.begin(), pos_to_line_.end(), 0);
}

MpsState MpsState::from_basis(int width, const std::string& bitstring, int chi_max,
                              double cutoff) {
  if (static_cast<int>(bitstring.size()) != width) {
    throw BackendError("MpsState::from_basis: bitstring length must equal width");
  }
  MpsState m(width, chi_max, cutoff);
  for (int i = 0; i < width; ++i) {
    if (bitstring[static_cast<std::size_t>(i)] == '1') {
      std::swap(m.sites_[static_cast<std::size_t>(i)].a[0],
                m.sites_[static_cast<std::size_t>(i)].a[1]);
    }
  }
  return m;
}

double MpsState::norm() const {
  const auto& c = sites_[static_cast<std::size_t>(center_)];
  return std::sqrt(c.a[0].squaredNorm() + c.a[1].squaredNorm());
}

std::vector<int> MpsState::bond_dims() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(width_ - 1));
  for (int i = 0; i + 1 < width_; ++i) {
    out.push_back(static_cast<int>(sites_[static_cast<std::size_t>(i)].right()));
  }
  return out;
}

int MpsState::max_bond_dim() const {
  int best = 1;
  for (int b : bond_dims()) best = std::max(best, b);
  return best;
}

void MpsState::move_center(int to) {
  while (center_ < to) {
    SiteTensor& here = sites_[static_cast<std::size_t>(center_)];
    const Eigen::Index chi_l = here.left(), chi_r = here.right();
    MatrixXc stacked(2 * chi_l, chi_r);
    stacked.topRows(chi_l) = here.a[0];
    stacked.bottomRows(chi_l) = here.a[1];
    Eigen::HouseholderQR<MatrixXc> qr(stacked);
    const Eigen::Index rank = std::min(stacked.rows(), stacked.cols());
    MatrixXc q = qr.householderQ() * MatrixXc::Identity(stacked.rows(), rank);
    MatrixXc r = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
    here.a[0] = q.topRows(chi_l);
    here.a[1] = q.bottomRows(chi_l);
    SiteTensor& next = sites_[static_cast<std::size_t>(center_ + 1)];
    next.a[0] = (r * next.a[0]).eval();
    next.a[1] = (r * next.a[1]).eval();
    ++center_;
  }
  while (center_ > to) {
    SiteTensor& here = sites_[static_cast<std::size_t>(center_)];
    const Eigen::Index chi_l = here.left(), chi_r = here.right();
    MatrixXc wide(chi_l, 2 * chi_r);
    wide.leftCols(chi_r) = here.a[0];
    wide.rightCols(chi_r) = here.a[1];
    // LQ via QR of the adjoint: wide = L Q with Q having orthonormal rows
    Eigen::HouseholderQR<MatrixXc> qr(wide.adjoint());
    const Eigen::Index rank = std::min(wide.rows(), wide.cols());
    MatrixXc q_hat = qr.householderQ() * MatrixXc::Identity(2 * chi_r, rank);
    MatrixXc r_hat = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
    MatrixXc q = q_hat.adjoint();   // rank x 2chi_r
    MatrixXc l = r_hat.adjoint();   // chi_l x rank
    here.a[0] = q.leftCols(chi_r);
    here.a[1] = q.rightCols(chi_r);
    SiteTensor& prev = sites_[static_cast<std::size_t>(center_ - 1)];
    prev.a[0] = (prev.a[0] * l).eval();
    prev.a[1] = (prev.a[1] * l).eval();
    --center_;
  }
}

void MpsState::apply_1q(int pos, const Matrix2c& u) {
  SiteTensor& site = sites_[static_cast<std::size_t>(pos)];
  MatrixXc a0 = u(0, 0) * site.a[0] + u(0, 1) * site.a[1];
  MatrixXc a1 = u(1, 0) * site.a[0] + u(1, 1) * site.a[1];
  site.a[0] = std::move(a0);
  site.a[1] = std::move(a1);
}

void MpsState::apply_2q_adjacent(int pos_left, const Matrix4c& u) {
  const int p = pos_left;
  if (p < 0 || p + 1 >= width_) throw BackendError("apply_2q_adjacent: position out of range");
  move_center(p);

  SiteTensor& lhs = sites_[static_cast<std::size_t>(p)];
  SiteTensor& rhs = sites_[static_cast<std::size_t>(p + 1)];
  const Eigen::Index chi_l = lhs.left();
  const Eigen::Index chi_m = lhs.right();
  const Eigen::Index chi_r = rhs.right();

  // theta[(sL, a), (sR, b)] with the physical index major on both sides
  MatrixXc theta(2 * chi_l, 2 * chi_r);
  for (int sl = 0; sl < 2; ++sl) {
    for (int sr = 0; sr < 2; ++sr) {
      theta.block(sl * chi_l, sr * chi_r, chi_l, chi_r) =
          lhs.a[static_cast<std::size_t>(sl)] * rhs.a[static_cast<std::size_t>(sr)];
    }
  }
  MatrixXc updated = MatrixXc::Zero(2 * chi_l, 2 * chi_r);
  for (int sl = 0; sl < 2; ++sl) {
    for (int sr = 0; sr < 2; ++sr) {
      for (int tl = 0; tl < 2; ++tl) {
        for (int tr = 0; tr < 2; ++tr) {
          const Complex coeff = u(2 * sl + sr, 2 * tl + tr);
          if (coeff == Complex(0.0, 0.0)) continue;
          updated.block(sl * chi_l, sr * chi_r, chi_l, chi_r) +=
              coeff * theta.block(tl * chi_l, tr * chi_r, chi_l, chi_r);
        }
      }
    }
  }

  auto svd = numerics::svd_truncated(updated, chi_max_, cutoff_);
  discarded_total_ += svd.discarded_weight;
  const Eigen::Index keep = static_cast<Eigen::Index>(svd.singular_values.size());

  double kept_norm = 0.0;
  for (double s : svd.singular_values) kept_norm += s * s;
  kept_norm = std::sqrt(kept_norm);
  if (kept_norm == 0.0) throw BackendError("apply_2q_adjacent: state vanished under truncation");

  MatrixXc center = MatrixXc::Zero(keep, 2 * chi_r);
  for (Eigen::Index i = 0; i < keep; ++i) {
    center.row(i) = (svd.singular_values[static_cast<std::size_t>(i)] / kept_norm) *
                    svd.v_dagger.row(i);
  }
  lhs.a[0] = svd.u.topRows(chi_l);
  lhs.a[1] = svd.u.bottomRows(chi_l);
  rhs.a[0] = center.leftCols(chi_r);
  rhs.a[1] = center.rightCols(chi_r);
  center_ = p + 1;
  (void)chi_m;
}

void MpsState::apply_gate(const Gate& g) {
  for (int line : g.lines) {
    if (line < 0 || line >= width_) throw BackendError("MpsState::apply_gate: line out of range");
  }
  if (g.arity() == 1) {
    apply_1q(g.lines[0], g.local_unitary());
    return;
  }
  if (g.arity() != 2) {
    throw BackendError("MpsState::apply_gate: only 1- and 2-qubit gates are supported");
  }
  const int a = g.lines[0], b = g.lines[1];
  if (std::abs(a - b) != 1) {
    throw BackendError("MpsState::apply_gate: two-qubit gate on non-adjacent lines " +
                       std::to_string(a) + "," + std::to_string(b) +
                       "; route with SWAPs (see run_circuit)");
  }
  Matrix4c local = g.local_unitary();
  if (b < a) local = transpose_qubits(local);
  apply_2q_adjacent(std::min(a, b), local);
}

void MpsState::route_adjacent(int pos_from, int pos_to) {
  // step the content at pos_from toward pos_to one SWAP at a time
  while (std::abs(pos_from - pos_to) > 1) {
    const int step = pos_from < pos_to ? 1 : -1;
    const int left = std::min(pos_from, pos_from + step);
    apply_2q_adjacent(left, swap_local());
    std::swap(pos_to_line_[static_cast<std::size_t>(pos_from)],
              pos_to_line_[static_cast<std::size_t>(pos_from + step)]);
    line_to_pos_[static_cast<std::size_t>(pos_to_line_[static_cast<std::size_t>(pos_from)])] = pos_from;
    line_to_pos_[static_cast<std::size_t>(pos_to_line_[static_cast<std::size_t>(pos_from + step)])] =
        pos_from + step;
    pos_from += step;
  }
}

void MpsState::run_circuit(const Circuit& c) {
  if (c.width() != width_) throw BackendError("MpsState::run_circuit: width mismatch");
  for (const Gate& g : c.gates()) {
    if (g.arity() == 1) {
      apply_1q(line_to_pos_[static_cast<std::size_t>(g.lines[0])], g.local_unitary());
      continue;
    }
    if (g.arity() != 2) {
      throw BackendError("MpsState::run_circuit: gates above 2 qubits are not supported");
    }
    const int pa = line_to_pos_[static_cast<std::size_t>(g.lines[0])];
    route_adjacent(line_to_pos_[static_cast<std::size_t>(g.lines[1])], pa);
    const int pb = line_to_pos_[static_cast<std::size_t>(g.lines[1])];
    Matrix4c local = g.local_unitary();
    if (pb < pa) local = transpose_qubits(local);
    apply_2q_adjacent(std::min(pa, pb), local);
  }
}

StateVector MpsState::contract_to_statevector() const {
  if (width_ > kContractWidthCap) {
    throw BackendError("contract_to_statevector: width capped at " +
                       std::to_string(kContractWidthCap));
  }
  // fold left to right over chain positions; row index accumulates the
  // physical bits with position 0 as the most significant
  MatrixXc acc = MatrixXc::Constant(1, 1, Complex(1.0, 0.0));
  for (int pos = 0; pos < width_; ++pos) {
    const SiteTensor& site = sites_[static_cast<std::size_t>(pos)];
    MatrixXc next(acc.rows() * 2, site.right());
    for (Eigen::Index r = 0; r < acc.rows(); ++r) {
      next.row(2 * r) = acc.row(r) * site.a[0];
      next.row(2 * r + 1) = acc.row(r) * site.a[1];
    }
    acc = std::move(next);
  }

  const Eigen::Index dim = Eigen::Index(1) << width_;
  VectorXc amps(dim);
  for (Eigen::Index logical = 0; logical < dim; ++logical) {
    Eigen::Index phys = 0;
    for (int line = 0; line < width_; ++line) {
      if (logical & (Eigen::Index(1) << (width_ - 1 - line))) {
        phys |= Eigen::Index(1) << (width_ - 1 - line_to_pos_[static_cast<std::size_t>(line)]);
      }
    }
    amps[logical] = acc(phys, 0);
  }
  return StateVector(width_, std::move(amps));
}

std::map<std::string, double> MpsState::probabilities(const std::vector<int>& lines) const {
  return chernsim::probabilities(contract_to_statevector(), lines);
}

std::map<std::string, std::uint64_t> MpsState::sample(const std::vector<int>& lines,
                                                      std::uint64_t shots,
                                                      std::uint64_t seed) const {
  if (shots < 1) throw BackendError("MpsState::sample: shots must be >= 1");
  std::vector<int> ls = lines;
  std::sort(ls.begin(), ls.end());
  for (int line : ls) {
    if (line < 0 || line >= width_) throw BackendError("MpsState::sample: line out of range");
  }

  MpsState right_canonical = *this;
  right_canonical.move_center(0);
  Rng rng(seed);

  std::map<std::string, std::uint64_t> out;
  std::vector<int> phys_bits(static_cast<std::size_t>(width_));
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    MatrixXc boundary = MatrixXc::Constant(1, 1, Complex(1.0, 0.0));
    for (int pos = 0; pos < width_; ++pos) {
      const SiteTensor& site = right_canonical.sites_[static_cast<std::size_t>(pos)];
      const MatrixXc b0 = boundary * site.a[0];
      const MatrixXc b1 = boundary * site.a[1];
      const double p0 = b0.squaredNorm();
      const double p1 = b1.squaredNorm();
      const double total = p0 + p1;
      const int bit = rng.next_double() * total < p0 ? 0 : 1;
      phys_bits[static_cast<std::size_t>(pos)] = bit;
      boundary = (bit == 0 ? b0 : b1) / std::sqrt(bit == 0 ? p0 : p1);
    }
    std::string key;
    key.reserve(ls.size());
    for (int line : ls) {
      key.push_back(phys_bits[static_cast<std::size_t>(line_to_pos_[static_cast<std::size_t>(line)])] ? '1'
                                                                                                      : '0');
    }
    out[key]++;
  }
  return out;
}

}  // namespace chernsim
