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

#include "chernsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "chernsim/numerics.hpp"

namespace chernsim {

namespace {

const Complex kI(0.0, 1.0);

void require_unitary(const MatrixXc& u, const char* what) {
  if (!numerics::is_unitary(u)) {
    throw std::invalid_argument(std::string(what) + ": matrix is not unitary within 1e-12");
  }
}

void require_distinct(const std::vector<int>& lines, const char* what) {
  std::set<int> seen(lines.begin(), lines.end());
  if (seen.size() != lines.size()) {
    throw std::invalid_argument(std::string(what) + ": repeated line index");
  }
}

}  // namespace

MatrixXc Gate::local_unitary() const {
  switch (kind) {
    case GateKind::kHadamard: {
      Matrix2c h;
      h << 1, 1, 1, -1;
      return h / std::sqrt(2.0);
    }
    case GateKind::kSGate: {
      Matrix2c s = Matrix2c::Zero();
      s(0, 0) = 1.0;
      s(1, 1) = kI;
      return s;
    }
    case GateKind::kSDagger: {
      Matrix2c s = Matrix2c::Zero();
      s(0, 0) = 1.0;
      s(1, 1) = -kI;
      return s;
    }
    case GateKind::kPhase: {
      Matrix2c p = Matrix2c::Zero();
      p(0, 0) = 1.0;
      p(1, 1) = std::polar(1.0, angle);
      return p;
    }
    case GateKind::kSwap: {
      Matrix4c sw = Matrix4c::Zero();
      sw(0, 0) = sw(1, 2) = sw(2, 1) = sw(3, 3) = 1.0;
      return sw;
    }
    case GateKind::kUnitary1Q:
    case GateKind::kUnitary2Q:
      return matrix;
    case GateKind::kControlledU: {
      const Eigen::Index d = matrix.rows();
      MatrixXc full = MatrixXc::Identity(2 * d, 2 * d);
      full.block(d, d, d, d) = matrix;  // control line is the leading bit
      return full;
    }
  }
  throw std::logic_error("unreachable gate kind");
}

Gate make_hadamard(int line) { return Gate{GateKind::kHadamard, {line}, 0.0, {}}; }
Gate make_s(int line) { return Gate{GateKind::kSGate, {line}, 0.0, {}}; }
Gate make_s_dagger(int line) { return Gate{GateKind::kSDagger, {line}, 0.0, {}}; }
Gate make_phase(int line, double angle) { return Gate{GateKind::kPhase, {line}, angle, {}}; }

Gate make_unitary_1q(int line, const Matrix2c& u) {
  require_unitary(u, "make_unitary_1q");
  return Gate{GateKind::kUnitary1Q, {line}, 0.0, u};
}

Gate make_unitary_2q(int line_a, int line_b, const Matrix4c& u) {
  require_unitary(u, "make_unitary_2q");
  Gate g{GateKind::kUnitary2Q, {line_a, line_b}, 0.0, u};
  require_distinct(g.lines, "make_unitary_2q");
  return g;
}

Gate make_controlled_u(int control, const std::vector<int>& targets, const MatrixXc& u) {
  if (targets.empty()) throw std::invalid_argument("make_controlled_u: no target lines");
  const Eigen::Index d = Eigen::Index(1) << targets.size();
  if (u.rows() != d || u.cols() != d) {
    throw std::invalid_argument("make_controlled_u: matrix size does not match target count");
  }
  require_unitary(u, "make_controlled_u");
  Gate g{GateKind::kControlledU, {control}, 0.0, u};
  g.lines.insert(g.lines.end(), targets.begin(), targets.end());
  require_distinct(g.lines, "make_controlled_u");
  return g;
}

Gate make_swap(int line_a, int line_b) {
  Gate g{GateKind::kSwap, {line_a, line_b}, 0.0, {}};
  require_distinct(g.lines, "make_swap");
  return g;
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw std::invalid_argument("Circuit: width must be >= 1");
}

Circuit Circuit::append(const Gate& g) const {
  Circuit out(*this);
  out.append_inplace(g);
  return out;
}

void Circuit::append_inplace(const Gate& g) {
  for (int line : g.lines) {
    if (line < 0 || line >= width_) {
      throw std::out_of_range("Circuit::append: line " + std::to_string(line) +
                              " outside width " + std::to_string(width_));
    }
  }
  require_distinct(g.lines, "Circuit::append");
  gates_.push_back(g);
}

void Circuit::append_all(const Circuit& fragment) {
  if (fragment.width() != width_) throw std::invalid_argument("append_all: width mismatch");
  for (const Gate& g : fragment.gates()) append_inplace(g);
}

void Circuit::set_measured_lines(std::vector<int> lines) {
  require_distinct(lines, "set_measured_lines");
  for (int line : lines) {
    if (line < 0 || line >= width_) throw std::out_of_range("set_measured_lines: bad line");
  }
  measured_ = std::move(lines);
}

std::string Circuit::to_text() const {
  std::ostringstream os;
  os << "circuit width=" << width_ << " gates=" << gates_.size() << "\n";
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::kHadamard: os << "H " << g.lines[0]; break;
      case GateKind::kSGate: os << "S " << g.lines[0]; break;
      case GateKind::kSDagger: os << "Sdg " << g.lines[0]; break;
      case GateKind::kPhase: os << "P(" << g.angle << ") " << g.lines[0]; break;
      case GateKind::kSwap: os << "SWAP " << g.lines[0] << " " << g.lines[1]; break;
      case GateKind::kUnitary1Q: os << "U1 " << g.lines[0]; break;
      case GateKind::kUnitary2Q: os << "U2 " << g.lines[0] << " " << g.lines[1]; break;
      case GateKind::kControlledU: {
        os << "CU c=" << g.lines[0] << " t=";
        for (std::size_t i = 1; i < g.lines.size(); ++i) {
          os << g.lines[i] << (i + 1 < g.lines.size() ? "," : "");
        }
        break;
      }
    }
    os << "\n";
  }
  if (!measured_.empty()) {
    os << "measure";
    for (int line : measured_) os << " " << line;
    os << "\n";
  }
  return os.str();
}

Circuit inverse_qft(int m) {
  if (m < 1) throw std::invalid_argument("inverse_qft: m must be >= 1");
  Circuit out(m);
  // bit-reversal swaps first, then the reversed forward-QFT cascade with
  // negated rotation angles
  for (int i = 0; i < m / 2; ++i) out.append_inplace(make_swap(i, m - 1 - i));
  for (int j = m - 1; j >= 0; --j) {
    for (int k = m - 1; k > j; --k) {
      const double angle = -2.0 * kPi / std::pow(2.0, k - j + 1);
      out.append_inplace(make_controlled_u(k, {j}, make_phase(0, angle).local_unitary()));
    }
    out.append_inplace(make_hadamard(j));
  }
  return out;
}

Circuit forward_qft(int m) {
  if (m < 1) throw std::invalid_argument("forward_qft: m must be >= 1");
  Circuit out(m);
  for (int j = 0; j < m; ++j) {
    out.append_inplace(make_hadamard(j));
    for (int k = j + 1; k < m; ++k) {
      const double angle = 2.0 * kPi / std::pow(2.0, k - j + 1);
      out.append_inplace(make_controlled_u(k, {j}, make_phase(0, angle).local_unitary()));
    }
  }
  for (int i = 0; i < m / 2; ++i) out.append_inplace(make_swap(i, m - 1 - i));
  return out;
}

MatrixXc embed_gate(const Gate& g, int width) {
  if (width > 10) throw std::invalid_argument("embed_gate: width capped at 10");
  const Eigen::Index dim = Eigen::Index(1) << width;
  const MatrixXc local = g.local_unitary();
  const int arity = g.arity();
  const Eigen::Index local_dim = Eigen::Index(1) << arity;

  MatrixXc full = MatrixXc::Zero(dim, dim);
  // first listed line = most significant local bit
  std::vector<Eigen::Index> line_bit(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    line_bit[static_cast<std::size_t>(i)] = Eigen::Index(1) << (width - 1 - g.lines[static_cast<std::size_t>(i)]);
  }
  Eigen::Index touched_mask = 0;
  for (Eigen::Index b : line_bit) touched_mask |= b;

  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & touched_mask) continue;  // enumerate untouched-bit patterns once
    for (Eigen::Index col = 0; col < local_dim; ++col) {
      Eigen::Index col_idx = base;
      for (int i = 0; i < arity; ++i) {
        if (col & (Eigen::Index(1) << (arity - 1 - i))) col_idx |= line_bit[static_cast<std::size_t>(i)];
      }
      for (Eigen::Index row = 0; row < local_dim; ++row) {
        Eigen::Index row_idx = base;
        for (int i = 0; i < arity; ++i) {
          if (row & (Eigen::Index(1) << (arity - 1 - i))) row_idx |= line_bit[static_cast<std::size_t>(i)];
        }
        full(row_idx, col_idx) = local(row, col);
      }
    }
  }
  return full;
}

MatrixXc composed_unitary(const Circuit& c) {
  if (c.width() > 10) throw std::invalid_argument("composed_unitary: width capped at 10");
  const Eigen::Index dim = Eigen::Index(1) << c.width();
  MatrixXc result = MatrixXc::Identity(dim, dim);
  for (const Gate& g : c.gates()) {
    result = embed_gate(g, c.width()) * result;
  }
  return result;
}

}  // namespace chernsim
