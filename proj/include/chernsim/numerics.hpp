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

#include <utility>
#include <vector>

#include "chernsim/common.hpp"

namespace chernsim::numerics {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr int kDenseDimCap = 4096;

/// One eigenvalue with its unit-norm, gauge-fixed eigenvector.
struct EigenPair {
  double value = 0.0;
  VectorXc vector;
};

/// Result of a 2x2 Hermitian eigensolve, ascending in energy.
struct EigenPair2 {
  double values[2] = {0.0, 0.0};
  Vector2c vectors[2];  // vectors[i] belongs to values[i]
  bool degenerate = false;

  double gap() const { return values[1] - values[0]; }
};

double hermiticity_defect(const MatrixXc& m);
bool is_hermitian(const MatrixXc& m, double tol = kHermitianTol);
bool is_unitary(const MatrixXc& m, double tol = kHermitianTol);

/// Multiply v by a unit phase so its largest-modulus component (smallest
/// index on exact ties) is real and positive. Deterministic: two calls on
/// the same input return bit-identical vectors.
void gauge_fix(VectorXc& v);
void gauge_fix(Vector2c& v);

/// Closed-form eigensolve of a 2x2 Hermitian matrix via its Pauli
/// decomposition h = c0*I + d.sigma. Eigenvalues c0 -+ |d|, ascending.
/// Flags (without failing) a degenerate pair when the gap is below 1e-9.
/// Throws std::invalid_argument when h is not Hermitian.
EigenPair2 eig_hermitian_2x2(const Matrix2c& h);

/// Full spectrum of a d x d Hermitian matrix, ascending, vectors
/// orthonormal and gauge-fixed. d is capped at 4096.
std::vector<EigenPair> eig_hermitian_dense(const MatrixXc& h);

/// exp(-i * sign * h * t) for Hermitian h. The 2x2 case uses the analytic
/// Pauli rotation e^{-i h t} = e^{-i c0 t}(cos(|d|t) I - i sin(|d|t) n.sigma),
/// which is exactly unitary; larger matrices go through the eigensolver.
MatrixXc expm_i_hermitian(const MatrixXc& h, double t, int sign = +1);
Matrix2c expm_i_hermitian_2x2(const Matrix2c& h, double t, int sign = +1);

/// Truncated SVD: keeps the largest min(rank, chi_max) singular values that
/// exceed cutoff (at least one is always kept), in descending order.
struct TruncatedSvd {
  MatrixXc u;               // isometric columns
  std::vector<double> singular_values;
  MatrixXc v_dagger;        // isometric rows
  double discarded_weight = 0.0;  // sum of squared dropped singular values
};

TruncatedSvd svd_truncated(const MatrixXc& m, int chi_max, double cutoff = 0.0);

}  // namespace chernsim::numerics
