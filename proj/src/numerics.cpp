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

#include "chernsim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace chernsim::numerics {

double hermiticity_defect(const MatrixXc& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const MatrixXc& m, double tol) {
  return m.rows() == m.cols() && hermiticity_defect(m) < tol;
}

bool is_unitary(const MatrixXc& m, double tol) {
  if (m.rows() != m.cols()) return false;
  MatrixXc defect = m.adjoint() * m - MatrixXc::Identity(m.rows(), m.cols());
  return defect.cwiseAbs().maxCoeff() < tol;
}

namespace {

template <typename Vec>
void gauge_fix_impl(Vec& v) {
  Eigen::Index pivot = 0;
  double best = std::abs(v[0]);
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    double a = std::abs(v[i]);
    if (a > best) {  // ties keep the earliest index
      best = a;
      pivot = i;
    }
  }
  if (best == 0.0) return;
  Complex phase = std::conj(v[pivot]) / best;
  v *= phase;
  // force the pivot exactly real (kills residual rounding in the imag part)
  v[pivot] = Complex(std::abs(v[pivot]), 0.0);
}

}  // namespace

void gauge_fix(VectorXc& v) { gauge_fix_impl(v); }
void gauge_fix(Vector2c& v) { gauge_fix_impl(v); }

EigenPair2 eig_hermitian_2x2(const Matrix2c& h) {
  double defect = hermiticity_defect(h);
  if (!(defect < kHermitianTol)) {
    throw std::invalid_argument("eig_hermitian_2x2: matrix is not Hermitian, |h - h^dag|_max = " +
                                std::to_string(defect));
  }
  // Pauli decomposition h = c0*I + d.sigma
  const double c0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double dz = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const double dx = h(0, 1).real();
  const double dy = -h(0, 1).imag();
  const double dxy = std::hypot(dx, dy);
  const double dn = std::hypot(dxy, dz);

  EigenPair2 out;
  out.values[0] = c0 - dn;
  out.values[1] = c0 + dn;
  out.degenerate = (out.values[1] - out.values[0]) < kDegeneracyTol;

  if (dn == 0.0) {
    out.vectors[0] = Vector2c(1.0, 0.0);
    out.vectors[1] = Vector2c(0.0, 1.0);
    return out;
  }

  const double nz = dz / dn;
  const Complex u = dxy > 0.0 ? Complex(dx / dxy, dy / dxy) : Complex(1.0, 0.0);
  // cos/sin of the half polar angle; the smaller one is recovered from
  // c*s = dxy/(2 dn) to avoid cancellation near the poles
  double c, s;
  if (nz >= 0.0) {
    c = std::sqrt(0.5 * (1.0 + nz));
    s = dxy > 0.0 ? dxy / (2.0 * dn * c) : std::sqrt(0.5 * (1.0 - nz));
  } else {
    s = std::sqrt(0.5 * (1.0 - nz));
    c = dxy > 0.0 ? dxy / (2.0 * dn * s) : std::sqrt(0.5 * (1.0 + nz));
  }
  Vector2c aligned(c, u * s);          // +|d| eigenvector of d.sigma
  Vector2c anti(-std::conj(u) * s, c); // -|d| eigenvector
  aligned.normalize();
  anti.normalize();
  gauge_fix(anti);
  gauge_fix(aligned);
  out.vectors[0] = anti;
  out.vectors[1] = aligned;
  return out;
}

std::vector<EigenPair> eig_hermitian_dense(const MatrixXc& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eig_hermitian_dense: matrix not square");
  if (h.rows() > kDenseDimCap) {
    throw std::invalid_argument("eig_hermitian_dense: dimension " + std::to_string(h.rows()) +
                                " exceeds cap " + std::to_string(kDenseDimCap));
  }
  double defect = hermiticity_defect(h);
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (!(defect < kHermitianTol * scale)) {
    throw std::invalid_argument("eig_hermitian_dense: matrix is not Hermitian, defect = " +
                                std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian_dense: solver failed");

  std::vector<EigenPair> out(static_cast<std::size_t>(h.rows()));
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    out[static_cast<std::size_t>(i)].value = solver.eigenvalues()[i];
    VectorXc v = solver.eigenvectors().col(i);
    gauge_fix(v);
    out[static_cast<std::size_t>(i)].vector = std::move(v);
  }
  return out;
}

Matrix2c expm_i_hermitian_2x2(const Matrix2c& h, double t, int sign) {
  const double c0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double dz = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const double dx = h(0, 1).real();
  const double dy = -h(0, 1).imag();
  const double dn = std::sqrt(dx * dx + dy * dy + dz * dz);
  const double tau = sign >= 0 ? t : -t;

  const Complex global = std::polar(1.0, -c0 * tau);
  Matrix2c out;
  if (dn == 0.0) {
    out = global * Matrix2c::Identity();
    return out;
  }
  const double cosw = std::cos(dn * tau);
  const double sinw = std::sin(dn * tau);
  const double nx = dx / dn, ny = dy / dn, nz = dz / dn;
  const Complex I(0.0, 1.0);
  out(0, 0) = global * (cosw - I * sinw * nz);
  out(0, 1) = global * (-I * sinw * (nx - I * ny));
  out(1, 0) = global * (-I * sinw * (nx + I * ny));
  out(1, 1) = global * (cosw + I * sinw * nz);
  return out;
}

MatrixXc expm_i_hermitian(const MatrixXc& h, double t, int sign) {
  double scale = std::max(1.0, h.size() > 0 ? h.cwiseAbs().maxCoeff() : 0.0);
  if (!(hermiticity_defect(h) < kHermitianTol * scale)) {
    throw std::invalid_argument("expm_i_hermitian: matrix is not Hermitian");
  }
  if (h.rows() == 2) return expm_i_hermitian_2x2(h, t, sign);

  const double tau = sign >= 0 ? t : -t;
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(h);
  VectorXc phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases[i] = std::polar(1.0, -solver.eigenvalues()[i] * tau);
  }
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

TruncatedSvd svd_truncated(const MatrixXc& m, int chi_max, double cutoff) {
  if (chi_max < 1) throw std::invalid_argument("svd_truncated: chi_max must be >= 1");

  const bool small = std::min(m.rows(), m.cols()) <= 16;
  Eigen::JacobiSVD<MatrixXc> jsvd;
  Eigen::BDCSVD<MatrixXc> bsvd;
  const MatrixXc* u_full;
  const MatrixXc* v_full;
  const Eigen::VectorXd* sv;
  if (small) {
    jsvd.compute(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    u_full = &jsvd.matrixU();
    v_full = &jsvd.matrixV();
    sv = &jsvd.singularValues();
  } else {
    bsvd.compute(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    u_full = &bsvd.matrixU();
    v_full = &bsvd.matrixV();
    sv = &bsvd.singularValues();
  }

  Eigen::Index keep = 0;
  for (Eigen::Index i = 0; i < sv->size() && keep < chi_max; ++i) {
    if ((*sv)[i] > cutoff) ++keep;
  }
  if (keep == 0) keep = 1;  // never drop to an empty factorization

  TruncatedSvd out;
  out.u = u_full->leftCols(keep);
  out.v_dagger = v_full->leftCols(keep).adjoint();
  out.singular_values.assign(sv->data(), sv->data() + keep);
  for (Eigen::Index i = keep; i < sv->size(); ++i) {
    out.discarded_weight += (*sv)[i] * (*sv)[i];
  }
  return out;
}

}  // namespace chernsim::numerics
