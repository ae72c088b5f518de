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

#include "chernsim/models.hpp"

#include <cmath>

namespace chernsim {

namespace {

Matrix2c pauli_field(double dx, double dy, double dz) {
  Matrix2c h;
  h(0, 0) = Complex(dz, 0.0);
  h(0, 1) = Complex(dx, -dy);
  h(1, 0) = Complex(dx, dy);
  h(1, 1) = Complex(-dz, 0.0);
  return h;
}

}  // namespace

Matrix2c qwz_h(const Vector2d& k, double u) {
  const double kx = k[0], ky = k[1];
  return pauli_field(std::sin(kx), std::sin(ky), u + std::cos(kx) + std::cos(ky));
}

Matrix2c haldane_h(const Vector2d& k_cartesian, double m, double phi, double t1, double t2) {
  // unit-cell vectors a1 = (sqrt(3)/2, 1/2), a2 = (sqrt(3)/2, -1/2)
  const double ka1 = k_cartesian[0] * std::sqrt(3.0) / 2.0 + k_cartesian[1] * 0.5;
  const double ka2 = k_cartesian[0] * std::sqrt(3.0) / 2.0 - k_cartesian[1] * 0.5;
  const double dx = t1 * (std::cos(ka1) + std::cos(ka2) + 1.0);
  const double dy = t1 * (std::sin(ka1) + std::sin(ka2));
  const double dz =
      m + 2.0 * t2 * std::sin(phi) * (std::sin(ka1) - std::sin(ka2) - std::sin(ka1 - ka2));
  return pauli_field(dx, dy, dz);
}

Matrix2c QwzModel::h(const Vector2d& q) const { return qwz_h(q, u_); }

Matrix2c HaldaneModel::h(const Vector2d& q) const {
  // q = (k.a2, k.a1); this ordering keeps the reduced-zone orientation
  // aligned with Cartesian momentum (det d(kx,ky)/d(q1,q2) > 0)
  const double ka2 = q[0];
  const double ka1 = q[1];
  const double dx = t1_ * (std::cos(ka1) + std::cos(ka2) + 1.0);
  const double dy = t1_ * (std::sin(ka1) + std::sin(ka2));
  const double dz =
      m_ + 2.0 * t2_ * std::sin(phi_) * (std::sin(ka1) - std::sin(ka2) - std::sin(ka1 - ka2));
  return pauli_field(dx, dy, dz);
}

Vector2c ground_state(const BlochModel& model, const Vector2d& q) {
  const auto eig = numerics::eig_hermitian_2x2(model.h(q));
  if (eig.degenerate) {
    throw GapClosureError("gap closure for model " + model.name(), q[0], q[1], eig.gap());
  }
  return eig.vectors[0];
}

Matrix2c ground_prep_unitary(const BlochModel& model, const Vector2d& q) {
  const auto eig = numerics::eig_hermitian_2x2(model.h(q));
  if (eig.degenerate) {
    throw GapClosureError("gap closure for model " + model.name(), q[0], q[1], eig.gap());
  }
  Matrix2c u;
  u.col(0) = eig.vectors[0];
  u.col(1) = eig.vectors[1];
  return u;
}

TwistedHeisenbergChain TwistedHeisenbergChain::uniform(int n_sites, double j, int twisted_link,
                                                       double theta, bool periodic) {
  TwistedHeisenbergChain c;
  c.n_sites = n_sites;
  c.twisted_link = twisted_link;
  c.theta = theta;
  c.periodic = periodic;
  c.couplings.assign(static_cast<std::size_t>(c.link_count()), j);
  return c;
}

MatrixXc heisenberg_twisted_h(const TwistedHeisenbergChain& chain) {
  if (chain.n_sites < 2 || chain.n_sites > 12) {
    throw std::invalid_argument("heisenberg_twisted_h: n_sites must lie in [2, 12]");
  }
  if (chain.twisted_link < 0 || chain.twisted_link >= chain.link_count()) {
    throw std::out_of_range("heisenberg_twisted_h: twisted link index out of range");
  }
  if (static_cast<int>(chain.couplings.size()) != chain.link_count()) {
    throw std::invalid_argument("heisenberg_twisted_h: need one coupling per link");
  }

  const int n = chain.n_sites;
  const Eigen::Index dim = Eigen::Index(1) << n;
  MatrixXc h = MatrixXc::Zero(dim, dim);
  const Complex x = std::polar(1.0, chain.theta);

  // basis: site 0 is the most significant bit; bit value 1 means spin down
  auto bit_of = [n](Eigen::Index state, int site) {
    return (state >> (n - 1 - site)) & Eigen::Index(1);
  };

  for (int link = 0; link < chain.link_count(); ++link) {
    const int i = link;
    const int j = (link + 1) % n;
    const double coupling = chain.couplings[static_cast<std::size_t>(link)];
    const Complex hop = link == chain.twisted_link ? std::conj(x) : Complex(1.0, 0.0);
    for (Eigen::Index s = 0; s < dim; ++s) {
      const double szsz = (bit_of(s, i) == 0 ? 0.5 : -0.5) * (bit_of(s, j) == 0 ? 0.5 : -0.5);
      h(s, s) += coupling * szsz;
      // S_i+ S_j- : site i down->up, site j up->down
      if (bit_of(s, i) == 1 && bit_of(s, j) == 0) {
        const Eigen::Index t =
            s ^ (Eigen::Index(1) << (n - 1 - i)) ^ (Eigen::Index(1) << (n - 1 - j));
        h(t, s) += coupling * 0.5 * hop;        // <t| x* S_i+ S_j- |s>
        h(s, t) += coupling * 0.5 * std::conj(hop);
      }
    }
  }
  return h;
}

}  // namespace chernsim
