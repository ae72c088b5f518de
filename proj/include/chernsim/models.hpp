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

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "chernsim/common.hpp"
#include "chernsim/numerics.hpp"

namespace chernsim {

/// A two-band Bloch Hamiltonian evaluated on the reduced momentum torus.
/// Reduced coordinates q = (q1, q2) are 2pi-periodic in both components and
/// positively oriented with respect to Cartesian momentum, so Berry fluxes
/// summed over the reduced-zone grid carry the physical sign.
class BlochModel {
 public:
  virtual ~BlochModel() = default;
  virtual std::string name() const = 0;
  virtual Matrix2c h(const Vector2d& q) const = 0;
  virtual std::vector<std::pair<std::string, double>> parameters() const = 0;
};

/// Square-lattice two-band Chern insulator controlled by the on-site
/// potential u; gap closings at u = -2, 0, 2. Reduced coordinates coincide
/// with Cartesian momentum.
class QwzModel : public BlochModel {
 public:
  explicit QwzModel(double u) : u_(u) {}
  std::string name() const override { return "qwz"; }
  Matrix2c h(const Vector2d& q) const override;
  std::vector<std::pair<std::string, double>> parameters() const override { return {{"u", u_}}; }
  double u() const { return u_; }

 private:
  double u_;
};

/// Honeycomb-lattice Chern insulator with nearest-neighbor hopping t1,
/// next-nearest-neighbor hopping t2 e^{i phi} and sublattice mass m.
/// Unit-cell vectors a1 = (sqrt(3)/2, 1/2), a2 = (sqrt(3)/2, -1/2); the
/// reduced coordinates are q = (k.a2, k.a1), ordered so the map to
/// Cartesian momentum preserves orientation.
class HaldaneModel : public BlochModel {
 public:
  HaldaneModel(double m, double phi, double t1 = 1.0, double t2 = 1.0)
      : m_(m), phi_(phi), t1_(t1), t2_(t2) {}
  std::string name() const override { return "haldane"; }
  Matrix2c h(const Vector2d& q) const override;
  std::vector<std::pair<std::string, double>> parameters() const override {
    return {{"m", m_}, {"phi", phi_}, {"t1", t1_}, {"t2", t2_}};
  }
  double m() const { return m_; }
  double phi() const { return phi_; }
  double t1() const { return t1_; }
  double t2() const { return t2_; }

 private:
  double m_, phi_, t1_, t2_;
};

/// Test helper wrapping an arbitrary h(q).
class CallableModel : public BlochModel {
 public:
  CallableModel(std::string name, std::function<Matrix2c(const Vector2d&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string name() const override { return name_; }
  Matrix2c h(const Vector2d& q) const override { return fn_(q); }
  std::vector<std::pair<std::string, double>> parameters() const override { return {}; }

 private:
  std::string name_;
  std::function<Matrix2c(const Vector2d&)> fn_;
};

/// H_QWZ(k) = sin(kx) sx + sin(ky) sy + [u + cos(kx) + cos(ky)] sz.
Matrix2c qwz_h(const Vector2d& k, double u);

/// Haldane Hamiltonian at Cartesian momentum k, H(k) = d(k).sigma.
Matrix2c haldane_h(const Vector2d& k_cartesian, double m, double phi, double t1 = 1.0,
                   double t2 = 1.0);

/// Ground-state preparation unitary: U_init(q)|0> is the gauge-fixed ground
/// eigenvector and U_init^dag H U_init is diagonal with ascending entries.
/// Throws GapClosureError when the gap at q is below 1e-9.
Matrix2c ground_prep_unitary(const BlochModel& model, const Vector2d& q);

/// Ground eigenvector at q (same gauge as ground_prep_unitary).
Vector2c ground_state(const BlochModel& model, const Vector2d& q);

/// Nearest-neighbor spin-1/2 Heisenberg chain with one twisted link. Spins
/// are S = sigma/2. The twisted link replaces J S_i.S_j by
/// J [ (x* S_i+ S_j- + x S_i- S_j+)/2 + S_iz S_jz ] with x = e^{i theta}.
struct TwistedHeisenbergChain {
  int n_sites = 2;
  std::vector<double> couplings;  // one J per link (n-1 open, n periodic)
  int twisted_link = 0;
  double theta = 0.0;
  bool periodic = false;

  int link_count() const { return periodic ? n_sites : n_sites - 1; }
  static TwistedHeisenbergChain uniform(int n_sites, double j, int twisted_link, double theta,
                                        bool periodic = false);
};

/// Dense 2^n x 2^n matrix of the twisted chain (n <= 12).
MatrixXc heisenberg_twisted_h(const TwistedHeisenbergChain& chain);

}  // namespace chernsim
