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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace chernsim {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;
using Vector2c = Eigen::Vector2cd;
using VectorXc = Eigen::VectorXcd;
using Vector2d = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;

/// A momentum-space gap closing: the two bands touch and the ground state
/// is no longer well defined at this point.
class GapClosureError : public std::runtime_error {
 public:
  GapClosureError(const std::string& what, double kx, double ky, double gap)
      : std::runtime_error(what), kx_(kx), ky_(ky), gap_(gap) {}
  double kx() const { return kx_; }
  double ky() const { return ky_; }
  double gap() const { return gap_; }

 private:
  double kx_, ky_, gap_;
};

/// Failure inside a simulation backend (bad state, unsupported width, ...).
class BackendError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (bad flag combination, unknown model, ...).
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Map an angle to the principal interval [-pi, pi).
inline double wrap_angle(double theta) {
  double t = std::remainder(theta, 2.0 * kPi);  // (-pi, pi]
  if (t >= kPi) t -= 2.0 * kPi;
  return t;
}

}  // namespace chernsim
