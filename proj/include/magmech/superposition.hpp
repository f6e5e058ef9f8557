// Copyright 2026 The Magmech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGMECH_SUPERPOSITION_HPP_
#define MAGMECH_SUPERPOSITION_HPP_

#include <limits>
#include <vector>

#include "magmech/lindblad.hpp"

namespace magmech {

// Spin-dependent displacement protocol: qubit prepared in (|up> + |down>)/
// sqrt(2), oscillator in a pure Gaussian state of position width sigma.
// chi = 2 g / omega_t sets the branch separation.
struct ProtocolParams {
  double chi = 0.0;          // dimensionless
  double omega_t = 0.0;      // rad/s
  double sigma_ratio = 1.0;  // sigma / x_zp
  double t1 = std::numeric_limits<double>::infinity();  // s
  double t2 = std::numeric_limits<double>::infinity();  // s
  std::vector<double> times; // s

  double g() const { return 0.5 * chi * omega_t; }
};

struct ProtocolPoint {
  double t = 0.0;
  double overlap = 0.0;       // |<branch_down | branch_up>|
  double purity = 0.0;        // qubit purity
  double pos_up = 0.0;        // <x>_up / x_zp
  double pos_down = 0.0;      // <x>_down / x_zp
};

struct ProtocolTrace {
  std::vector<ProtocolPoint> points;
  SolverStats stats;  // zeroed for the analytic route
};

struct SqueezeRequirement {
  // Width that still reaches the requested branch overlap.
  double sigma_max_over_xzp = 0.0;
  // Width at the overlap-1/e boundary 8 sigma^2 = l_s^2, i.e. sqrt(2) chi.
  double sigma_hard_over_xzp = 0.0;
};

struct CollapseRevival {
  double t_star = 0.0;     // pi / omega_t
  double t_revival = 0.0;  // 2 t_star
};

namespace superposition {

// Branch separation l_s = 4 chi x_zp, meters.
double superposition_size(double chi, double x_zp);

// exp(-l_s^2 / (8 sigma^2)) for Gaussian branches of common width sigma.
double branch_overlap(double l_s, double sigma);

SqueezeRequirement required_squeezing(double chi, double target_overlap);

CollapseRevival collapse_revival_times(double omega_t);

// Closed-form Gaussian-branch trace: both branches evolve in displaced
// harmonic wells with a shared rotating covariance; exact for pure initial
// Gaussian states and no dissipation.
ProtocolTrace gaussian_protocol(const ProtocolParams& params);

// Full master-equation trace on the truncated space, including qubit decay
// and dephasing when t1/t2 are finite. Throws when the initial squeezed
// state does not fit the truncation, suggesting a larger Fock dimension.
ProtocolTrace me_protocol(const ProtocolParams& params, int fock_dim);

// Minimum-uncertainty position-squeezed vacuum as a Fock-space column
// (returned as a fock_dim x 1 matrix), width_ratio = sigma / x_zp.
Matrix squeezed_vacuum(int fock_dim, double width_ratio);

// Truncated displacement operator exp[a (b^dag - b) / 2]; shifts x/x_zp
// by a.
Matrix translation_operator(int fock_dim, double a);

}  // namespace superposition
}  // namespace magmech

#endif  // MAGMECH_SUPERPOSITION_HPP_
