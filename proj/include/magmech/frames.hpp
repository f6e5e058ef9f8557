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

#ifndef MAGMECH_FRAMES_HPP_
#define MAGMECH_FRAMES_HPP_

#include <string>
#include <vector>

#include "magmech/coupling.hpp"
#include "magmech/linalg.hpp"

namespace magmech {

struct DriveParams {
  double amplitude = 0.0;  // Omega, rad/s
  double frequency = 0.0;  // omega_d, rad/s
};

enum class RwaStatus { pass, marginal, fail };

struct RwaFlag {
  std::string name;
  double ratio = 0.0;  // >= 20 pass, 5..20 marginal, < 5 fail
  RwaStatus status = RwaStatus::fail;
};

// Result of the two rotating-frame reductions of the driven qubit: the
// mechanics-resonant two-level system with dressed dissipation.
struct EffectiveFrame {
  double detuning = 0.0;        // delta_omega = omega_d - omega_s
  double rabi = 0.0;            // Omega_tilde = Omega sin(alpha)
  double splitting = 0.0;       // omega_s_tilde = hypot(detuning, rabi)
  double beta = 0.0;            // atan2(rabi, detuning)
  double alpha = 0.0;           // qubit mixing angle
  double g_eff = 0.0;           // g0 cos(alpha) sin(beta)
  double gamma_phi_star = 0.0;  // dressed dephasing, 1/s
  double gamma_up = 0.0;        // dressed upward rate, 1/s
  double gamma_down = 0.0;      // dressed downward rate, 1/s
  bool zero_coupling_warning = false;  // alpha = pi/2: g_eff vanishes
  std::vector<RwaFlag> rwa_flags;
};

struct DressedRates {
  double gamma_phi_star = 0.0;
  double gamma_up = 0.0;
  double gamma_down = 0.0;
};

namespace frames {

// Qubit basis convention used across the toolkit: index 0 = up / excited,
// index 1 = down / ground; sigma_z = diag(1, -1); sigma_minus = |1><0|.
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix sigma_plus();
Matrix sigma_minus();

// Lab-frame magnetomechanical Hamiltonian (units of rad/s) on the
// qubit (x) Fock(n_fock) space, qubit index slow:
//   omega_t b^dag b - (eps/2) sigma_z - (Delta/2) sigma_x
//     - g0 sigma_z (b^dag + b)
Matrix build_hmm(double omega_t, double bias, double tunneling, double g0,
                 int fock_dim);

// Resonant interaction left after both rotating-wave steps:
//   g_eff (sigma_minus b^dag + sigma_plus b)
Matrix build_jc_effective(double g_eff, int fock_dim);

DressedRates dressed_rates(double gamma0, double gamma_phi, double beta);

EffectiveFrame effective_frame(const QubitParams& qubit,
                               const DriveParams& drive, double omega_t,
                               double g0);

// Inverse design helper: drive parameters that make the dressed splitting
// hit the mechanical frequency exactly with the requested mixing angle beta.
DriveParams resolve_resonance(const QubitParams& qubit, double omega_t,
                              double beta);

}  // namespace frames
}  // namespace magmech

#endif  // MAGMECH_FRAMES_HPP_
