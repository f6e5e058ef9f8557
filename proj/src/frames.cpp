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

#include "magmech/frames.hpp"

#include <cmath>

#include "magmech/error.hpp"
#include "magmech/lindblad.hpp"

namespace magmech::frames {

namespace {

RwaFlag make_flag(std::string name, double ratio) {
  RwaStatus status = RwaStatus::fail;
  if (ratio >= 20.0) {
    status = RwaStatus::pass;
  } else if (ratio >= 5.0) {
    status = RwaStatus::marginal;
  }
  return {std::move(name), ratio, status};
}

}  // namespace

Matrix sigma_x() {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m(0, 1) = Cplx{0.0, -1.0};
  m(1, 0) = Cplx{0.0, 1.0};
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Matrix sigma_plus() {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Matrix sigma_minus() {
  Matrix m(2, 2);
  m(1, 0) = 1.0;
  return m;
}

Matrix build_hmm(double omega_t, double bias, double tunneling, double g0,
                 int fock_dim) {
  const auto ops = lindblad::fock_operators(fock_dim);
  const Matrix iq = Matrix::identity(2);
  const Matrix in = Matrix::identity(fock_dim);
  Matrix h = omega_t * kron(iq, ops.number);
  h += (-0.5 * bias) * kron(sigma_z(), in);
  h += (-0.5 * tunneling) * kron(sigma_x(), in);
  h += (-g0) * kron(sigma_z(), ops.position);
  return h;
}

Matrix build_jc_effective(double g_eff, int fock_dim) {
  const auto ops = lindblad::fock_operators(fock_dim);
  Matrix h = g_eff * kron(sigma_minus(), ops.raising);
  h += g_eff * kron(sigma_plus(), ops.lowering);
  return h;
}

DressedRates dressed_rates(double gamma0, double gamma_phi, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  DressedRates r;
  r.gamma_phi_star = gamma_phi * c * c + 0.5 * gamma0 * s * s;
  r.gamma_down = gamma_phi * s * s + 0.5 * gamma0 * (1.0 + c) * (1.0 + c);
  r.gamma_up = gamma_phi * s * s + 0.5 * gamma0 * (1.0 - c) * (1.0 - c);
  return r;
}

EffectiveFrame effective_frame(const QubitParams& qubit,
                               const DriveParams& drive, double omega_t,
                               double g0) {
  const auto split = coupling::qubit_splitting(qubit);
  EffectiveFrame f;
  f.alpha = split.alpha;
  f.detuning = drive.frequency - split.omega_s;
  f.rabi = drive.amplitude * std::sin(split.alpha);
  f.splitting = std::hypot(f.detuning, f.rabi);
  f.beta = std::atan2(f.rabi, f.detuning);
  f.g_eff = g0 * std::cos(split.alpha) * std::sin(f.beta);
  f.zero_coupling_warning = std::cos(split.alpha) == 0.0;

  const auto rates = dressed_rates(qubit.gamma0(), qubit.gamma_phi(), f.beta);
  f.gamma_phi_star = rates.gamma_phi_star;
  f.gamma_up = rates.gamma_up;
  f.gamma_down = rates.gamma_down;

  // First rotating-wave step: drive near the qubit splitting, both far
  // above the mechanics and the bare coupling.
  const double tiny = 1e-300;
  f.rwa_flags.push_back(make_flag(
      "drive_resonant_with_qubit (|omega_d - omega_s| << omega_s)",
      split.omega_s / std::max(std::abs(f.detuning), tiny)));
  f.rwa_flags.push_back(
      make_flag("qubit_fast_vs_mechanics (omega_s >> omega_t; g0)",
                split.omega_s / std::max(omega_t, g0)));
  // Second step: dressed splitting matched to the mechanics, both far above
  // the residual coupling and the decoherence rates.
  f.rwa_flags.push_back(make_flag(
      "dressed_splitting_resonant (|omega_t - omega_s_tilde| << omega_t)",
      omega_t / std::max(std::abs(omega_t - f.splitting), tiny)));
  f.rwa_flags.push_back(make_flag(
      "mechanics_fast_vs_rates (omega_t >> g_eff; Gamma0; Gamma_phi)",
      omega_t / std::max({std::abs(f.g_eff), qubit.gamma0(),
                          std::max(qubit.gamma_phi(), 0.0)})));
  return f;
}

DriveParams resolve_resonance(const QubitParams& qubit, double omega_t,
                              double beta) {
  const auto split = coupling::qubit_splitting(qubit);
  const double sin_alpha = std::sin(split.alpha);
  if (sin_alpha <= 0.0) {
    throw ModuleError(
        "frames: tunneling Delta = 0 leaves the drive no leverage on the "
        "qubit (sin alpha = 0)");
  }
  DriveParams d;
  const double detuning = omega_t * std::cos(beta);
  d.amplitude = omega_t * std::sin(beta) / sin_alpha;
  d.frequency = split.omega_s + detuning;
  return d;
}

}  // namespace magmech::frames
