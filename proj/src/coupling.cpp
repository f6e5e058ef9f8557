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

#include "magmech/coupling.hpp"

#include <cmath>

#include "magmech/constants.hpp"
#include "magmech/error.hpp"

namespace magmech::coupling {

double zero_point_motion(double mass, double omega_t) {
  return std::sqrt(constants::hbar / (2.0 * mass * omega_t));
}

double flux_derivative(const TrapGeometry& geom, const PickupCoil& pickup,
                       const SphereSpec& sphere) {
  const double r = pickup.radius;
  const double d = pickup.axial_offset;
  if (r == 0.0 && d == 0.0) {
    throw ModuleError("coupling: degenerate pick-up geometry (r = d = 0)");
  }
  const double r2 = r * r;
  return 2.7 * constants::mu0 *
         (geom.current / (geom.coil_radius * geom.coil_radius)) *
         std::pow(sphere.radius, 3) * r2 / std::pow(d * d + r2, 1.5);
}

double eta(double x_zp, double flux_derivative) {
  return x_zp * flux_derivative / constants::flux_quantum;
}

double qubit_coupling(const QubitParams& qubit, double eta) {
  return qubit.nu * eta;
}

LCCoupling lc_coupling(const LCParams& lc, double eta) {
  LCCoupling out;
  out.omega_lc = 1.0 / std::sqrt(lc.inductance * lc.capacitance);
  out.flux_zp =
      std::sqrt(constants::hbar / (2.0 * lc.capacitance * out.omega_lc));
  out.epsilon_lc = constants::flux_quantum * out.flux_zp /
                   (constants::hbar * lc.inductance);
  out.g_lc = out.epsilon_lc * eta;
  return out;
}

QubitSplitting qubit_splitting(const QubitParams& qubit) {
  QubitSplitting s;
  s.omega_s = std::hypot(qubit.bias, qubit.tunneling);
  s.alpha = std::atan2(qubit.tunneling, qubit.bias);
  return s;
}

trap::ValidityFlag check_pickup_validity(const PickupCoil& pickup,
                                         const SphereSpec& sphere) {
  const double needed = 5.0 * sphere.radius;
  return {"pickup_far_from_sphere (r >= 5 R)", pickup.radius >= needed,
          pickup.radius / needed};
}

}  // namespace magmech::coupling
