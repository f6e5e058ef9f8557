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

#ifndef MAGMECH_COUPLING_HPP_
#define MAGMECH_COUPLING_HPP_

#include "magmech/trap.hpp"

namespace magmech {

// Flux pick-up loop, coaxial with the trap, at axial offset d from the trap
// center. The leading-order flux derivative assumes R << l, r.
struct PickupCoil {
  double radius = 0.0;        // m
  double axial_offset = 0.0;  // m
};

// Flux qubit, everything already converted to angular units.
// nu is the persistent-current energy 2 Phi0 Ip expressed as a rate (/hbar).
struct QubitParams {
  double nu = 0.0;         // rad/s
  double tunneling = 0.0;  // Delta, rad/s
  double bias = 0.0;       // epsilon, rad/s
  double t1 = 0.0;         // s
  double t2 = 0.0;         // s

  double gamma0() const { return 1.0 / t1; }
  // Pure dephasing from 1/T2 = Gamma0/2 + Gamma_phi.
  double gamma_phi() const { return 1.0 / t2 - 0.5 * gamma0(); }
};

struct LCParams {
  double inductance = 0.0;   // H
  double capacitance = 0.0;  // F
};

struct LCCoupling {
  double omega_lc = 0.0;   // rad/s
  double flux_zp = 0.0;    // Wb
  double epsilon_lc = 0.0; // rad/s
  double g_lc = 0.0;       // rad/s
};

struct QubitSplitting {
  double omega_s = 0.0;  // sqrt(eps^2 + Delta^2), rad/s
  double alpha = 0.0;    // mixing angle, tan(alpha) = Delta/eps, in (0, pi)
};

namespace coupling {

// Ground-state position spread sqrt(hbar / 2 M omega_t).
double zero_point_motion(double mass, double omega_t);

// d(Phi_ext)/dx at the trap center for the axial pick-up loop, Wb/m.
double flux_derivative(const TrapGeometry& geom, const PickupCoil& pickup,
                       const SphereSpec& sphere);

// Dimensionless transduction parameter x_zp * Phi'_ext(0) / Phi0.
double eta(double x_zp, double flux_derivative);

// Qubit magnetomechanical coupling g0 = nu * eta, rad/s.
double qubit_coupling(const QubitParams& qubit, double eta);

LCCoupling lc_coupling(const LCParams& lc, double eta);

QubitSplitting qubit_splitting(const QubitParams& qubit);

// Pick-up loop validity: the leading-order flux expression needs r >= 5 R.
trap::ValidityFlag check_pickup_validity(const PickupCoil& pickup,
                                         const SphereSpec& sphere);

}  // namespace coupling
}  // namespace magmech

#endif  // MAGMECH_COUPLING_HPP_
