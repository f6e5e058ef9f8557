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

#ifndef MAGMECH_TRAP_HPP_
#define MAGMECH_TRAP_HPP_

#include <array>
#include <string>
#include <vector>

namespace magmech {

// Superconductor bulk constants. All SI.
struct MaterialProperties {
  std::string name;
  double density = 0.0;              // kg/m^3
  double penetration_depth = 0.0;    // m
  double coherence_length = 0.0;     // m
  double critical_temperature = 0.0; // K
  double critical_field = 0.0;       // T
};

struct SphereSpec {
  double radius = 0.0;  // m
  MaterialProperties material;

  double mass() const;  // (4/3) pi R^3 rho
};

// Anti-Helmholtz coil pair: coaxial loops of radius l separated by l along
// the trap axis (x), carrying opposite currents I.
struct TrapGeometry {
  double coil_radius = 0.0;  // m, also the coil separation
  double current = 0.0;      // A
};

namespace trap {

// Axial trap frequency of the levitated sphere, rad/s.
double trap_frequency(const TrapGeometry& geom, const MaterialProperties& mat);

// Transverse frequency: half the axial one.
double transverse_frequency(double omega_t);

// Largest sphere radius that keeps the surface field below the critical
// field of the material.
double max_radius(double omega_t, const MaterialProperties& mat);

// Bare field of the coil pair (no sphere) at a lab-frame point, tesla.
// Axis of the pair is x; coils sit at x = +/- l/2. Used for linearity and
// symmetry checks only.
std::array<double, 3> quadrupole_field(const std::array<double, 3>& point,
                                       const TrapGeometry& geom);

// Field of a single circular loop: radius a, centered on the x axis at
// x = x0, current i flowing so the on-axis field points along +x for i > 0.
std::array<double, 3> loop_field(const std::array<double, 3>& point, double a,
                                 double x0, double i);

struct ValidityFlag {
  std::string name;
  bool pass = false;
  // Ratio of the satisfied side to the required side; > 1 means pass with
  // that much headroom.
  double margin = 0.0;
};

struct ValidityReport {
  std::vector<ValidityFlag> flags;
  bool all_pass() const;
};

// Checks R < R_max (critical field), R >= 10 max(lambda, xi) (bulk Meissner
// regime) and l >= 5 R (point-like sphere in the trap field).
ValidityReport check_meissner_validity(const SphereSpec& sphere,
                                       const TrapGeometry& geom,
                                       double omega_t);

}  // namespace trap
}  // namespace magmech

#endif  // MAGMECH_TRAP_HPP_
