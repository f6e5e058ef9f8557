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

#include "magmech/trap.hpp"

#include <cmath>

#include "magmech/constants.hpp"
#include "magmech/error.hpp"

namespace magmech {

double SphereSpec::mass() const {
  return (4.0 / 3.0) * std::numbers::pi * radius * radius * radius *
         material.density;
}

namespace trap {

double trap_frequency(const TrapGeometry& geom,
                      const MaterialProperties& mat) {
  const double omega = 1.05 * std::sqrt(constants::mu0 / mat.density) *
                       geom.current / (geom.coil_radius * geom.coil_radius);
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw ModuleError("trap: invalid geometry, trap frequency " +
                      std::to_string(omega) + " rad/s gives no confinement");
  }
  return omega;
}

double transverse_frequency(double omega_t) { return 0.5 * omega_t; }

double max_radius(double omega_t, const MaterialProperties& mat) {
  return 0.98 * mat.critical_field /
         (omega_t * std::sqrt(constants::mu0 * mat.density));
}

std::array<double, 3> loop_field(const std::array<double, 3>& point, double a,
                                 double x0, double i) {
  // Circular-loop solution in terms of the complete elliptic integrals.
  const double ax = point[0] - x0;                     // axial coordinate
  const double rho = std::hypot(point[1], point[2]);   // radial distance
  const double dist2_near = (a - rho) * (a - rho) + ax * ax;
  if (dist2_near < 1e-24 * a * a) {
    throw ModuleError("trap: field requested on the coil wire (singular)");
  }
  const double pref = constants::mu0 * i / (2.0 * std::numbers::pi);
  const double denom2 = (a + rho) * (a + rho) + ax * ax;
  const double denom = std::sqrt(denom2);

  if (rho < 1e-12 * a) {
    // On axis the elliptic integrals collapse to the textbook formula.
    const double bx = constants::mu0 * i * a * a /
                      (2.0 * std::pow(a * a + ax * ax, 1.5));
    return {bx, 0.0, 0.0};
  }

  const double k = std::sqrt(4.0 * a * rho / denom2);
  const double ek = std::comp_ellint_1(k);
  const double ee = std::comp_ellint_2(k);
  const double bx = pref / denom *
                    (ek + ee * (a * a - rho * rho - ax * ax) / dist2_near);
  const double brho = pref * ax / (rho * denom) *
                      (-ek + ee * (a * a + rho * rho + ax * ax) / dist2_near);
  const double inv_rho = 1.0 / rho;
  return {bx, brho * point[1] * inv_rho, brho * point[2] * inv_rho};
}

std::array<double, 3> quadrupole_field(const std::array<double, 3>& point,
                                       const TrapGeometry& geom) {
  const double l = geom.coil_radius;
  const auto near = loop_field(point, l, -0.5 * l, geom.current);
  const auto far = loop_field(point, l, +0.5 * l, -geom.current);
  return {near[0] + far[0], near[1] + far[1], near[2] + far[2]};
}

bool ValidityReport::all_pass() const {
  for (const auto& f : flags) {
    if (!f.pass) return false;
  }
  return true;
}

ValidityReport check_meissner_validity(const SphereSpec& sphere,
                                       const TrapGeometry& geom,
                                       double omega_t) {
  ValidityReport report;
  const double r_max = max_radius(omega_t, sphere.material);
  report.flags.push_back({"surface_field_below_critical (R < R_max)",
                          sphere.radius < r_max, r_max / sphere.radius});

  const double bulk_scale = 10.0 * std::max(sphere.material.penetration_depth,
                                            sphere.material.coherence_length);
  report.flags.push_back({"bulk_meissner_regime (R >= 10 max(lambda; xi))",
                          sphere.radius >= bulk_scale,
                          sphere.radius / bulk_scale});

  const double coil_scale = 5.0 * sphere.radius;
  report.flags.push_back({"point_sphere_in_trap (l >= 5 R)",
                          geom.coil_radius >= coil_scale,
                          geom.coil_radius / coil_scale});
  return report;
}

}  // namespace trap
}  // namespace magmech
