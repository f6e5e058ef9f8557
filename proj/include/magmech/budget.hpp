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

#ifndef MAGMECH_BUDGET_HPP_
#define MAGMECH_BUDGET_HPP_

#include <string>
#include <vector>

namespace magmech {

// Environmental noise inputs. Spectra are one-sided amplitude densities
// evaluated where the heating formulas need them: fractional frequency
// noise at 2 omega_t, absolute position noise at omega_t.
struct NoiseSpectra {
  double pressure = 0.0;          // Pa
  double gas_temperature = 0.0;   // K
  double gas_molecular_mass = 0.0;  // kg
  double sqrt_s_omega = 0.0;      // 1/sqrt(Hz)
  double sqrt_s_x_over_xzp = 0.0; // 1/sqrt(Hz), position noise in x_zp units
};

struct GasDamping {
  double gamma_air = 0.0;  // 1/s
  double q_air = 0.0;      // omega_t / gamma_air
  double mean_speed = 0.0; // m/s
};

struct DecoherenceBudget {
  GasDamping gas;
  double gamma_omega = 0.0;     // frequency-noise heating, 1/s
  double gamma_x = 0.0;         // position-noise heating (angular reading)
  double gamma_x_hz_reading = 0.0;  // same with omega_t read as a plain
                                    // frequency; reported side by side
  double gamma_ext = 0.0;       // gamma_omega + gamma_x
  std::vector<std::string> notes;
};

namespace budget {

// Kinetic gas damping gamma_air = 16 P / (pi vbar R rho) and the quality
// factor omega_t / gamma_air; vbar is the mean thermal speed of the gas.
GasDamping gas_damping(double pressure, double gas_temperature,
                       double gas_molecular_mass, double sphere_radius,
                       double material_density, double omega_t);

// Trap-frequency-noise heating pi omega_t^2 S_omega(2 omega_t) / 16.
double freq_noise_heating(double omega_t, double sqrt_s_omega);

// Trap-center-noise heating pi omega_t^2 S_x(omega_t) / (4 x_zp^2), with
// the noise already expressed in x_zp units.
double position_noise_heating(double omega_t, double sqrt_s_x_over_xzp);

DecoherenceBudget budget_report(const NoiseSpectra& noise,
                                double sphere_radius,
                                double material_density, double omega_t);

}  // namespace budget
}  // namespace magmech

#endif  // MAGMECH_BUDGET_HPP_
