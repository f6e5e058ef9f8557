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

#ifndef MAGMECH_COOLING_HPP_
#define MAGMECH_COOLING_HPP_

#include <vector>

#include "magmech/frames.hpp"

namespace magmech {

struct CoolingCoeffs {
  double a_plus = 0.0;   // heating coefficient, 1/s
  double a_minus = 0.0;  // cooling coefficient, 1/s
};

struct BetaSweepRow {
  double gamma_phi_ratio = 0.0;  // Gamma_phi / Gamma0
  double beta = 0.0;             // rad
  double g_eff = 0.0;            // rad/s
  double a_plus = 0.0;           // 1/s
  double a_minus = 0.0;          // 1/s
  double rate = 0.0;             // Gamma = A- - A+, 1/s
  double n_ss = 0.0;             // steady phonons at Gamma_ext = 0
  // Gamma divided by g_eff^2 cos^2(alpha) / Gamma0 (the beta-dependent
  // normalization quoted with the sweep).
  double rate_norm_caption = 0.0;
  // Gamma divided by 2 (g0 cos alpha)^2 / Gamma0; with Gamma_phi = 0 this
  // equals 2 sin^2(beta) cos(beta) / (1 + cos^2(beta)).
  double rate_norm_const = 0.0;
};

struct AdiabaticCheck {
  double n_master_equation = 0.0;
  double n_analytic = 0.0;
  double relative_deviation = 0.0;
  // g_eff = 0 makes both sides trivially zero.
  bool trivial = false;
  // Truncation guard tripped: the comparison is inconclusive.
  bool inconclusive = false;
  double top_level_population = 0.0;
  double residual = 0.0;
};

namespace cooling {

// Phonon absorption/emission coefficients of the adiabatically eliminated
// qubit: A_pm = 2 g^2 / (2 Gamma_phi* + Gamma_up + Gamma_down)
//              * (1 -/+ (Gamma_down - Gamma_up)/(Gamma_down + Gamma_up)).
CoolingCoeffs heating_cooling_coeffs(double g_eff, double gamma_phi_star,
                                     double gamma_up, double gamma_down);

// Net cooling rate Gamma = A- - A+.
double cooling_rate(const CoolingCoeffs& coeffs);

// Steady occupation (A+ + Gamma_ext) / Gamma; throws in the heating regime
// (Gamma <= 0).
double steady_phonons(double a_plus, double rate, double gamma_ext);

// Closed-form relaxation <n>(t) = n_ss + (n0 - n_ss) exp(-Gamma t).
std::vector<double> phonon_trajectory(double n0, double a_plus, double rate,
                                      double gamma_ext,
                                      const std::vector<double>& times);

// Steady occupation and normalized cooling rate over a beta grid for each
// Gamma_phi/Gamma0 ratio. Rows come out sorted by beta, then ratio.
std::vector<BetaSweepRow> beta_sweep(double gamma0,
                                     const std::vector<double>& phi_ratios,
                                     const std::vector<double>& beta_grid,
                                     double g0, double alpha,
                                     int threads = 1);

// Steady phonon number of the resonant dressed model solved with the full
// master equation, compared against the closed form. Requires the
// adiabatic regime g_eff <= 0.05 (2 Gamma_phi* + Gamma_up + Gamma_down).
AdiabaticCheck validate_adiabatic_elimination(double g_eff, double beta,
                                              double gamma0, double gamma_phi,
                                              int fock_dim);

}  // namespace cooling
}  // namespace magmech

#endif  // MAGMECH_COOLING_HPP_
