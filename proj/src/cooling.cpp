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

#include "magmech/cooling.hpp"

#include <algorithm>
#include <cmath>

#include "magmech/error.hpp"
#include "magmech/lindblad.hpp"
#include "magmech/threading.hpp"

namespace magmech::cooling {

CoolingCoeffs heating_cooling_coeffs(double g_eff, double gamma_phi_star,
                                     double gamma_up, double gamma_down) {
  const double total = 2.0 * gamma_phi_star + gamma_up + gamma_down;
  if (total <= 0.0) {
    throw ModuleError("cooling: all dressed rates vanish, coefficients "
                      "undefined");
  }
  if (gamma_up + gamma_down <= 0.0) {
    throw ModuleError("cooling: no transition rates, the asymmetry ratio is "
                      "undefined");
  }
  const double prefactor = 2.0 * g_eff * g_eff / total;
  const double asym = (gamma_down - gamma_up) / (gamma_down + gamma_up);
  return {prefactor * (1.0 - asym), prefactor * (1.0 + asym)};
}

double cooling_rate(const CoolingCoeffs& coeffs) {
  return coeffs.a_minus - coeffs.a_plus;
}

double steady_phonons(double a_plus, double rate, double gamma_ext) {
  if (rate <= 0.0) {
    throw ModuleError("cooling: no net cooling (Gamma <= 0, heating regime)");
  }
  return (a_plus + gamma_ext) / rate;
}

std::vector<double> phonon_trajectory(double n0, double a_plus, double rate,
                                      double gamma_ext,
                                      const std::vector<double>& times) {
  const double n_ss = steady_phonons(a_plus, rate, gamma_ext);
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    out.push_back(n_ss + (n0 - n_ss) * std::exp(-rate * t));
  }
  return out;
}

std::vector<BetaSweepRow> beta_sweep(double gamma0,
                                     const std::vector<double>& phi_ratios,
                                     const std::vector<double>& beta_grid,
                                     double g0, double alpha, int threads) {
  for (double beta : beta_grid) {
    if (!(beta > 0.0 && beta < std::numbers::pi / 2.0)) {
      throw ModuleError("cooling: beta grid must lie strictly inside "
                        "(0, pi/2)");
    }
  }
  const double cos_alpha = std::cos(alpha);
  const double g_cos = g0 * cos_alpha;
  std::vector<BetaSweepRow> rows(beta_grid.size() * phi_ratios.size());
  parallel_for(rows.size(), threads, [&](std::size_t idx) {
    const std::size_t bi = idx / phi_ratios.size();
    const std::size_t ri = idx % phi_ratios.size();
    const double beta = beta_grid[bi];
    const double ratio = phi_ratios[ri];
    const auto dressed = frames::dressed_rates(gamma0, ratio * gamma0, beta);
    BetaSweepRow& row = rows[idx];
    row.gamma_phi_ratio = ratio;
    row.beta = beta;
    row.g_eff = g_cos * std::sin(beta);
    const auto coeffs =
        heating_cooling_coeffs(row.g_eff, dressed.gamma_phi_star,
                               dressed.gamma_up, dressed.gamma_down);
    row.a_plus = coeffs.a_plus;
    row.a_minus = coeffs.a_minus;
    row.rate = cooling_rate(coeffs);
    row.n_ss = steady_phonons(row.a_plus, row.rate, 0.0);
    row.rate_norm_caption =
        row.rate * gamma0 / (row.g_eff * row.g_eff * cos_alpha * cos_alpha);
    row.rate_norm_const = row.rate * gamma0 / (2.0 * g_cos * g_cos);
  });
  // Already beta-major by construction; keep the contract explicit.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BetaSweepRow& a, const BetaSweepRow& b) {
                     if (a.beta != b.beta) return a.beta < b.beta;
                     return a.gamma_phi_ratio < b.gamma_phi_ratio;
                   });
  return rows;
}

AdiabaticCheck validate_adiabatic_elimination(double g_eff, double beta,
                                              double gamma0, double gamma_phi,
                                              int fock_dim) {
  AdiabaticCheck check;
  if (g_eff == 0.0) {
    check.trivial = true;
    return check;
  }
  const auto dressed = frames::dressed_rates(gamma0, gamma_phi, beta);
  const double total =
      2.0 * dressed.gamma_phi_star + dressed.gamma_up + dressed.gamma_down;
  if (g_eff > 0.05 * total) {
    throw ModuleError("cooling: g_eff outside the adiabatic regime "
                      "(needs g_eff <= 0.05 x total dressed rate)");
  }

  const auto coeffs =
      heating_cooling_coeffs(g_eff, dressed.gamma_phi_star, dressed.gamma_up,
                             dressed.gamma_down);
  check.n_analytic = steady_phonons(coeffs.a_plus, cooling_rate(coeffs), 0.0);

  LindbladModel model;
  model.hamiltonian = frames::build_jc_effective(g_eff, fock_dim);
  const Matrix id_fock = Matrix::identity(fock_dim);
  const Cplx inv_sqrt2{1.0 / std::sqrt(2.0), 0.0};
  model.channels.push_back(
      {dressed.gamma_down, kron(frames::sigma_minus(), id_fock)});
  model.channels.push_back(
      {dressed.gamma_up, kron(frames::sigma_plus(), id_fock)});
  model.channels.push_back(
      {dressed.gamma_phi_star, inv_sqrt2 * kron(frames::sigma_z(), id_fock)});

  const auto ss = lindblad::steady_state(model);
  check.residual = ss.residual;
  check.top_level_population =
      lindblad::top_level_population(ss.rho, fock_dim);
  if (check.top_level_population > DensityTolerances{}.top_level_population) {
    check.inconclusive = true;
    return check;
  }
  const Matrix number_full =
      kron(Matrix::identity(2), lindblad::fock_operators(fock_dim).number);
  check.n_master_equation =
      lindblad::expectation(ss.rho, number_full).real();
  check.relative_deviation =
      std::abs(check.n_master_equation - check.n_analytic) /
      std::abs(check.n_analytic);
  return check;
}

}  // namespace magmech::cooling
