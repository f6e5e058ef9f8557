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

#include <doctest.h>

#include <cmath>
#include <random>

#include "magmech/constants.hpp"
#include "magmech/error.hpp"
#include "magmech/frames.hpp"
#include "magmech/lindblad.hpp"

namespace {

using magmech::Cplx;
using magmech::DriveParams;
using magmech::Matrix;
using magmech::QubitParams;
namespace frames = magmech::frames;
namespace constants = magmech::constants;

QubitParams paper_qubit() {
  QubitParams q;
  q.nu = constants::two_pi * 1e10;
  q.tunneling = constants::two_pi * 1e10;
  q.bias = constants::two_pi * 1e10;
  q.t1 = 10e-6;
  q.t2 = 10e-6;
  return q;
}

constexpr double kOmegaT = 1.766953205491e5;

double max_abs(const Matrix& m) {
  double v = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
  }
  return v;
}

}  // namespace

TEST_CASE("lab Hamiltonian: hermiticity and commuting-limit structure") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 10; ++i) {
    const Matrix h =
        frames::build_hmm(std::abs(u(rng)) + 0.1, u(rng), u(rng), u(rng), 6);
    CHECK(magmech::hermiticity_defect(h) == 0.0);
  }

  // g0 = 0, Delta = 0: every term is diagonal.
  const Matrix diag = frames::build_hmm(1.0, 0.7, 0.0, 0.0, 5);
  for (int i = 0; i < diag.rows(); ++i) {
    for (int j = 0; j < diag.cols(); ++j) {
      if (i != j) CHECK(std::abs(diag(i, j)) == 0.0);
    }
  }

  // Bare oscillator at N=2: eigenvalues {0, 1}, each doubly degenerate.
  const Matrix bare = frames::build_hmm(1.0, 0.0, 0.0, 0.0, 2);
  const auto ev = magmech::eigvals_hermitian(bare);
  CHECK(ev[0] == doctest::Approx(0.0));
  CHECK(ev[1] == doctest::Approx(0.0));
  CHECK(ev[2] == doctest::Approx(1.0));
  CHECK(ev[3] == doctest::Approx(1.0));
}

TEST_CASE("dressed rates: limits, paper rates, exact difference identity") {
  const double gamma0 = 1e5;
  const double gamma_phi = 0.5e5;

  auto r = frames::dressed_rates(gamma0, gamma_phi, 0.0);
  CHECK(r.gamma_down == doctest::Approx(2.0 * gamma0));
  CHECK(r.gamma_up == doctest::Approx(0.0));
  CHECK(r.gamma_phi_star == doctest::Approx(gamma_phi));

  r = frames::dressed_rates(gamma0, gamma_phi, std::numbers::pi / 2.0);
  CHECK(r.gamma_up == doctest::Approx(gamma_phi + 0.5 * gamma0));
  CHECK(r.gamma_down == doctest::Approx(gamma_phi + 0.5 * gamma0));

  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
  for (int i = 0; i < 60; ++i) {
    const double beta = u(rng);
    const auto d = frames::dressed_rates(gamma0, gamma_phi, beta);
    // The dephasing contributions cancel exactly in the difference.
    CHECK(d.gamma_down - d.gamma_up ==
          doctest::Approx(2.0 * gamma0 * std::cos(beta)).epsilon(1e-12));
    CHECK(d.gamma_up >= 0.0);
    CHECK(d.gamma_phi_star >= 0.0);
  }
}

TEST_CASE("effective frame at the resonant drive") {
  const auto qubit = paper_qubit();
  const double g0 = 8.125692388958e3;

  // delta_omega = 0: beta = pi/2 and g_eff = g0 cos(alpha).
  DriveParams drive;
  drive.frequency = magmech::coupling::qubit_splitting(qubit).omega_s;
  drive.amplitude = 2.0e5;
  auto f = frames::effective_frame(qubit, drive, kOmegaT, g0);
  CHECK(f.beta == doctest::Approx(std::numbers::pi / 2.0));
  CHECK(f.g_eff ==
        doctest::Approx(g0 * std::cos(f.alpha)).epsilon(1e-12));
  CHECK(f.splitting == doctest::Approx(f.rabi).epsilon(1e-12));

  // Drive off: no coupling survives the rotating frame.
  drive.amplitude = 0.0;
  drive.frequency = 1.01 * magmech::coupling::qubit_splitting(qubit).omega_s;
  f = frames::effective_frame(qubit, drive, kOmegaT, g0);
  CHECK(f.g_eff == doctest::Approx(0.0));
  CHECK(std::sin(f.beta) == doctest::Approx(0.0));
}

TEST_CASE("effective frame flags alpha = pi/2 as zero coupling") {
  QubitParams q = paper_qubit();
  q.bias = 0.0;  // degeneracy point
  DriveParams drive{1e5, magmech::coupling::qubit_splitting(q).omega_s};
  const auto f = frames::effective_frame(q, drive, kOmegaT, 1e3);
  CHECK(f.zero_coupling_warning);
  CHECK(f.g_eff == doctest::Approx(0.0));
}

TEST_CASE("resolved resonance reproduces beta and the dressed splitting") {
  const auto qubit = paper_qubit();
  const double g0 = 8.125692388958e3;

  // Direct evaluation at beta = pi/3, alpha = pi/4.
  const auto drive =
      frames::resolve_resonance(qubit, kOmegaT, std::numbers::pi / 3.0);
  CHECK(drive.amplitude == doctest::Approx(2.164066876414e5).epsilon(1e-9));

  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.05, 1.5);
  for (int i = 0; i < 30; ++i) {
    const double beta = u(rng);
    const auto d = frames::resolve_resonance(qubit, kOmegaT, beta);
    const auto f = frames::effective_frame(qubit, d, kOmegaT, g0);
    CHECK(f.beta == doctest::Approx(beta).epsilon(1e-12));
    CHECK(f.splitting == doctest::Approx(kOmegaT).epsilon(1e-12));
    CHECK(f.splitting ==
          doctest::Approx(std::hypot(f.detuning, f.rabi)).epsilon(1e-12));
    CHECK(std::abs(f.g_eff) <= g0 * (1.0 + 1e-12));
  }

  // beta = pi/2 means zero detuning and Omega = omega_t / sin(alpha).
  const auto resonant =
      frames::resolve_resonance(qubit, kOmegaT, std::numbers::pi / 2.0);
  CHECK(resonant.frequency ==
        doctest::Approx(magmech::coupling::qubit_splitting(qubit).omega_s)
            .epsilon(1e-12));
  CHECK(resonant.amplitude ==
        doctest::Approx(kOmegaT / std::sin(std::numbers::pi / 4.0))
            .epsilon(1e-12));

  QubitParams no_tunneling = paper_qubit();
  no_tunneling.tunneling = 0.0;
  CHECK_THROWS_AS(frames::resolve_resonance(no_tunneling, kOmegaT, 1.0),
                  magmech::ModuleError);
}

TEST_CASE("half coupling at beta = pi/4 with alpha = pi/4") {
  const auto qubit = paper_qubit();  // alpha = pi/4
  const double g0 = 1.0;
  const auto drive =
      frames::resolve_resonance(qubit, kOmegaT, std::numbers::pi / 4.0);
  const auto f = frames::effective_frame(qubit, drive, kOmegaT, g0);
  CHECK(f.g_eff == doctest::Approx(0.5 * g0).epsilon(1e-12));
}

TEST_CASE("resonant interaction conserves total excitation") {
  const int fock_dim = 7;
  const double g_eff = 123.0;
  const Matrix h = frames::build_jc_effective(g_eff, fock_dim);
  CHECK(magmech::hermiticity_defect(h) == 0.0);

  // <down,1|H|up,0> = g_eff.
  CHECK(h(fock_dim + 1, 0).real() == doctest::Approx(g_eff));

  // Commutes with sigma+sigma- + b^dag b.
  const auto ops = magmech::lindblad::fock_operators(fock_dim);
  Matrix excitation =
      magmech::kron(magmech::mul(frames::sigma_plus(), frames::sigma_minus()),
                    Matrix::identity(fock_dim));
  excitation += magmech::kron(Matrix::identity(2), ops.number);
  const Matrix commutator = magmech::mul(h, excitation) -
                            magmech::mul(excitation, h);
  CHECK(max_abs(commutator) < 1e-12 * g_eff);

  CHECK(max_abs(frames::build_jc_effective(0.0, fock_dim)) == 0.0);
}
