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
#include "magmech/coupling.hpp"
#include "magmech/error.hpp"

namespace {

using magmech::LCParams;
using magmech::MaterialProperties;
using magmech::PickupCoil;
using magmech::QubitParams;
using magmech::SphereSpec;
using magmech::TrapGeometry;
namespace coupling = magmech::coupling;
namespace constants = magmech::constants;

MaterialProperties lead() {
  return {"Pb", 11360.0, 30.5e-9, 96e-9, 7.2, 0.08};
}

QubitParams paper_qubit() {
  QubitParams q;
  q.nu = constants::two_pi * 1e10;
  q.tunneling = constants::two_pi * 1e10;
  q.bias = constants::two_pi * 1e10;
  q.t1 = 10e-6;
  q.t2 = 10e-6;
  return q;
}

constexpr double kPaperOmegaT = 1.766953205491e5;  // rad/s
constexpr double kPaperMass = 3.806772538110e-13;  // kg

}  // namespace

TEST_CASE("zero-point motion value and identities") {
  const double x_zp = coupling::zero_point_motion(kPaperMass, kPaperOmegaT);
  CHECK(x_zp == doctest::Approx(2.8e-14).epsilon(0.01));
  CHECK(x_zp == doctest::Approx(2.799832784982e-14).epsilon(1e-9));

  // Defining identity and square-root scaling.
  CHECK(x_zp * x_zp * 2.0 * kPaperMass * kPaperOmegaT ==
        doctest::Approx(constants::hbar).epsilon(1e-12));
  CHECK(coupling::zero_point_motion(4.0 * kPaperMass, kPaperOmegaT) ==
        doctest::Approx(0.5 * x_zp).epsilon(1e-12));
}

TEST_CASE("flux derivative: paper set, R^3 law, far-field limit") {
  const TrapGeometry geom{25e-6, 10.0};
  const PickupCoil pickup{24.5e-6, 17.5e-6};
  SphereSpec sphere{2e-6, lead()};
  const double base = coupling::flux_derivative(geom, pickup, sphere);
  CHECK(base == doctest::Approx(9.551334483844e-9).epsilon(1e-9));
  CHECK(base == doctest::Approx(9.5e-9).epsilon(0.01));

  SphereSpec doubled{4e-6, lead()};
  CHECK(coupling::flux_derivative(geom, pickup, doubled) ==
        doctest::Approx(8.0 * base).epsilon(1e-12));

  const PickupCoil far{24.5e-6, 1.0};
  CHECK(coupling::flux_derivative(geom, far, sphere) < 1e-12 * base);

  CHECK_THROWS_AS(coupling::flux_derivative(geom, PickupCoil{0.0, 0.0},
                                            sphere),
                  magmech::ModuleError);
}

TEST_CASE("eta: paper value and linearity") {
  const double x_zp = 2.799832784982e-14;
  const double dphi = 9.551334483844e-9;
  const double eta = coupling::eta(x_zp, dphi);
  CHECK(eta == doctest::Approx(1.3e-7).epsilon(0.05));
  CHECK(eta == doctest::Approx(1.293244109747e-7).epsilon(1e-9));
  CHECK(coupling::eta(x_zp, 0.0) == 0.0);
  CHECK(coupling::eta(2.0 * x_zp, 3.0 * dphi) ==
        doctest::Approx(6.0 * eta).epsilon(1e-12));
}

TEST_CASE("qubit coupling g0 = nu eta") {
  const auto qubit = paper_qubit();
  const double eta = 1.293244109747e-7;
  const double g0 = coupling::qubit_coupling(qubit, eta);
  CHECK(g0 / constants::two_pi == doctest::Approx(1.3e3).epsilon(0.05));
  CHECK(coupling::qubit_coupling(qubit, 0.0) == 0.0);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(1e-9, 1e-5);
  for (int i = 0; i < 20; ++i) {
    const double e = u(rng);
    CHECK(coupling::qubit_coupling(qubit, e) / qubit.nu ==
          doctest::Approx(e).epsilon(1e-12));
  }
}

TEST_CASE("LC coupling chain for the paper circuit") {
  const LCParams lc{0.1e-9, 1e-12};
  const double eta = 1.293244109747e-7;
  const auto out = coupling::lc_coupling(lc, eta);
  CHECK(out.omega_lc == doctest::Approx(1e11).epsilon(1e-12));
  CHECK(out.g_lc / constants::two_pi == doctest::Approx(93e3).epsilon(0.05));
  CHECK(coupling::lc_coupling(lc, 0.0).g_lc == 0.0);

  // g_lc / g0 = eps_lc / nu, mechanics-independent, about 72.
  const double ratio = out.epsilon_lc / paper_qubit().nu;
  CHECK(ratio == doctest::Approx(71.66).epsilon(0.01));
  const double g0 = coupling::qubit_coupling(paper_qubit(), eta);
  CHECK(out.g_lc / g0 == doctest::Approx(ratio).epsilon(1e-12));
}

TEST_CASE("qubit splitting angle and magnitude") {
  QubitParams q = paper_qubit();
  auto s = coupling::qubit_splitting(q);
  CHECK(s.alpha == doctest::Approx(std::numbers::pi / 4.0));
  CHECK(s.omega_s == doctest::Approx(std::sqrt(2.0) * q.tunneling));
  CHECK(s.omega_s / constants::two_pi ==
        doctest::Approx(1.414214e10).epsilon(1e-6));

  q.bias = 0.0;
  s = coupling::qubit_splitting(q);
  CHECK(s.alpha == doctest::Approx(std::numbers::pi / 2.0));
  CHECK(s.omega_s == doctest::Approx(q.tunneling));

  // alpha is scale-invariant.
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 20; ++i) {
    QubitParams a = paper_qubit();
    a.bias = u(rng) * 1e9;
    a.tunneling = u(rng) * 1e9;
    QubitParams b = a;
    const double k = u(rng);
    b.bias *= k;
    b.tunneling *= k;
    CHECK(coupling::qubit_splitting(a).alpha ==
          doctest::Approx(coupling::qubit_splitting(b).alpha).epsilon(1e-12));
  }
}

TEST_CASE("derived decoherence rates from T1 and T2") {
  const auto q = paper_qubit();
  CHECK(q.gamma0() == doctest::Approx(1e5));
  CHECK(q.gamma0() / constants::two_pi == doctest::Approx(16e3).epsilon(0.02));
  CHECK(q.gamma_phi() == doctest::Approx(0.5 * q.gamma0()).epsilon(1e-12));
}

TEST_CASE("pickup validity flag") {
  SphereSpec sphere{2e-6, lead()};
  CHECK(coupling::check_pickup_validity({24.5e-6, 17.5e-6}, sphere).pass);
  CHECK_FALSE(coupling::check_pickup_validity({5e-6, 17.5e-6}, sphere).pass);
}
