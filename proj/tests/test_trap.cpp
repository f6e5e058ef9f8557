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
#include "magmech/trap.hpp"

namespace {

using magmech::MaterialProperties;
using magmech::SphereSpec;
using magmech::TrapGeometry;
namespace trap = magmech::trap;

MaterialProperties lead() {
  return {"Pb", 11360.0, 30.5e-9, 96e-9, 7.2, 0.08};
}

TrapGeometry paper_trap() { return {25e-6, 10.0}; }

}  // namespace

TEST_CASE("paper trap frequency is 2 pi x 28 kHz") {
  const double omega = trap::trap_frequency(paper_trap(), lead());
  CHECK(omega == doctest::Approx(1.766953205491e5).epsilon(1e-9));
  CHECK(omega / magmech::constants::two_pi ==
        doctest::Approx(28e3).epsilon(0.02));
  CHECK(trap::transverse_frequency(omega) == doctest::Approx(0.5 * omega));
}

TEST_CASE("zero current gives no confinement") {
  TrapGeometry geom = paper_trap();
  geom.current = 0.0;
  CHECK_THROWS_AS(trap::trap_frequency(geom, lead()), magmech::ModuleError);
}

TEST_CASE("trap frequency scales as I / l^2") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  const auto mat = lead();
  for (int i = 0; i < 50; ++i) {
    TrapGeometry geom{u(rng) * 1e-5, u(rng) * 10.0};
    const double base = trap::trap_frequency(geom, mat);
    TrapGeometry doubled_current{geom.coil_radius, 2.0 * geom.current};
    CHECK(trap::trap_frequency(doubled_current, mat) ==
          doctest::Approx(2.0 * base).epsilon(1e-12));
    TrapGeometry doubled_radius{2.0 * geom.coil_radius, geom.current};
    CHECK(trap::trap_frequency(doubled_radius, mat) ==
          doctest::Approx(0.25 * base).epsilon(1e-12));
  }
}

TEST_CASE("critical radius: paper value, linearity, invariant product") {
  const auto mat = lead();
  const double omega = trap::trap_frequency(paper_trap(), mat);
  const double r_max = trap::max_radius(omega, mat);
  CHECK(r_max == doctest::Approx(3.7e-6).epsilon(0.03));
  CHECK(r_max == doctest::Approx(3.713615336789e-6).epsilon(1e-9));

  MaterialProperties doubled_bc = mat;
  doubled_bc.critical_field *= 2.0;
  CHECK(trap::max_radius(omega, doubled_bc) ==
        doctest::Approx(2.0 * r_max).epsilon(1e-12));

  // R_max * omega_t depends only on the material.
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  const double product = r_max * omega;
  for (int i = 0; i < 20; ++i) {
    TrapGeometry geom{u(rng) * 1e-5, u(rng) * 10.0};
    const double w = trap::trap_frequency(geom, mat);
    CHECK(trap::max_radius(w, mat) * w ==
          doctest::Approx(product).epsilon(1e-12));
  }
}

TEST_CASE("quadrupole field vanishes at the center and is odd") {
  const auto geom = paper_trap();
  const auto at_center = trap::quadrupole_field({0.0, 0.0, 0.0}, geom);
  CHECK(std::abs(at_center[0]) < 1e-18);
  CHECK(std::abs(at_center[1]) < 1e-18);
  CHECK(std::abs(at_center[2]) < 1e-18);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int i = 0; i < 30; ++i) {
    const std::array<double, 3> p{u(rng) * geom.coil_radius,
                                  u(rng) * geom.coil_radius,
                                  u(rng) * geom.coil_radius};
    const auto forward = trap::quadrupole_field(p, geom);
    const auto mirrored =
        trap::quadrupole_field({-p[0], -p[1], -p[2]}, geom);
    for (int k = 0; k < 3; ++k) {
      CHECK(forward[k] == doctest::Approx(-mirrored[k]).epsilon(1e-10));
    }
  }
}

TEST_CASE("on-axis gradient matches a central finite difference") {
  const auto geom = paper_trap();
  const double h = 1e-5 * geom.coil_radius;
  const auto plus = trap::quadrupole_field({h, 0.0, 0.0}, geom);
  const auto minus = trap::quadrupole_field({-h, 0.0, 0.0}, geom);
  const double numeric_gradient = (plus[0] - minus[0]) / (2.0 * h);

  // Independent axial route: textbook on-axis formula for the two loops.
  auto axial = [&](double x) {
    const double l = geom.coil_radius;
    const double i = geom.current;
    auto one = [&](double x0, double sign) {
      const double dx = x - x0;
      return sign * magmech::constants::mu0 * i * l * l /
             (2.0 * std::pow(l * l + dx * dx, 1.5));
    };
    return one(-0.5 * l, 1.0) + one(0.5 * l, -1.0);
  };
  const double reference = (axial(h) - axial(-h)) / (2.0 * h);
  CHECK(numeric_gradient == doctest::Approx(reference).epsilon(1e-6));
}

TEST_CASE("quadrupole field is divergence-free off the wires") {
  const auto geom = paper_trap();
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  const double h = 1e-5 * geom.coil_radius;
  for (int i = 0; i < 25; ++i) {
    const std::array<double, 3> p{u(rng) * geom.coil_radius,
                                  u(rng) * geom.coil_radius,
                                  u(rng) * geom.coil_radius};
    double div = 0.0;
    double scale = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      auto lo = p, hi = p;
      hi[axis] += h;
      lo[axis] -= h;
      const auto f_hi = trap::quadrupole_field(hi, geom);
      const auto f_lo = trap::quadrupole_field(lo, geom);
      div += (f_hi[axis] - f_lo[axis]) / (2.0 * h);
      scale += std::abs(f_hi[axis] - f_lo[axis]) / (2.0 * h);
    }
    CHECK(std::abs(div) <= 1e-6 * std::max(scale, 1e-30));
  }
}

TEST_CASE("field evaluation on the wire is rejected") {
  const auto geom = paper_trap();
  CHECK_THROWS_AS(trap::quadrupole_field(
                      {0.5 * geom.coil_radius, geom.coil_radius, 0.0}, geom),
                  magmech::ModuleError);
}

TEST_CASE("validity report for the paper scenario") {
  const auto mat = lead();
  const auto geom = paper_trap();
  const double omega = trap::trap_frequency(geom, mat);

  SphereSpec sphere{2e-6, mat};
  CHECK(sphere.mass() == doctest::Approx(3.806772538110e-13).epsilon(1e-9));
  auto report = trap::check_meissner_validity(sphere, geom, omega);
  CHECK(report.all_pass());

  // Boundary: R exactly at R_max fails the strict inequality.
  SphereSpec at_limit{trap::max_radius(omega, mat), mat};
  report = trap::check_meissner_validity(at_limit, geom, omega);
  CHECK_FALSE(report.flags[0].pass);

  // 5 um exceeds the 3.7 um critical radius.
  SphereSpec too_big{5e-6, mat};
  report = trap::check_meissner_validity(too_big, geom, omega);
  CHECK_FALSE(report.flags[0].pass);
  CHECK(report.flags[0].margin < 1.0);
}
