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

#ifndef MAGMECH_CONFIG_HPP_
#define MAGMECH_CONFIG_HPP_

#include <optional>
#include <string>

#include "magmech/budget.hpp"
#include "magmech/coupling.hpp"
#include "magmech/frames.hpp"
#include "magmech/trap.hpp"

namespace magmech {

// Drive block: either explicit amplitude/frequency or a target dressed
// mixing angle that resolve_resonance turns into drive parameters.
struct DriveConfig {
  std::optional<double> target_beta;       // rad
  std::optional<DriveParams> params;       // rad/s
};

struct BetaGridConfig {
  double start = 0.01;  // rad
  double stop = 1.55;   // rad
  int count = 78;

  std::vector<double> points() const;
};

struct CoolRunConfig {
  double initial_phonons = 2.0;
  // Trajectory length in units of the cooling time 1/Gamma.
  double duration_rate_multiples = 3.0;
  int samples = 121;
};

// samples is forced odd so that the collapse time t* = pi/omega_t lands
// exactly on a grid point of [0, 2 t*].
struct SuperposeRunConfig {
  int samples = 401;
  bool master_equation = true;
  bool include_qubit_decoherence = true;
};

struct EvolveRunConfig {
  int initial_fock = 0;
  bool include_dissipation = true;
  double duration = 1e-4;  // s
  int samples = 101;
};

struct SimulationConfig {
  int fock_dim = 20;
  double step_safety = 0.05;
  double squeeze_ratio = 1.0;  // sigma / x_zp for the protocol
  BetaGridConfig beta_grid;
  CoolRunConfig cool;
  SuperposeRunConfig superpose;
  EvolveRunConfig evolve;
};

// Fully validated scenario, everything in SI / angular units.
struct ScenarioConfig {
  MaterialProperties material;
  SphereSpec sphere;
  TrapGeometry trap;
  PickupCoil pickup;
  QubitParams qubit;
  std::optional<LCParams> lc;
  std::optional<DriveConfig> drive;
  NoiseSpectra noise;
  SimulationConfig simulation;
};

// Parses and validates a scenario file. Parse problems raise ParseError;
// invariant violations raise ValidationError listing every violation.
ScenarioConfig load_config(const std::string& path);

// Same, but from an in-memory JSON document (used by tests).
ScenarioConfig parse_config(const std::string& text);

}  // namespace magmech

#endif  // MAGMECH_CONFIG_HPP_
