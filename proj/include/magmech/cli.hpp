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

#ifndef MAGMECH_CLI_HPP_
#define MAGMECH_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "magmech/budget.hpp"
#include "magmech/config.hpp"
#include "magmech/cooling.hpp"
#include "magmech/superposition.hpp"

namespace magmech::cli {

// Everything the design table reports, derived from one scenario.
struct DesignReport {
  double omega_t = 0.0;       // rad/s
  double omega_perp = 0.0;    // rad/s
  double r_max = 0.0;         // m
  double mass = 0.0;          // kg
  double x_zp = 0.0;          // m
  double flux_derivative = 0.0;  // Wb/m
  double eta = 0.0;
  double g0 = 0.0;            // rad/s
  std::optional<LCCoupling> lc;
  double omega_s = 0.0;       // rad/s
  double alpha = 0.0;         // rad
  double gamma0 = 0.0;        // 1/s
  double gamma_phi = 0.0;     // 1/s
  trap::ValidityReport validity;  // Meissner flags plus the pick-up flag
};

DesignReport compute_design(const ScenarioConfig& cfg);

// Drive parameters from the config's drive block (resolving a target beta
// through the resonance condition). Throws ValidationError when the block
// is absent.
DriveParams resolve_drive(const ScenarioConfig& cfg, double omega_t,
                          const char* subcommand);

struct RunOptions {
  std::string out_dir = ".";
  int fock_dim_override = 0;  // 0 keeps the config value
  int threads = 1;
};

// Subcommand drivers. Each prints a summary to `log`, writes CSV files
// into out_dir, and returns the process exit code.
int cmd_design(const ScenarioConfig& cfg, const RunOptions& opt,
               std::ostream& log);
int cmd_cool(const ScenarioConfig& cfg, const RunOptions& opt,
             std::ostream& log);
int cmd_sweep_beta(const ScenarioConfig& cfg, const RunOptions& opt,
                   std::ostream& log);
int cmd_superpose(const ScenarioConfig& cfg, const RunOptions& opt,
                  std::ostream& log);
int cmd_budget(const ScenarioConfig& cfg, const RunOptions& opt,
               std::ostream& log);
int cmd_evolve(const ScenarioConfig& cfg, const RunOptions& opt,
               std::ostream& log);

}  // namespace magmech::cli

#endif  // MAGMECH_CLI_HPP_
