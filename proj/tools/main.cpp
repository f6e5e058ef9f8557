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

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "magmech/cli.hpp"
#include "magmech/error.hpp"

namespace {

using Runner = std::function<int(const magmech::ScenarioConfig&,
                                 const magmech::cli::RunOptions&,
                                 std::ostream&)>;

struct SubcommandSpec {
  const char* name;
  const char* description;
  Runner run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Design and simulation toolkit for a magnetically levitated "
      "superconducting microsphere coupled to a flux qubit"};
  app.require_subcommand(1);
  app.fallthrough(true);  // accept the global flags after the subcommand

  std::string config_path;
  magmech::cli::RunOptions options;
  app.add_option("--config", config_path, "Scenario file (JSON)")
      ->required();
  app.add_option("--out", options.out_dir, "Output directory for CSV files")
      ->capture_default_str();
  app.add_option("--fock-dim", options.fock_dim_override,
                 "Override the configured Fock dimension");
  app.add_option("--threads", options.threads,
                 "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);

  const SubcommandSpec specs[] = {
      {"design", "Derive trap, coupling and qubit parameters",
       magmech::cli::cmd_design},
      {"cool", "Dressed-frame cooling rates and phonon trajectory",
       magmech::cli::cmd_cool},
      {"sweep-beta", "Steady occupation and cooling rate over beta",
       magmech::cli::cmd_sweep_beta},
      {"superpose", "Spin-dependent displacement protocol traces",
       magmech::cli::cmd_superpose},
      {"budget", "Decoherence budget from the noise inputs",
       magmech::cli::cmd_budget},
      {"evolve", "Master-equation run of the dressed resonant model",
       magmech::cli::cmd_evolve},
  };

  const SubcommandSpec* chosen = nullptr;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    sub->callback([&chosen, &spec] { chosen = &spec; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const magmech::ScenarioConfig cfg = magmech::load_config(config_path);
    return chosen->run(cfg, options, std::cout);
  } catch (const magmech::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(magmech::ExitCode::module_error);
  }
}
