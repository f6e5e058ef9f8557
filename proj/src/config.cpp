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

#include "magmech/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "magmech/constants.hpp"
#include "magmech/error.hpp"

namespace magmech {

namespace {

using nlohmann::json;

// Walks one JSON object with a declared key set, collecting violations
// instead of stopping at the first problem.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path,
               std::vector<std::string>& violations)
      : node_(node), path_(std::move(path)), violations_(violations) {
    if (!node_.is_object()) {
      violations_.push_back(path_ + ": expected an object");
      valid_ = false;
    }
  }

  bool valid() const { return valid_; }

  bool has(const std::string& key) {
    if (!valid_) return false;
    seen_.insert(key);
    return node_.contains(key);
  }

  // Number with a unit conversion applied.
  double number(const std::string& key, double scale, bool required,
                double fallback = 0.0) {
    if (!valid_) return fallback;
    seen_.insert(key);
    if (!node_.contains(key)) {
      if (required) {
        violations_.push_back(path_ + "." + key + ": missing");
      }
      return fallback;
    }
    const json& v = node_.at(key);
    if (!v.is_number()) {
      violations_.push_back(path_ + "." + key + ": expected a number");
      return fallback;
    }
    return v.get<double>() * scale;
  }

  int integer(const std::string& key, bool required, int fallback) {
    if (!valid_) return fallback;
    seen_.insert(key);
    if (!node_.contains(key)) {
      if (required) violations_.push_back(path_ + "." + key + ": missing");
      return fallback;
    }
    const json& v = node_.at(key);
    if (!v.is_number_integer()) {
      violations_.push_back(path_ + "." + key + ": expected an integer");
      return fallback;
    }
    return v.get<int>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!valid_) return fallback;
    seen_.insert(key);
    if (!node_.contains(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_boolean()) {
      violations_.push_back(path_ + "." + key + ": expected a boolean");
      return fallback;
    }
    return v.get<bool>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    if (!valid_) return fallback;
    seen_.insert(key);
    if (!node_.contains(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_string()) {
      violations_.push_back(path_ + "." + key + ": expected a string");
      return fallback;
    }
    return v.get<std::string>();
  }

  const json* child(const std::string& key) {
    if (!valid_) return nullptr;
    seen_.insert(key);
    return node_.contains(key) ? &node_.at(key) : nullptr;
  }

  // Rejects keys that were never declared.
  void finish() {
    if (!valid_) return;
    for (const auto& item : node_.items()) {
      if (!seen_.count(item.key())) {
        violations_.push_back(path_ + "." + item.key() + ": unknown key");
      }
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::vector<std::string>& violations_;
  std::set<std::string> seen_;
  bool valid_ = true;
};

void require_positive(double value, const std::string& field,
                      std::vector<std::string>& violations) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    violations.push_back(field + ": must be strictly positive");
  }
}

void require_non_negative(double value, const std::string& field,
                          std::vector<std::string>& violations) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    violations.push_back(field + ": must be non-negative");
  }
}

constexpr double kUm = 1e-6;
constexpr double kNm = 1e-9;
constexpr double kUs = 1e-6;
constexpr double kHzToAngular = constants::two_pi;

ScenarioConfig parse_document(const json& doc) {
  std::vector<std::string> violations;
  ScenarioConfig cfg;

  ObjectReader root(doc, "config", violations);
  if (!root.valid()) {
    throw ValidationError("config: top level must be a JSON object");
  }

  if (const json* node = root.child("material")) {
    ObjectReader r(*node, "material", violations);
    cfg.material.name = r.text("name", "");
    cfg.material.density = r.number("density_kg_m3", 1.0, true);
    cfg.material.penetration_depth = r.number("penetration_depth_nm", kNm, true);
    cfg.material.coherence_length = r.number("coherence_length_nm", kNm, true);
    cfg.material.critical_temperature =
        r.number("critical_temperature_k", 1.0, true);
    cfg.material.critical_field = r.number("critical_field_t", 1.0, true);
    r.finish();
    require_positive(cfg.material.density, "material.density_kg_m3", violations);
    require_positive(cfg.material.penetration_depth,
                     "material.penetration_depth_nm", violations);
    require_positive(cfg.material.coherence_length,
                     "material.coherence_length_nm", violations);
    require_positive(cfg.material.critical_temperature,
                     "material.critical_temperature_k", violations);
    require_positive(cfg.material.critical_field, "material.critical_field_t",
                     violations);
  } else {
    violations.push_back("material: missing");
  }

  if (const json* node = root.child("sphere")) {
    ObjectReader r(*node, "sphere", violations);
    cfg.sphere.radius = r.number("radius_um", kUm, true);
    r.finish();
    require_positive(cfg.sphere.radius, "sphere.radius_um", violations);
  } else {
    violations.push_back("sphere: missing");
  }
  cfg.sphere.material = cfg.material;

  if (const json* node = root.child("trap")) {
    ObjectReader r(*node, "trap", violations);
    cfg.trap.coil_radius = r.number("coil_radius_um", kUm, true);
    cfg.trap.current = r.number("current_a", 1.0, true);
    r.finish();
    require_positive(cfg.trap.coil_radius, "trap.coil_radius_um", violations);
    require_positive(cfg.trap.current, "trap.current_a", violations);
  } else {
    violations.push_back("trap: missing");
  }

  if (const json* node = root.child("pickup")) {
    ObjectReader r(*node, "pickup", violations);
    cfg.pickup.radius = r.number("radius_um", kUm, true);
    cfg.pickup.axial_offset = r.number("axial_offset_um", kUm, true);
    r.finish();
    require_positive(cfg.pickup.radius, "pickup.radius_um", violations);
    require_non_negative(cfg.pickup.axial_offset, "pickup.axial_offset_um",
                         violations);
  } else {
    violations.push_back("pickup: missing");
  }

  if (const json* node = root.child("qubit")) {
    ObjectReader r(*node, "qubit", violations);
    const bool has_nu = r.has("nu_hz");
    const bool has_ip = r.has("persistent_current_a");
    if (has_nu == has_ip) {
      violations.push_back(
          "qubit: give exactly one of nu_hz or persistent_current_a");
    }
    if (has_nu) {
      cfg.qubit.nu = r.number("nu_hz", kHzToAngular, false);
    } else if (has_ip) {
      // nu = 2 Phi0 Ip as an angular rate.
      const double ip = r.number("persistent_current_a", 1.0, false);
      cfg.qubit.nu =
          2.0 * constants::flux_quantum * ip / constants::hbar;
    }
    cfg.qubit.tunneling = r.number("tunneling_hz", kHzToAngular, true);
    cfg.qubit.bias = r.number("bias_hz", kHzToAngular, true);
    cfg.qubit.t1 = r.number("t1_us", kUs, true);
    cfg.qubit.t2 = r.number("t2_us", kUs, true);
    r.finish();
    require_positive(cfg.qubit.nu, "qubit.nu", violations);
    require_positive(cfg.qubit.tunneling, "qubit.tunneling_hz", violations);
    require_non_negative(cfg.qubit.bias, "qubit.bias_hz", violations);
    require_positive(cfg.qubit.t1, "qubit.t1_us", violations);
    require_positive(cfg.qubit.t2, "qubit.t2_us", violations);
    if (cfg.qubit.t1 > 0.0 && cfg.qubit.t2 > 0.0 &&
        cfg.qubit.gamma_phi() < 0.0) {
      violations.push_back(
          "qubit: T2 > 2 T1 implies a negative pure-dephasing rate");
    }
  } else {
    violations.push_back("qubit: missing");
  }

  if (const json* node = root.child("lc")) {
    ObjectReader r(*node, "lc", violations);
    LCParams lc;
    lc.inductance = r.number("inductance_nh", 1e-9, true);
    lc.capacitance = r.number("capacitance_pf", 1e-12, true);
    r.finish();
    require_positive(lc.inductance, "lc.inductance_nh", violations);
    require_positive(lc.capacitance, "lc.capacitance_pf", violations);
    cfg.lc = lc;
  }

  if (const json* node = root.child("drive")) {
    ObjectReader r(*node, "drive", violations);
    DriveConfig drive;
    const bool has_beta = r.has("target_beta_rad");
    const bool has_amp = r.has("amplitude_hz") || r.has("frequency_hz");
    if (has_beta && has_amp) {
      violations.push_back(
          "drive: give either target_beta_rad or amplitude_hz+frequency_hz, "
          "not both");
    }
    if (has_beta) {
      const double beta = r.number("target_beta_rad", 1.0, false);
      if (!(beta > 0.0 && beta < std::numbers::pi / 2.0)) {
        violations.push_back(
            "drive.target_beta_rad: must lie strictly inside (0, pi/2)");
      }
      drive.target_beta = beta;
    } else {
      DriveParams params;
      params.amplitude = r.number("amplitude_hz", kHzToAngular, true);
      params.frequency = r.number("frequency_hz", kHzToAngular, true);
      require_non_negative(params.amplitude, "drive.amplitude_hz", violations);
      require_positive(params.frequency, "drive.frequency_hz", violations);
      drive.params = params;
    }
    r.finish();
    cfg.drive = drive;
  }

  // Paper-nominal cryogenic helium environment unless overridden.
  cfg.noise.pressure = 1e-10 * constants::pascal_per_torr;
  cfg.noise.gas_temperature = 4.2;
  cfg.noise.gas_molecular_mass = 4.002602 * constants::atomic_mass_unit;
  cfg.noise.sqrt_s_omega = 1e-5;
  cfg.noise.sqrt_s_x_over_xzp = 1e-4;
  if (const json* node = root.child("noise")) {
    ObjectReader r(*node, "noise", violations);
    cfg.noise.pressure = r.number("pressure_torr", constants::pascal_per_torr,
                                  false, cfg.noise.pressure);
    cfg.noise.gas_temperature =
        r.number("gas_temperature_k", 1.0, false, cfg.noise.gas_temperature);
    cfg.noise.gas_molecular_mass =
        r.number("gas_molar_mass_amu", constants::atomic_mass_unit, false,
                 cfg.noise.gas_molecular_mass);
    cfg.noise.sqrt_s_omega = r.number("sqrt_s_omega_per_sqrt_hz", 1.0, false,
                                      cfg.noise.sqrt_s_omega);
    cfg.noise.sqrt_s_x_over_xzp =
        r.number("sqrt_s_x_over_xzp_per_sqrt_hz", 1.0, false,
                 cfg.noise.sqrt_s_x_over_xzp);
    r.finish();
    require_non_negative(cfg.noise.pressure, "noise.pressure_torr", violations);
    require_positive(cfg.noise.gas_temperature, "noise.gas_temperature_k",
                     violations);
    require_positive(cfg.noise.gas_molecular_mass, "noise.gas_molar_mass_amu",
                     violations);
    require_non_negative(cfg.noise.sqrt_s_omega,
                         "noise.sqrt_s_omega_per_sqrt_hz", violations);
    require_non_negative(cfg.noise.sqrt_s_x_over_xzp,
                         "noise.sqrt_s_x_over_xzp_per_sqrt_hz", violations);
  }

  if (const json* node = root.child("simulation")) {
    ObjectReader r(*node, "simulation", violations);
    auto& sim = cfg.simulation;
    sim.fock_dim = r.integer("fock_dim", false, sim.fock_dim);
    sim.step_safety = r.number("step_safety", 1.0, false, sim.step_safety);
    sim.squeeze_ratio =
        r.number("squeeze_ratio", 1.0, false, sim.squeeze_ratio);
    if (const json* grid = r.child("beta_grid")) {
      ObjectReader g(*grid, "simulation.beta_grid", violations);
      sim.beta_grid.start =
          g.number("start_rad", 1.0, false, sim.beta_grid.start);
      sim.beta_grid.stop = g.number("stop_rad", 1.0, false, sim.beta_grid.stop);
      sim.beta_grid.count = g.integer("count", false, sim.beta_grid.count);
      g.finish();
    }
    if (const json* cool = r.child("cool")) {
      ObjectReader c(*cool, "simulation.cool", violations);
      sim.cool.initial_phonons =
          c.number("initial_phonons", 1.0, false, sim.cool.initial_phonons);
      sim.cool.duration_rate_multiples =
          c.number("duration_rate_multiples", 1.0, false,
                   sim.cool.duration_rate_multiples);
      sim.cool.samples = c.integer("samples", false, sim.cool.samples);
      c.finish();
    }
    if (const json* sup = r.child("superpose")) {
      ObjectReader s(*sup, "simulation.superpose", violations);
      sim.superpose.samples =
          s.integer("samples", false, sim.superpose.samples);
      sim.superpose.master_equation =
          s.boolean("master_equation", sim.superpose.master_equation);
      sim.superpose.include_qubit_decoherence =
          s.boolean("include_qubit_decoherence",
                    sim.superpose.include_qubit_decoherence);
      s.finish();
    }
    if (const json* ev = r.child("evolve")) {
      ObjectReader e(*ev, "simulation.evolve", violations);
      sim.evolve.initial_fock =
          e.integer("initial_fock", false, sim.evolve.initial_fock);
      sim.evolve.include_dissipation = e.boolean(
          "include_dissipation", sim.evolve.include_dissipation);
      sim.evolve.duration =
          e.number("duration_s", 1.0, false, sim.evolve.duration);
      sim.evolve.samples = e.integer("samples", false, sim.evolve.samples);
      e.finish();
    }
    r.finish();

    if (sim.fock_dim < 2) {
      violations.push_back("simulation.fock_dim: must be at least 2");
    }
    if (!(sim.step_safety > 0.0 && sim.step_safety <= 0.5)) {
      violations.push_back("simulation.step_safety: must lie in (0, 0.5]");
    }
    require_positive(sim.squeeze_ratio, "simulation.squeeze_ratio", violations);
    if (!(sim.beta_grid.start > 0.0 &&
          sim.beta_grid.stop < std::numbers::pi / 2.0 &&
          sim.beta_grid.start <= sim.beta_grid.stop)) {
      violations.push_back(
          "simulation.beta_grid: must satisfy 0 < start <= stop < pi/2");
    }
    if (sim.beta_grid.count < 1) {
      violations.push_back("simulation.beta_grid.count: must be at least 1");
    }
    require_positive(sim.cool.initial_phonons,
                     "simulation.cool.initial_phonons", violations);
    require_positive(sim.cool.duration_rate_multiples,
                     "simulation.cool.duration_rate_multiples", violations);
    if (sim.cool.samples < 2) {
      violations.push_back("simulation.cool.samples: must be at least 2");
    }
    if (sim.superpose.samples < 2) {
      violations.push_back("simulation.superpose.samples: must be at least 2");
    }
    if (sim.evolve.initial_fock < 0 ||
        sim.evolve.initial_fock >= sim.fock_dim) {
      violations.push_back(
          "simulation.evolve.initial_fock: must lie in [0, fock_dim)");
    }
    require_positive(sim.evolve.duration, "simulation.evolve.duration_s",
                     violations);
    if (sim.evolve.samples < 2) {
      violations.push_back("simulation.evolve.samples: must be at least 2");
    }
  }

  root.finish();

  if (!violations.empty()) {
    std::ostringstream os;
    os << "config validation failed (" << violations.size() << " problem"
       << (violations.size() == 1 ? "" : "s") << "):";
    for (const auto& v : violations) os << "\n  - " << v;
    throw ValidationError(os.str());
  }
  return cfg;
}

}  // namespace

std::vector<double> BetaGridConfig::points() const {
  std::vector<double> pts;
  pts.reserve(count);
  if (count == 1) {
    pts.push_back(start);
    return pts;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) pts.push_back(start + i * step);
  return pts;
}

ScenarioConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config parse error: ") + e.what());
  }
  return parse_document(doc);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("config: cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace magmech
