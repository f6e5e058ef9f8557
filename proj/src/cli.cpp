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

#include "magmech/cli.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>

#include "magmech/constants.hpp"
#include "magmech/error.hpp"
#include "magmech/frames.hpp"
#include "magmech/lindblad.hpp"
#include "magmech/report.hpp"

namespace magmech::cli {

namespace {

std::vector<double> linspace(double start, double stop, int count) {
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

std::string out_path(const RunOptions& opt, const std::string& name) {
  std::filesystem::create_directories(opt.out_dir);
  return (std::filesystem::path(opt.out_dir) / name).string();
}

int effective_fock_dim(const ScenarioConfig& cfg, const RunOptions& opt) {
  const int dim =
      opt.fock_dim_override > 0 ? opt.fock_dim_override
                                : cfg.simulation.fock_dim;
  if (dim < 2) {
    throw ValidationError("fock_dim must be at least 2");
  }
  return dim;
}

double hz(double angular) { return angular / constants::two_pi; }

void print_flags(const trap::ValidityReport& validity, std::ostream& log) {
  for (const auto& f : validity.flags) {
    log << "  [" << (f.pass ? "ok" : "FAIL") << "] " << f.name
        << "  margin " << sci(f.margin) << "\n";
  }
}

}  // namespace

DesignReport compute_design(const ScenarioConfig& cfg) {
  DesignReport d;
  d.omega_t = trap::trap_frequency(cfg.trap, cfg.material);
  d.omega_perp = trap::transverse_frequency(d.omega_t);
  d.r_max = trap::max_radius(d.omega_t, cfg.material);
  d.mass = cfg.sphere.mass();
  d.x_zp = coupling::zero_point_motion(d.mass, d.omega_t);
  d.flux_derivative = coupling::flux_derivative(cfg.trap, cfg.pickup,
                                                cfg.sphere);
  d.eta = coupling::eta(d.x_zp, d.flux_derivative);
  d.g0 = coupling::qubit_coupling(cfg.qubit, d.eta);
  if (cfg.lc) d.lc = coupling::lc_coupling(*cfg.lc, d.eta);
  const auto split = coupling::qubit_splitting(cfg.qubit);
  d.omega_s = split.omega_s;
  d.alpha = split.alpha;
  d.gamma0 = cfg.qubit.gamma0();
  d.gamma_phi = cfg.qubit.gamma_phi();
  d.validity = trap::check_meissner_validity(cfg.sphere, cfg.trap, d.omega_t);
  d.validity.flags.push_back(
      coupling::check_pickup_validity(cfg.pickup, cfg.sphere));
  return d;
}

DriveParams resolve_drive(const ScenarioConfig& cfg, double omega_t,
                          const char* subcommand) {
  if (!cfg.drive) {
    throw ValidationError(std::string("drive: block required by the ") +
                          subcommand + " subcommand");
  }
  if (cfg.drive->target_beta) {
    return frames::resolve_resonance(cfg.qubit, omega_t,
                                     *cfg.drive->target_beta);
  }
  return *cfg.drive->params;
}

int cmd_design(const ScenarioConfig& cfg, const RunOptions& opt,
               std::ostream& log) {
  const DesignReport d = compute_design(cfg);

  CsvTable table({"quantity", "value", "unit"});
  auto row = [&table](const std::string& name, double value,
                      const std::string& unit) {
    table.add_text_row({name, sci(value), unit});
  };
  row("omega_t", d.omega_t, "rad/s");
  row("omega_t_over_2pi", hz(d.omega_t), "Hz");
  row("omega_perp", d.omega_perp, "rad/s");
  row("r_max", d.r_max, "m");
  row("mass", d.mass, "kg");
  row("x_zp", d.x_zp, "m");
  row("flux_derivative", d.flux_derivative, "Wb/m");
  row("eta", d.eta, "1");
  row("g0", d.g0, "rad/s");
  row("g0_over_2pi", hz(d.g0), "Hz");
  if (d.lc) {
    row("omega_lc", d.lc->omega_lc, "rad/s");
    row("flux_zp", d.lc->flux_zp, "Wb");
    row("epsilon_lc", d.lc->epsilon_lc, "rad/s");
    row("g_lc", d.lc->g_lc, "rad/s");
    row("g_lc_over_2pi", hz(d.lc->g_lc), "Hz");
  }
  row("omega_s", d.omega_s, "rad/s");
  row("alpha", d.alpha, "rad");
  row("gamma0", d.gamma0, "1/s");
  row("gamma0_over_2pi", hz(d.gamma0), "Hz");
  row("gamma_phi", d.gamma_phi, "1/s");
  table.write(out_path(opt, "design.csv"));

  CsvTable flags({"flag", "pass", "margin"});
  for (const auto& f : d.validity.flags) {
    flags.add_text_row({f.name, f.pass ? "1" : "0", sci(f.margin)});
  }
  flags.write(out_path(opt, "design_flags.csv"));

  log << "derived parameters (" << cfg.material.name << " sphere)\n";
  log << "  omega_t / 2pi = " << sci(hz(d.omega_t)) << " Hz\n";
  log << "  omega_perp / 2pi = " << sci(hz(d.omega_perp)) << " Hz\n";
  log << "  R_max = " << sci(d.r_max) << " m\n";
  log << "  M = " << sci(d.mass) << " kg\n";
  log << "  x_zp = " << sci(d.x_zp) << " m\n";
  log << "  dPhi/dx = " << sci(d.flux_derivative) << " Wb/m\n";
  log << "  eta = " << sci(d.eta) << "\n";
  log << "  g0 / 2pi = " << sci(hz(d.g0)) << " Hz\n";
  if (d.lc) log << "  g_lc / 2pi = " << sci(hz(d.lc->g_lc)) << " Hz\n";
  log << "  omega_s / 2pi = " << sci(hz(d.omega_s)) << " Hz\n";
  log << "  alpha = " << sci(d.alpha) << " rad\n";
  log << "  Gamma0 / 2pi = " << sci(hz(d.gamma0)) << " Hz\n";
  log << "  Gamma_phi / Gamma0 = " << sci(d.gamma_phi / d.gamma0) << "\n";
  log << "validity flags\n";
  print_flags(d.validity, log);

  return d.validity.all_pass()
             ? static_cast<int>(ExitCode::ok)
             : static_cast<int>(ExitCode::physics_flag_failure);
}

int cmd_cool(const ScenarioConfig& cfg, const RunOptions& opt,
             std::ostream& log) {
  const DesignReport d = compute_design(cfg);
  const DriveParams drive = resolve_drive(cfg, d.omega_t, "cool");
  const auto frame = frames::effective_frame(cfg.qubit, drive, d.omega_t,
                                             d.g0);
  const auto coeffs = cooling::heating_cooling_coeffs(
      frame.g_eff, frame.gamma_phi_star, frame.gamma_up, frame.gamma_down);
  const double rate = cooling::cooling_rate(coeffs);
  const auto external = budget::budget_report(
      cfg.noise, cfg.sphere.radius, cfg.material.density, d.omega_t);
  const double n_ss_ideal = cooling::steady_phonons(coeffs.a_plus, rate, 0.0);
  const double n_ss = cooling::steady_phonons(coeffs.a_plus, rate,
                                              external.gamma_ext);

  const auto& run = cfg.simulation.cool;
  const double duration = run.duration_rate_multiples / rate;
  const auto times = linspace(0.0, duration, run.samples);
  const auto traj = cooling::phonon_trajectory(
      run.initial_phonons, coeffs.a_plus, rate, external.gamma_ext, times);

  CsvTable table({"t_s", "phonons"});
  for (std::size_t i = 0; i < times.size(); ++i) {
    table.add_row({times[i], traj[i]});
  }
  table.write(out_path(opt, "cool.csv"));

  log << "dressed-frame cooling\n";
  log << "  beta = " << sci(frame.beta) << " rad, g_eff = "
      << sci(frame.g_eff) << " rad/s\n";
  log << "  Gamma_down = " << sci(frame.gamma_down) << " 1/s, Gamma_up = "
      << sci(frame.gamma_up) << " 1/s, Gamma_phi* = "
      << sci(frame.gamma_phi_star) << " 1/s\n";
  log << "  A+ = " << sci(coeffs.a_plus) << " 1/s, A- = "
      << sci(coeffs.a_minus) << " 1/s\n";
  log << "  cooling rate Gamma = " << sci(rate) << " 1/s\n";
  log << "  Gamma_ext (trap noise) = " << sci(external.gamma_ext) << " 1/s\n";
  log << "  n_ss = " << sci(n_ss) << " (ideal " << sci(n_ss_ideal) << ")\n";
  log << "rotating-wave checks\n";
  for (const auto& f : frame.rwa_flags) {
    const char* status = f.status == RwaStatus::pass      ? "ok"
                         : f.status == RwaStatus::marginal ? "marginal"
                                                           : "FAIL";
    log << "  [" << status << "] " << f.name << "  ratio "
        << sci(f.ratio) << "\n";
  }
  return static_cast<int>(ExitCode::ok);
}

int cmd_sweep_beta(const ScenarioConfig& cfg, const RunOptions& opt,
                   std::ostream& log) {
  const DesignReport d = compute_design(cfg);
  const std::vector<double> ratios{0.0, 0.1, 1.0};
  const auto rows = cooling::beta_sweep(
      d.gamma0, ratios, cfg.simulation.beta_grid.points(), d.g0, d.alpha,
      opt.threads);

  CsvTable table({"beta_rad", "gamma_phi_over_gamma0", "g_eff_rad_s",
                  "a_plus_per_s", "a_minus_per_s", "cooling_rate_per_s",
                  "n_ss", "rate_norm_caption", "rate_norm_const"});
  for (const auto& r : rows) {
    table.add_row({r.beta, r.gamma_phi_ratio, r.g_eff, r.a_plus, r.a_minus,
                   r.rate, r.n_ss, r.rate_norm_caption, r.rate_norm_const});
  }
  table.write(out_path(opt, "sweep_beta.csv"));

  log << "beta sweep: " << rows.size() << " rows over "
      << cfg.simulation.beta_grid.count << " beta points and ratios {0, "
      << "0.1, 1}\n";
  return static_cast<int>(ExitCode::ok);
}

int cmd_superpose(const ScenarioConfig& cfg, const RunOptions& opt,
                  std::ostream& log) {
  const DesignReport d = compute_design(cfg);
  const int fock_dim = effective_fock_dim(cfg, opt);
  const auto& run = cfg.simulation.superpose;

  ProtocolParams params;
  params.omega_t = d.omega_t;
  params.chi = 2.0 * d.g0 * std::cos(d.alpha) / d.omega_t;
  params.sigma_ratio = cfg.simulation.squeeze_ratio;
  if (run.include_qubit_decoherence) {
    params.t1 = cfg.qubit.t1;
    params.t2 = cfg.qubit.t2;
  }
  const auto timing = superposition::collapse_revival_times(d.omega_t);
  int samples = run.samples;
  if (samples % 2 == 0) ++samples;  // keep t* on the grid
  params.times = linspace(0.0, timing.t_revival, samples);

  const auto ideal = superposition::gaussian_protocol(params);

  std::optional<ProtocolTrace> me;
  if (run.master_equation) {
    me = superposition::me_protocol(params, fock_dim);
  }

  std::vector<std::string> header{"t_s", "overlap_ideal", "purity_ideal",
                                  "pos_up_xzp", "pos_down_xzp"};
  if (me) {
    header.push_back("overlap_me");
    header.push_back("purity_me");
  }
  CsvTable table(header);
  for (std::size_t i = 0; i < ideal.points.size(); ++i) {
    const auto& p = ideal.points[i];
    std::vector<double> row{p.t, p.overlap, p.purity, p.pos_up, p.pos_down};
    if (me) {
      row.push_back(me->points[i].overlap);
      row.push_back(me->points[i].purity);
    }
    table.add_row(row);
  }
  table.write(out_path(opt, "superpose.csv"));

  const double l_s = superposition::superposition_size(params.chi, d.x_zp);
  const auto squeeze = superposition::required_squeezing(
      params.chi, std::exp(-1.0));
  log << "spin-dependent displacement protocol\n";
  log << "  chi = " << sci(params.chi) << ", l_s = " << sci(l_s) << " m ("
      << sci(l_s / d.x_zp) << " x_zp)\n";
  log << "  sigma/x_zp = " << sci(params.sigma_ratio)
      << ", ideal overlap at t* = "
      << sci(superposition::branch_overlap(l_s, params.sigma_ratio * d.x_zp))
      << "\n";
  log << "  distinguishable branches need sigma/x_zp < "
      << sci(squeeze.sigma_hard_over_xzp) << "\n";
  log << "  t* = " << sci(timing.t_star) << " s, revival at "
      << sci(timing.t_revival) << " s\n";
  const double t2 = params.t2;
  if (std::isfinite(t2)) {
    const bool ok = timing.t_revival < 0.1 * t2;
    log << "  [" << (ok ? "ok" : "FLAG") << "] 2 t* = "
        << sci(timing.t_revival) << " s vs T2 = " << sci(t2)
        << " s (needs 2 t* << T2)\n";
  }
  if (me) {
    log << "  master-equation trace at fock_dim = " << fock_dim
        << ", step = " << sci(me->stats.step) << " s\n";
  }
  return static_cast<int>(ExitCode::ok);
}

int cmd_budget(const ScenarioConfig& cfg, const RunOptions& opt,
               std::ostream& log) {
  const DesignReport d = compute_design(cfg);
  const auto b = budget::budget_report(cfg.noise, cfg.sphere.radius,
                                       cfg.material.density, d.omega_t);

  CsvTable table({"quantity", "value", "unit"});
  table.add_text_row({"gamma_air", sci(b.gas.gamma_air), "1/s"});
  table.add_text_row({"q_air", sci(b.gas.q_air), "1"});
  table.add_text_row({"gas_mean_speed", sci(b.gas.mean_speed), "m/s"});
  table.add_text_row({"gamma_omega", sci(b.gamma_omega), "1/s"});
  table.add_text_row({"gamma_x", sci(b.gamma_x), "1/s"});
  table.add_text_row({"gamma_x_hz_reading", sci(b.gamma_x_hz_reading),
                      "1/s"});
  table.add_text_row({"gamma_ext", sci(b.gamma_ext), "1/s"});
  table.write(out_path(opt, "budget.csv"));

  log << "decoherence budget\n";
  log << "  gamma_air = " << sci(b.gas.gamma_air) << " 1/s, Q_air = "
      << sci(b.gas.q_air) << "\n";
  log << "  Gamma_omega = " << sci(b.gamma_omega) << " 1/s\n";
  log << "  Gamma_x = " << sci(b.gamma_x) << " 1/s (angular reading), "
      << sci(b.gamma_x_hz_reading) << " 1/s (plain-frequency reading)\n";
  log << "  Gamma_ext = " << sci(b.gamma_ext) << " 1/s\n";
  log << "notes\n";
  for (const auto& note : b.notes) log << "  - " << note << "\n";
  return static_cast<int>(ExitCode::ok);
}

int cmd_evolve(const ScenarioConfig& cfg, const RunOptions& opt,
               std::ostream& log) {
  const DesignReport d = compute_design(cfg);
  const int fock_dim = effective_fock_dim(cfg, opt);
  const DriveParams drive = resolve_drive(cfg, d.omega_t, "evolve");
  const auto frame = frames::effective_frame(cfg.qubit, drive, d.omega_t,
                                             d.g0);
  const auto& run = cfg.simulation.evolve;

  LindbladModel model;
  model.hamiltonian = frames::build_jc_effective(frame.g_eff, fock_dim);
  if (run.include_dissipation) {
    const Matrix id_fock = Matrix::identity(fock_dim);
    model.channels.push_back(
        {frame.gamma_down, kron(frames::sigma_minus(), id_fock)});
    model.channels.push_back(
        {frame.gamma_up, kron(frames::sigma_plus(), id_fock)});
    model.channels.push_back(
        {frame.gamma_phi_star,
         Cplx{1.0 / std::sqrt(2.0), 0.0} * kron(frames::sigma_z(), id_fock)});
  }

  const int dim = 2 * fock_dim;
  Matrix rho0(dim, dim);
  // Qubit down, oscillator in the configured Fock level.
  rho0(fock_dim + run.initial_fock, fock_dim + run.initial_fock) = 1.0;

  EvolveOptions options;
  options.step.safety = cfg.simulation.step_safety;
  options.guard_fock_dim = fock_dim;
  const auto times = linspace(0.0, run.duration, run.samples);
  const auto result = lindblad::evolve(model, rho0, times, options);

  const auto ops = lindblad::fock_operators(fock_dim);
  const Matrix number_full = kron(Matrix::identity(2), ops.number);
  const Matrix sigma_z_full = kron(frames::sigma_z(),
                                   Matrix::identity(fock_dim));

  CsvTable table({"t_s", "phonons", "sigma_z", "qubit_purity"});
  for (const auto& sample : result.samples) {
    const auto reduced = lindblad::partial_trace_qubit(sample.rho);
    table.add_row({sample.t,
                   lindblad::expectation(sample.rho, number_full).real(),
                   lindblad::expectation(sample.rho, sigma_z_full).real(),
                   reduced.purity});
  }
  table.write(out_path(opt, "evolve.csv"));

  log << "master-equation run\n";
  log << "  g_eff = " << sci(frame.g_eff) << " rad/s, fock_dim = "
      << fock_dim << ", steps = " << result.stats.steps << ", h = "
      << sci(result.stats.step) << " s\n";
  log << "  max trace drift = " << sci(result.stats.max_trace_drift)
      << ", max hermiticity defect = "
      << sci(result.stats.max_hermiticity_defect) << "\n";
  log << "  min eigenvalue = " << sci(result.stats.min_eigenvalue)
      << ", top-level population = "
      << sci(result.stats.max_top_level_population) << "\n";
  if (result.stats.truncation_flag) {
    log << "  [FLAG] truncation guard tripped; increase fock_dim\n";
  }
  return static_cast<int>(ExitCode::ok);
}

}  // namespace magmech::cli
