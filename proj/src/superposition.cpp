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

#include "magmech/superposition.hpp"

#include <cmath>

#include "magmech/error.hpp"
#include "magmech/frames.hpp"

namespace magmech::superposition {

namespace {

// Phase-space conventions: quadratures q = b + b^dag, p = i(b^dag - b),
// vacuum variance 1 in both. A coherent amplitude alpha sits at
// (q, p) = (2 Re alpha, 2 Im alpha); x/x_zp = q.
struct BranchState {
  double qc = 0.0;  // branch trap center, q units
};

// |<G1|G2>| for pure Gaussians with common covariance S and mean
// difference d: exp(-d^T S^{-1} d / 8).
double gaussian_overlap(double dq, double dp, double sqq, double sqp,
                        double spp) {
  const double det = sqq * spp - sqp * sqp;
  const double quad =
      (spp * dq * dq - 2.0 * sqp * dq * dp + sqq * dp * dp) / det;
  return std::exp(-0.125 * quad);
}

}  // namespace

double superposition_size(double chi, double x_zp) {
  return 4.0 * chi * x_zp;
}

double branch_overlap(double l_s, double sigma) {
  if (sigma <= 0.0) {
    throw ModuleError("superposition: branch width must be positive");
  }
  return std::exp(-l_s * l_s / (8.0 * sigma * sigma));
}

SqueezeRequirement required_squeezing(double chi, double target_overlap) {
  if (!(target_overlap > 0.0 && target_overlap < 1.0)) {
    throw ModuleError("superposition: target overlap must lie in (0, 1)");
  }
  SqueezeRequirement req;
  const double l_s_over_xzp = 4.0 * chi;
  req.sigma_hard_over_xzp = l_s_over_xzp / (2.0 * std::sqrt(2.0));
  req.sigma_max_over_xzp =
      l_s_over_xzp /
      (2.0 * std::sqrt(2.0) * std::sqrt(std::log(1.0 / target_overlap)));
  return req;
}

CollapseRevival collapse_revival_times(double omega_t) {
  if (omega_t <= 0.0) {
    throw ModuleError("superposition: omega_t must be positive");
  }
  const double t_star = std::numbers::pi / omega_t;
  return {t_star, 2.0 * t_star};
}

ProtocolTrace gaussian_protocol(const ProtocolParams& params) {
  if (params.sigma_ratio <= 0.0) {
    throw ModuleError("superposition: sigma must be positive");
  }
  const double chi = params.chi;
  const double w2 = params.sigma_ratio * params.sigma_ratio;
  ProtocolTrace trace;
  trace.points.reserve(params.times.size());
  for (double t : params.times) {
    const double theta = params.omega_t * t;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // Each branch orbits its spin-shifted center +/- chi; both start at the
    // origin of phase space.
    const double qu = chi * (1.0 - c);
    const double pu = chi * s;
    const double dq = 2.0 * qu;
    const double dp = 2.0 * pu;
    // Covariance of the rotated squeezed vacuum, common to both branches;
    // the means and the covariance rotate with the same quadrature map
    // (q, p) -> (q cos + p sin, -q sin + p cos).
    const double sqq = w2 * c * c + s * s / w2;
    const double spp = w2 * s * s + c * c / w2;
    const double sqp = (1.0 / w2 - w2) * s * c;
    ProtocolPoint point;
    point.t = t;
    point.overlap = gaussian_overlap(dq, dp, sqq, sqp, spp);
    point.purity = 0.5 * (1.0 + point.overlap * point.overlap);
    point.pos_up = qu;
    point.pos_down = -qu;
    trace.points.push_back(point);
  }
  return trace;
}

Matrix squeezed_vacuum(int fock_dim, double width_ratio) {
  if (width_ratio <= 0.0) {
    throw ModuleError("superposition: width ratio must be positive");
  }
  const auto ops = lindblad::fock_operators(fock_dim);
  // exp[r(bb - b^dag b^dag)/2] |0> narrows x by e^{-r}.
  const double r = -std::log(width_ratio);
  Matrix gen = mul(ops.lowering, ops.lowering);
  gen -= mul(ops.raising, ops.raising);
  gen *= Cplx{0.5 * r, 0.0};
  const Matrix squeeze = expm_skew_hermitian(gen);
  Matrix state(fock_dim, 1);
  for (int n = 0; n < fock_dim; ++n) state(n, 0) = squeeze(n, 0);
  return state;
}

Matrix translation_operator(int fock_dim, double a) {
  const auto ops = lindblad::fock_operators(fock_dim);
  Matrix gen = ops.raising;
  gen -= ops.lowering;
  gen *= Cplx{0.5 * a, 0.0};
  return expm_skew_hermitian(gen);
}

ProtocolTrace me_protocol(const ProtocolParams& params, int fock_dim) {
  const Matrix osc = squeezed_vacuum(fock_dim, params.sigma_ratio);
  // The initial state must be representable: demand the squeezed vacuum's
  // top two levels stay below the truncation tolerance.
  double top = 0.0;
  for (int n = fock_dim - 2; n < fock_dim; ++n) top += std::norm(osc(n, 0));
  const double tol = DensityTolerances{}.top_level_population;
  if (top > tol) {
    int suggested = fock_dim;
    for (; suggested <= 4096; suggested *= 2) {
      const Matrix trial = squeezed_vacuum(suggested, params.sigma_ratio);
      double trial_top = 0.0;
      for (int n = suggested - 2; n < suggested; ++n) {
        trial_top += std::norm(trial(n, 0));
      }
      if (trial_top <= tol) break;
    }
    throw ModuleError(
        "superposition: squeezed vacuum does not fit the truncation "
        "(top-level population " + std::to_string(top) +
        "); increase the Fock dimension to about " +
        std::to_string(suggested));
  }

  const int dim = 2 * fock_dim;
  Matrix psi(dim, 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int n = 0; n < fock_dim; ++n) {
    psi(n, 0) = inv_sqrt2 * osc(n, 0);
    psi(fock_dim + n, 0) = inv_sqrt2 * osc(n, 0);
  }
  Matrix rho0(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      rho0(i, j) = psi(i, 0) * std::conj(psi(j, 0));
    }
  }

  // Qubit-eigenbasis frame with the splitting term removed (it commutes
  // with everything here and only spins an unobserved qubit phase).
  LindbladModel model;
  const auto ops = lindblad::fock_operators(fock_dim);
  model.hamiltonian = params.omega_t * kron(Matrix::identity(2), ops.number);
  model.hamiltonian +=
      (-params.g()) * kron(frames::sigma_z(), ops.position);
  const Matrix id_fock = Matrix::identity(fock_dim);
  if (std::isfinite(params.t1)) {
    model.channels.push_back(
        {1.0 / params.t1, kron(frames::sigma_minus(), id_fock)});
  }
  if (std::isfinite(params.t2)) {
    const double gamma0 = std::isfinite(params.t1) ? 1.0 / params.t1 : 0.0;
    const double gamma_phi = 1.0 / params.t2 - 0.5 * gamma0;
    if (gamma_phi < 0.0) {
      throw ModuleError("superposition: T2 > 2 T1 is unphysical");
    }
    model.channels.push_back(
        {gamma_phi, Cplx{inv_sqrt2, 0.0} * kron(frames::sigma_z(), id_fock)});
  }

  EvolveOptions options;
  options.guard_fock_dim = fock_dim;
  auto evolved = lindblad::evolve(model, rho0, params.times, options);
  if (evolved.stats.truncation_flag) {
    throw ModuleError(
        "superposition: truncation guard tripped (top-level population " +
        std::to_string(evolved.stats.max_top_level_population) +
        "); increase the Fock dimension beyond " + std::to_string(fock_dim));
  }

  const Matrix x_full = kron(Matrix::identity(2), ops.position);
  Matrix proj_up(dim, dim);
  Matrix proj_down(dim, dim);
  for (int n = 0; n < fock_dim; ++n) {
    proj_up(n, n) = 1.0;
    proj_down(fock_dim + n, fock_dim + n) = 1.0;
  }
  const Matrix x_up = mul(proj_up, x_full);
  const Matrix x_down = mul(proj_down, x_full);

  ProtocolTrace trace;
  trace.stats = evolved.stats;
  trace.points.reserve(evolved.samples.size());
  for (const auto& sample : evolved.samples) {
    const auto reduced = lindblad::partial_trace_qubit(sample.rho);
    ProtocolPoint point;
    point.t = sample.t;
    point.purity = reduced.purity;
    // The qubit coherence is c(t)/2 for the ideal branch decomposition.
    point.overlap = 2.0 * std::abs(reduced.rho_q(0, 1));
    const double pop_up = reduced.rho_q(0, 0).real();
    const double pop_down = reduced.rho_q(1, 1).real();
    point.pos_up = pop_up > 1e-12
        ? lindblad::expectation(sample.rho, x_up).real() / pop_up
        : 0.0;
    point.pos_down = pop_down > 1e-12
        ? lindblad::expectation(sample.rho, x_down).real() / pop_down
        : 0.0;
    trace.points.push_back(point);
  }
  return trace;
}

}  // namespace magmech::superposition
