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

#include "magmech/lindblad.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "magmech/error.hpp"

namespace magmech::lindblad {

namespace {

constexpr Cplx kI{0.0, 1.0};

std::string format_time(double t) {
  std::ostringstream os;
  os.precision(6);
  os << t << " s";
  return os.str();
}

void append_commutator_triplets(const Matrix& h, int dim,
                                std::vector<kernels::Triplet>& out) {
  // -i (H (x) I - I (x) H^T) on the row-major vectorization.
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Cplx hab = h(a, b);
      if (hab == Cplx{0.0, 0.0}) continue;
      for (int k = 0; k < dim; ++k) {
        out.push_back({a * dim + k, b * dim + k, -kI * hab});
        out.push_back({k * dim + b, k * dim + a, kI * hab});
      }
    }
  }
}

void append_channel_triplets(const Channel& ch, int dim,
                             std::vector<kernels::Triplet>& out) {
  const Matrix& j = ch.jump;
  const double g = ch.rate;
  // gamma J (x) conj(J)
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Cplx jab = j(a, b);
      if (jab == Cplx{0.0, 0.0}) continue;
      for (int c = 0; c < dim; ++c) {
        for (int d = 0; d < dim; ++d) {
          const Cplx jcd = j(c, d);
          if (jcd == Cplx{0.0, 0.0}) continue;
          out.push_back({a * dim + c, b * dim + d, g * jab * std::conj(jcd)});
        }
      }
    }
  }
  // -gamma/2 (K (x) I + I (x) K^T), K = J^dag J
  const Matrix k = mul(adjoint(j), j);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Cplx kab = k(a, b);
      if (kab == Cplx{0.0, 0.0}) continue;
      for (int n = 0; n < dim; ++n) {
        out.push_back({a * dim + n, b * dim + n, -0.5 * g * kab});
        out.push_back({n * dim + b, n * dim + a, -0.5 * g * kab});
      }
    }
  }
}

std::vector<kernels::Triplet> liouvillian_triplets(const LindbladModel& model) {
  const int dim = model.hamiltonian.rows();
  std::vector<kernels::Triplet> trips;
  append_commutator_triplets(model.hamiltonian, dim, trips);
  for (const auto& ch : model.channels) {
    if (ch.rate < 0.0) {
      throw ModuleError("lindblad: negative channel rate");
    }
    if (ch.rate == 0.0) continue;
    append_channel_triplets(ch, dim, trips);
  }
  return trips;
}

double jump_norm_sq(const Matrix& j) {
  const auto ev = eigvals_hermitian(mul(adjoint(j), j));
  return ev.back();
}

void validate_model(const LindbladModel& model) {
  if (model.hamiltonian.rows() != model.hamiltonian.cols()) {
    throw ModuleError("lindblad: Hamiltonian must be square");
  }
  if (hermiticity_defect(model.hamiltonian) >
      1e-12 * (1.0 + spectral_norm_hermitian(model.hamiltonian))) {
    throw ModuleError("lindblad: Hamiltonian is not Hermitian");
  }
  for (const auto& ch : model.channels) {
    if (ch.jump.rows() != model.hamiltonian.rows() ||
        ch.jump.cols() != model.hamiltonian.cols()) {
      throw ModuleError("lindblad: jump operator dimension mismatch");
    }
    if (ch.rate < 0.0) throw ModuleError("lindblad: negative channel rate");
  }
}

struct SampleCheck {
  double trace_drift;
  double herm_defect;
  double min_eig;
  double top_population;
};

SampleCheck check_density(const Matrix& rho, int guard_fock_dim) {
  SampleCheck c{};
  c.trace_drift = std::abs(trace(rho) - Cplx{1.0, 0.0});
  c.herm_defect = hermiticity_defect(rho);
  Matrix sym = rho;
  hermitize(sym);
  c.min_eig = min_eigval_hermitian(sym);
  c.top_population =
      guard_fock_dim > 0 ? top_level_population(rho, guard_fock_dim) : 0.0;
  return c;
}

Eigen::MatrixXcd dense_liouvillian_scaled(const LindbladModel& model,
                                          double scale) {
  const int dim = model.hamiltonian.rows();
  const int n = dim * dim;
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& t : liouvillian_triplets(model)) {
    l(t.row, t.col) += t.val / scale;
  }
  return l;
}

SteadyStateResult finish_steady_state(Eigen::VectorXcd v,
                                      const Eigen::MatrixXcd& l_scaled,
                                      int dim, int iterations) {
  const Cplx tr = [&] {
    Cplx acc{0.0, 0.0};
    for (int i = 0; i < dim; ++i) acc += v(i * dim + i);
    return acc;
  }();
  if (std::abs(tr) < 1e-10 * v.norm()) {
    throw ModuleError(
        "lindblad: steady-state candidate is traceless; the null space is "
        "degenerate or unphysical");
  }
  v /= tr;

  SteadyStateResult out;
  out.iterations = iterations;
  out.rho = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out.rho(i, j) = v(i * dim + j);
  }
  hermitize(out.rho);
  Eigen::VectorXcd flat(dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) flat(i * dim + j) = out.rho(i, j);
  }
  out.residual = (l_scaled * flat).norm();
  return out;
}

SteadyStateResult steady_state_nullspace(const LindbladModel& model,
                                         double scale) {
  const int dim = model.hamiltonian.rows();
  const Eigen::MatrixXcd l = dense_liouvillian_scaled(model, scale);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(l);
  lu.setThreshold(1e-10);
  const int kernel_dim = l.cols() - lu.rank();
  if (kernel_dim == 0) {
    throw ModuleError("lindblad: no steady state found (empty null space)");
  }
  if (kernel_dim > 1) {
    throw ModuleError("lindblad: non-unique steady state (null space of "
                      "dimension " + std::to_string(kernel_dim) + ")");
  }
  return finish_steady_state(lu.kernel().col(0), l, dim, 1);
}

SteadyStateResult steady_state_inverse_iteration(const LindbladModel& model,
                                                 double scale) {
  const int dim = model.hamiltonian.rows();
  const int n = dim * dim;
  const Eigen::MatrixXcd l = dense_liouvillian_scaled(model, scale);
  const double shift = 1e-8;
  Eigen::MatrixXcd shifted = l;
  shifted.diagonal().array() -= shift;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);

  // vec(I)/||.|| has unit overlap with the trace of the steady state, so it
  // can never be orthogonal to the target.
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < dim; ++i) v(i * dim + i) = 1.0;
  v.normalize();

  double residual = (l * v).norm();
  int it = 0;
  for (; it < 64 && residual > 1e-13; ++it) {
    v = lu.solve(v);
    v.normalize();
    residual = (l * v).norm();
  }
  if (residual > 1e-9) {
    throw ModuleError(
        "lindblad: steady-state inverse iteration stalled at scaled "
        "residual " + std::to_string(residual));
  }

  // Probe for a second null direction: a deflated random start must not
  // converge to a stationary vector of its own.
  std::mt19937_64 rng(0x6d61676d65636831ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd w(n);
  for (int i = 0; i < n; ++i) w(i) = Cplx{gauss(rng), gauss(rng)};
  w -= v.dot(w) * v;
  w.normalize();
  for (int probe = 0; probe < 8; ++probe) {
    w = lu.solve(w);
    w -= v.dot(w) * v;
    w.normalize();
  }
  if ((l * w).norm() < 1e-8) {
    throw ModuleError(
        "lindblad: non-unique steady state (second null direction found)");
  }
  return finish_steady_state(v, l, dim, it);
}

}  // namespace

FockOperators fock_operators(int fock_dim) {
  if (fock_dim < 2) {
    throw ModuleError("lindblad: Fock dimension must be at least 2");
  }
  FockOperators ops;
  ops.lowering = Matrix(fock_dim, fock_dim);
  for (int n = 1; n < fock_dim; ++n) {
    ops.lowering(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  ops.raising = adjoint(ops.lowering);
  ops.number = Matrix(fock_dim, fock_dim);
  for (int n = 0; n < fock_dim; ++n) ops.number(n, n) = n;
  ops.position = ops.lowering + ops.raising;
  ops.momentum = (0.5 * kI) * (ops.raising - ops.lowering);
  return ops;
}

kernels::CsrMatrix build_liouvillian(const LindbladModel& model) {
  validate_model(model);
  const int dim = model.hamiltonian.rows();
  return kernels::csr_from_triplets(dim * dim, dim * dim,
                                    liouvillian_triplets(model));
}

double generator_scale(const LindbladModel& model) {
  double scale = spectral_norm_hermitian(model.hamiltonian);
  for (const auto& ch : model.channels) {
    if (ch.rate > 0.0) scale += ch.rate * jump_norm_sq(ch.jump);
  }
  return scale;
}

EvolveResult evolve(const LindbladModel& model, const Matrix& rho0,
                    const std::vector<double>& sample_times,
                    const EvolveOptions& options) {
  validate_model(model);
  const int dim = model.hamiltonian.rows();
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw ModuleError("lindblad: initial state dimension mismatch");
  }
  if (!std::is_sorted(sample_times.begin(), sample_times.end()) ||
      (!sample_times.empty() && sample_times.front() < 0.0)) {
    throw ModuleError("lindblad: sample times must be non-decreasing and "
                      "non-negative");
  }

  const std::size_t n = static_cast<std::size_t>(dim) * dim;
  const auto liouvillian = build_liouvillian(model);
  const double scale = generator_scale(model);
  const double h_max =
      options.step.safety / std::max(scale, 1e-300) /
      std::max(options.step.substep_factor, 1);

  std::vector<Cplx> y(rho0.data(), rho0.data() + n);
  std::vector<Cplx> y_next(n), stage(n), k1(n), k2(n), k3(n), k4(n);

  EvolveResult result;
  result.stats.step = h_max;
  result.stats.min_eigenvalue = 1.0;
  result.samples.reserve(sample_times.size());

  auto record_sample = [&](double t) {
    Sample s;
    s.t = t;
    s.rho = Matrix(dim, dim);
    std::copy(y.begin(), y.end(), s.rho.data());

    const auto check = check_density(s.rho, options.guard_fock_dim);
    auto& stats = result.stats;
    stats.max_trace_drift = std::max(stats.max_trace_drift, check.trace_drift);
    stats.max_hermiticity_defect =
        std::max(stats.max_hermiticity_defect, check.herm_defect);
    stats.min_eigenvalue = std::min(stats.min_eigenvalue, check.min_eig);
    stats.max_top_level_population =
        std::max(stats.max_top_level_population, check.top_population);
    if (check.top_population > options.tolerances.top_level_population) {
      stats.truncation_flag = true;
    }

    const auto& tol = options.tolerances;
    std::string violated;
    if (check.trace_drift > tol.trace) {
      violated = "trace (drift " + std::to_string(check.trace_drift) + ")";
    } else if (check.herm_defect > tol.hermiticity) {
      violated = "hermiticity (defect " + std::to_string(check.herm_defect) +
                 ")";
    } else if (check.min_eig < tol.min_eigenvalue) {
      violated = "positivity (min eigenvalue " +
                 std::to_string(check.min_eig) + ")";
    }
    if (!violated.empty()) {
      throw ModuleError("lindblad: integration failure at t = " +
                        format_time(t) + ", violated invariant: " + violated);
    }
    result.samples.push_back(std::move(s));
  };

  double t = 0.0;
  for (double target : sample_times) {
    const double span = target - t;
    if (span > 0.0) {
      const long substeps =
          std::max<long>(1, static_cast<long>(std::ceil(span / h_max)));
      const double h = span / static_cast<double>(substeps);
      for (long s = 0; s < substeps; ++s) {
        kernels::spmv(liouvillian, y.data(), k1.data());
        kernels::xpay(n, y.data(), 0.5 * h, k1.data(), stage.data());
        kernels::spmv(liouvillian, stage.data(), k2.data());
        kernels::xpay(n, y.data(), 0.5 * h, k2.data(), stage.data());
        kernels::spmv(liouvillian, stage.data(), k3.data());
        kernels::xpay(n, y.data(), h, k3.data(), stage.data());
        kernels::spmv(liouvillian, stage.data(), k4.data());
        kernels::rk4_combine(n, y.data(), k1.data(), k2.data(), k3.data(),
                             k4.data(), h, y_next.data());
        y.swap(y_next);
      }
      result.stats.steps += substeps;
      t = target;
    }
    record_sample(target);
  }
  return result;
}

SteadyStateResult steady_state(const LindbladModel& model,
                               SteadyStateMethod method) {
  validate_model(model);
  bool has_dissipation = false;
  for (const auto& ch : model.channels) has_dissipation |= ch.rate > 0.0;
  if (!has_dissipation) {
    throw ModuleError(
        "lindblad: steady state requires at least one dissipative channel");
  }
  const double scale = generator_scale(model);
  const int n = model.hamiltonian.rows() * model.hamiltonian.cols();
  if (method == SteadyStateMethod::automatic) {
    method = n <= 400 ? SteadyStateMethod::dense_nullspace
                      : SteadyStateMethod::inverse_iteration;
  }
  SteadyStateResult out = method == SteadyStateMethod::dense_nullspace
                              ? steady_state_nullspace(model, scale)
                              : steady_state_inverse_iteration(model, scale);
  if (out.residual > 1e-9) {
    throw ModuleError("lindblad: steady-state residual " +
                      std::to_string(out.residual) + " exceeds 1e-9");
  }
  const auto violations = validate_density(out.rho);
  if (!violations.empty()) {
    throw ModuleError("lindblad: steady state violates " + violations.front());
  }
  return out;
}

Cplx expectation(const Matrix& rho, const Matrix& op) {
  if (rho.rows() != op.rows() || rho.cols() != op.cols()) {
    throw ModuleError("lindblad: expectation dimension mismatch");
  }
  Cplx acc{0.0, 0.0};
  for (int i = 0; i < rho.rows(); ++i) {
    for (int j = 0; j < rho.cols(); ++j) acc += rho(i, j) * op(j, i);
  }
  return acc;
}

ReducedQubit partial_trace_qubit(const Matrix& rho) {
  const int dim = rho.rows();
  if (dim % 2 != 0 || dim < 2) {
    throw ModuleError("lindblad: partial trace needs a qubit (x) Fock space");
  }
  const int fock = dim / 2;
  ReducedQubit out;
  out.rho_q = Matrix(2, 2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Cplx acc{0.0, 0.0};
      for (int k = 0; k < fock; ++k) acc += rho(a * fock + k, b * fock + k);
      out.rho_q(a, b) = acc;
    }
  }
  out.purity = trace(mul(out.rho_q, out.rho_q)).real();
  return out;
}

double top_level_population(const Matrix& rho, int fock_dim) {
  const int dim = rho.rows();
  if (fock_dim < 2 || dim % fock_dim != 0) {
    throw ModuleError("lindblad: truncation guard dimension mismatch");
  }
  const int slow = dim / fock_dim;
  double pop = 0.0;
  for (int s = 0; s < slow; ++s) {
    for (int n = fock_dim - 2; n < fock_dim; ++n) {
      pop += rho(s * fock_dim + n, s * fock_dim + n).real();
    }
  }
  return pop;
}

std::vector<std::string> validate_density(const Matrix& rho,
                                          const DensityTolerances& tol) {
  std::vector<std::string> violations;
  if (rho.rows() != rho.cols()) {
    violations.push_back("shape (not square)");
    return violations;
  }
  const double drift = std::abs(trace(rho) - Cplx{1.0, 0.0});
  if (drift > tol.trace) {
    violations.push_back("trace (drift " + std::to_string(drift) + ")");
  }
  const double defect = hermiticity_defect(rho);
  if (defect > tol.hermiticity) {
    violations.push_back("hermiticity (defect " + std::to_string(defect) +
                         ")");
  }
  Matrix sym = rho;
  hermitize(sym);
  const double min_eig = min_eigval_hermitian(sym);
  if (min_eig < tol.min_eigenvalue) {
    violations.push_back("positivity (min eigenvalue " +
                         std::to_string(min_eig) + ")");
  }
  return violations;
}

}  // namespace magmech::lindblad
