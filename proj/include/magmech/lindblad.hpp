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

#ifndef MAGMECH_LINDBLAD_HPP_
#define MAGMECH_LINDBLAD_HPP_

#include <string>
#include <vector>

#include "magmech/kernels/kernels.hpp"
#include "magmech/linalg.hpp"

namespace magmech {

// One dissipative channel: rate gamma (1/s) and jump operator J, entering
// the generator as gamma (J rho J^dag - {J^dag J, rho}/2). Pure dephasing
// at rate Gamma_phi is the channel (Gamma_phi, sigma_z/sqrt(2)), which
// makes the qubit coherence decay at exactly Gamma0/2 + Gamma_phi.
struct Channel {
  double rate = 0.0;
  Matrix jump;
};

struct LindbladModel {
  Matrix hamiltonian;  // Hermitian, units of rad/s (hbar-scaled)
  std::vector<Channel> channels;
};

struct StepControl {
  // Fixed-step RK4 with h <= safety / omega_max, where omega_max is the
  // spectral scale of the Hamiltonian plus the total jump rate.
  double safety = 0.05;
  // Multiplies the step count; 2 halves the step for convergence checks.
  int substep_factor = 1;
};

struct DensityTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-9;
  double min_eigenvalue = -1e-8;
  double top_level_population = 1e-6;
};

struct EvolveOptions {
  StepControl step;
  DensityTolerances tolerances;
  // Fock dimension of the fast index for the truncation guard; 0 disables.
  int guard_fock_dim = 0;
};

struct Sample {
  double t = 0.0;
  Matrix rho;
};

struct SolverStats {
  double max_trace_drift = 0.0;
  double max_hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  double max_top_level_population = 0.0;
  bool truncation_flag = false;  // top two Fock levels exceeded tolerance
  double step = 0.0;             // the h actually used, s
  long steps = 0;
};

struct EvolveResult {
  std::vector<Sample> samples;
  SolverStats stats;
};

struct SteadyStateResult {
  Matrix rho;
  // ||L vec(rho)||_2 divided by the generator frequency scale.
  double residual = 0.0;
  int iterations = 0;
};

enum class SteadyStateMethod {
  // Rank-revealing dense null space below dim^2 = 400, shifted inverse
  // iteration on the assembled dense Liouvillian above.
  automatic,
  dense_nullspace,
  inverse_iteration,
};

namespace lindblad {

struct FockOperators {
  Matrix lowering;   // b
  Matrix raising;    // b^dag
  Matrix number;     // b^dag b (exact diagonal)
  Matrix position;   // x / x_zp = b + b^dag
  Matrix momentum;   // p x_zp / hbar = i (b^dag - b) / 2
};

FockOperators fock_operators(int fock_dim);

// Matrix representation of the generator acting on the row-major
// vectorized density matrix.
kernels::CsrMatrix build_liouvillian(const LindbladModel& model);

// Frequency scale used for step control and residual normalization:
// ||H||_2 plus sum_k rate_k ||J_k||_2^2.
double generator_scale(const LindbladModel& model);

// Fixed-step RK4 integration of rho through the requested sample times
// (non-decreasing, starting from t = 0 where rho0 lives). Throws
// ModuleError when a density-matrix invariant breaks beyond tolerance,
// naming the invariant and the time.
EvolveResult evolve(const LindbladModel& model, const Matrix& rho0,
                    const std::vector<double>& sample_times,
                    const EvolveOptions& options = {});

// Null vector of the assembled Liouvillian, trace-normalized. Throws on a
// degenerate null space (more than one steady state).
SteadyStateResult steady_state(
    const LindbladModel& model,
    SteadyStateMethod method = SteadyStateMethod::automatic);

// Tr(rho op); imaginary part is a numerical residue for Hermitian op.
Cplx expectation(const Matrix& rho, const Matrix& op);

struct ReducedQubit {
  Matrix rho_q;        // 2x2
  double purity = 0.0; // Tr rho_q^2
};

// Traces out the Fock factor (qubit index slow).
ReducedQubit partial_trace_qubit(const Matrix& rho);

// Population of the top two Fock levels, summed over the slow index.
double top_level_population(const Matrix& rho, int fock_dim);

// Empty when rho is a valid density matrix at the given tolerances.
std::vector<std::string> validate_density(const Matrix& rho,
                                          const DensityTolerances& tol = {});

}  // namespace lindblad
}  // namespace magmech

#endif  // MAGMECH_LINDBLAD_HPP_
