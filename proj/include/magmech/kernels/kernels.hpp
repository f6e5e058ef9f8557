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

#ifndef MAGMECH_KERNELS_KERNELS_HPP_
#define MAGMECH_KERNELS_KERNELS_HPP_

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

// Inner loops of the density-matrix integrator. Each kernel exists twice:
// a scalar reference implementation and an AVX2 variant. The active set is
// chosen once at startup from CPUID (override with MAGMECH_KERNELS=scalar
// or force_isa()); the two sets are equivalence-tested against each other.

namespace magmech::kernels {

using Cplx = std::complex<double>;

// Square sparse matrix, CSR layout, complex entries.
struct CsrMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_ptr;  // rows + 1 entries
  std::vector<int> col;      // nnz entries
  std::vector<Cplx> val;     // nnz entries

  std::size_t nnz() const { return val.size(); }
};

struct Triplet {
  int row;
  int col;
  Cplx val;
};

// Builds CSR from triplets; duplicate coordinates are summed, exact zeros
// produced by the summation are kept (structure is what matters here).
CsrMatrix csr_from_triplets(int rows, int cols, std::vector<Triplet> triplets);

enum class Isa { scalar, avx2 };

// Name of the ISA as used in the MAGMECH_KERNELS env var.
std::string isa_name(Isa isa);

// Active implementation set. Resolved on first kernel use: AVX2 when the
// CPU supports AVX2+FMA and the build carries the AVX2 translation unit.
Isa active_isa();
bool avx2_supported();

// Pins the implementation set, for tests and for the env override.
// Throws std::runtime_error when the requested set is unavailable.
void force_isa(Isa isa);

// y += a*x
void axpy(std::size_t n, Cplx a, const Cplx* x, Cplx* y);

// out = x + a*y   (RK4 stage state; out must not alias x or y)
void xpay(std::size_t n, const Cplx* x, Cplx a, const Cplx* y, Cplx* out);

// out = y + (h/6)*(k1 + 2 k2 + 2 k3 + k4)
void rk4_combine(std::size_t n, const Cplx* y, const Cplx* k1, const Cplx* k2,
                 const Cplx* k3, const Cplx* k4, double h, Cplx* out);

// y = A x
void spmv(const CsrMatrix& a, const Cplx* x, Cplx* y);

// sum_i x_i * y_i, no conjugation
Cplx dotu(std::size_t n, const Cplx* x, const Cplx* y);

// sqrt(sum_i |x_i|^2)
double nrm2(std::size_t n, const Cplx* x);

// max_i |x_i - y_i| (complex modulus)
double max_abs_diff(std::size_t n, const Cplx* x, const Cplx* y);

// Direct access to one implementation set, used by the equivalence tests.
struct KernelTable {
  void (*axpy)(std::size_t, Cplx, const Cplx*, Cplx*);
  void (*xpay)(std::size_t, const Cplx*, Cplx, const Cplx*, Cplx*);
  void (*rk4_combine)(std::size_t, const Cplx*, const Cplx*, const Cplx*,
                      const Cplx*, const Cplx*, double, Cplx*);
  void (*spmv)(const CsrMatrix&, const Cplx*, Cplx*);
  Cplx (*dotu)(std::size_t, const Cplx*, const Cplx*);
  double (*nrm2)(std::size_t, const Cplx*);
  double (*max_abs_diff)(std::size_t, const Cplx*, const Cplx*);
};

const KernelTable& table(Isa isa);

}  // namespace magmech::kernels

#endif  // MAGMECH_KERNELS_KERNELS_HPP_
