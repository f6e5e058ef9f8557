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

// Reference kernels. Keep these dumb and obviously correct: they are the
// oracle the AVX2 variants are tested against.

#include <cmath>

#include "magmech/kernels/kernels.hpp"

namespace magmech::kernels::scalar {

void axpy(std::size_t n, Cplx a, const Cplx* x, Cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpay(std::size_t n, const Cplx* x, Cplx a, const Cplx* y, Cplx* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * y[i];
}

void rk4_combine(std::size_t n, const Cplx* y, const Cplx* k1, const Cplx* k2,
                 const Cplx* k3, const Cplx* k4, double h, Cplx* out) {
  const double w = h / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = y[i] + w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

void spmv(const CsrMatrix& a, const Cplx* x, Cplx* y) {
  for (int r = 0; r < a.rows; ++r) {
    Cplx acc{0.0, 0.0};
    for (int k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
      acc += a.val[k] * x[a.col[k]];
    }
    y[r] = acc;
  }
}

Cplx dotu(std::size_t n, const Cplx* x, const Cplx* y) {
  Cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double nrm2(std::size_t n, const Cplx* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return std::sqrt(acc);
}

double max_abs_diff(std::size_t n, const Cplx* x, const Cplx* y) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

extern const KernelTable kTable;
const KernelTable kTable = {
    axpy, xpay, rk4_combine, spmv, dotu, nrm2, max_abs_diff,
};

}  // namespace magmech::kernels::scalar
