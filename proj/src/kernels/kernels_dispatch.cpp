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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "magmech/kernels/kernels.hpp"

namespace magmech::kernels {

namespace scalar {
extern const KernelTable kTable;
}
#if MAGMECH_HAVE_AVX2_TU
namespace avx2 {
extern const KernelTable kTable;
}
#endif

namespace {

std::atomic<const KernelTable*> g_active{nullptr};
std::atomic<Isa> g_active_isa{Isa::scalar};
std::once_flag g_resolve_once;

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void set_active(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      g_active.store(&scalar::kTable, std::memory_order_release);
      break;
    case Isa::avx2:
#if MAGMECH_HAVE_AVX2_TU
      g_active.store(&avx2::kTable, std::memory_order_release);
      break;
#else
      throw std::runtime_error("kernels: AVX2 variants not built");
#endif
  }
  g_active_isa.store(isa, std::memory_order_release);
}

void resolve() {
  Isa pick = avx2_supported() ? Isa::avx2 : Isa::scalar;
  if (const char* env = std::getenv("MAGMECH_KERNELS")) {
    std::string want(env);
    if (want == "scalar") {
      pick = Isa::scalar;
    } else if (want == "avx2") {
      if (!avx2_supported()) {
        throw std::runtime_error(
            "kernels: MAGMECH_KERNELS=avx2 but AVX2+FMA unavailable");
      }
      pick = Isa::avx2;
    } else if (!want.empty()) {
      throw std::runtime_error("kernels: unknown MAGMECH_KERNELS value '" +
                               want + "' (expected scalar or avx2)");
    }
  }
  set_active(pick);
}

const KernelTable& active() {
  std::call_once(g_resolve_once, resolve);
  return *g_active.load(std::memory_order_acquire);
}

}  // namespace

bool avx2_supported() {
#if MAGMECH_HAVE_AVX2_TU
  return cpu_has_avx2_fma();
#else
  return false;
#endif
}

Isa active_isa() {
  std::call_once(g_resolve_once, resolve);
  return g_active_isa.load(std::memory_order_acquire);
}

void force_isa(Isa isa) {
  std::call_once(g_resolve_once, resolve);
  if (isa == Isa::avx2 && !avx2_supported()) {
    throw std::runtime_error("kernels: AVX2+FMA unavailable on this host");
  }
  set_active(isa);
}

std::string isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

const KernelTable& table(Isa isa) {
  switch (isa) {
    case Isa::avx2:
#if MAGMECH_HAVE_AVX2_TU
      return avx2::kTable;
#else
      throw std::runtime_error("kernels: AVX2 variants not built");
#endif
    case Isa::scalar:
      break;
  }
  return scalar::kTable;
}

CsrMatrix csr_from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  CsrMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.row_ptr.assign(static_cast<std::size_t>(rows) + 1, 0);
  m.col.reserve(triplets.size());
  m.val.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    const int r = triplets[i].row;
    const int c = triplets[i].col;
    Cplx v{0.0, 0.0};
    while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
      v += triplets[i].val;
      ++i;
    }
    m.col.push_back(c);
    m.val.push_back(v);
    ++m.row_ptr[static_cast<std::size_t>(r) + 1];
  }
  for (int r = 0; r < rows; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
  return m;
}

void axpy(std::size_t n, Cplx a, const Cplx* x, Cplx* y) {
  active().axpy(n, a, x, y);
}
void xpay(std::size_t n, const Cplx* x, Cplx a, const Cplx* y, Cplx* out) {
  active().xpay(n, x, a, y, out);
}
void rk4_combine(std::size_t n, const Cplx* y, const Cplx* k1, const Cplx* k2,
                 const Cplx* k3, const Cplx* k4, double h, Cplx* out) {
  active().rk4_combine(n, y, k1, k2, k3, k4, h, out);
}
void spmv(const CsrMatrix& a, const Cplx* x, Cplx* y) {
  active().spmv(a, x, y);
}
Cplx dotu(std::size_t n, const Cplx* x, const Cplx* y) {
  return active().dotu(n, x, y);
}
double nrm2(std::size_t n, const Cplx* x) { return active().nrm2(n, x); }
double max_abs_diff(std::size_t n, const Cplx* x, const Cplx* y) {
  return active().max_abs_diff(n, x, y);
}

}  // namespace magmech::kernels
