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

// AVX2/FMA variants. This translation unit is the only one built with
// -mavx2 -mfma; the dispatcher never routes here unless CPUID reports both
// features. Complex doubles are interleaved [re, im], two per __m256d.

#include <immintrin.h>

#include <cmath>

#include "magmech/kernels/kernels.hpp"

namespace magmech::kernels::avx2 {
namespace {

// (ar + i ai) * x for two packed complex values.
inline __m256d cmul_scalar(__m256d x, __m256d ar, __m256d ai) {
  // [xi, xr] * ai, then fmaddsub folds the +/- of the real/imag parts.
  __m256d x_sw = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(x_sw, ai));
}

// Element-wise complex product of two packed pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  __m256d b_re = _mm256_movedup_pd(b);       // [b0r b0r b1r b1r]
  __m256d b_im = _mm256_permute_pd(b, 0xF);  // [b0i b0i b1i b1i]
  __m256d a_sw = _mm256_permute_pd(a, 0x5);  // [a0i a0r a1i a1r]
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

}  // namespace

void axpy(std::size_t n, Cplx a, const Cplx* x, Cplx* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul_scalar(xv, ar, ai)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void xpay(std::size_t n, const Cplx* x, Cplx a, const Cplx* y, Cplx* out) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  double* op = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(op + 2 * i, _mm256_add_pd(xv, cmul_scalar(yv, ar, ai)));
  }
  for (; i < n; ++i) out[i] = x[i] + a * y[i];
}

void rk4_combine(std::size_t n, const Cplx* y, const Cplx* k1, const Cplx* k2,
                 const Cplx* k3, const Cplx* k4, double h, Cplx* out) {
  // Real weights only; operate on the flattened double array.
  const std::size_t m = 2 * n;
  const __m256d w = _mm256_set1_pd(h / 6.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const double* yp = reinterpret_cast<const double*>(y);
  const double* p1 = reinterpret_cast<const double*>(k1);
  const double* p2 = reinterpret_cast<const double*>(k2);
  const double* p3 = reinterpret_cast<const double*>(k3);
  const double* p4 = reinterpret_cast<const double*>(k4);
  double* op = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    __m256d acc = _mm256_loadu_pd(p1 + i);
    acc = _mm256_fmadd_pd(two, _mm256_loadu_pd(p2 + i), acc);
    acc = _mm256_fmadd_pd(two, _mm256_loadu_pd(p3 + i), acc);
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(p4 + i));
    _mm256_storeu_pd(op + i, _mm256_fmadd_pd(w, acc, _mm256_loadu_pd(yp + i)));
  }
  const double ws = h / 6.0;
  for (; i < m; ++i) {
    op[i] = yp[i] + ws * (p1[i] + 2.0 * p2[i] + 2.0 * p3[i] + p4[i]);
  }
}

void spmv(const CsrMatrix& a, const Cplx* x, Cplx* y) {
  const double* vp = reinterpret_cast<const double*>(a.val.data());
  const double* xp = reinterpret_cast<const double*>(x);
  for (int r = 0; r < a.rows; ++r) {
    const int begin = a.row_ptr[r];
    const int end = a.row_ptr[r + 1];
    __m256d acc = _mm256_setzero_pd();
    int k = begin;
    for (; k + 2 <= end; k += 2) {
      __m256d vv = _mm256_loadu_pd(vp + 2 * k);
      __m128d x0 = _mm_loadu_pd(xp + 2 * a.col[k]);
      __m128d x1 = _mm_loadu_pd(xp + 2 * a.col[k + 1]);
      __m256d xx = _mm256_set_m128d(x1, x0);
      acc = _mm256_add_pd(acc, cmul(vv, xx));
    }
    // Fold the two packed complex accumulators into one.
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d sum = _mm_add_pd(lo, hi);
    double re = _mm_cvtsd_f64(sum);
    double im = _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
    Cplx tail{re, im};
    for (; k < end; ++k) tail += a.val[k] * x[a.col[k]];
    y[r] = tail;
  }
}

Cplx dotu(std::size_t n, const Cplx* x, const Cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    acc = _mm256_add_pd(acc, cmul(xv, yv));
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d sum = _mm_add_pd(lo, hi);
  Cplx out{_mm_cvtsd_f64(sum), _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum))};
  for (; i < n; ++i) out += x[i] * y[i];
  return out;
}

double nrm2(std::size_t n, const Cplx* x) {
  const std::size_t m = 2 * n;
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    __m256d v = _mm256_loadu_pd(xp + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d sum = _mm_add_pd(lo, hi);
  double total = _mm_cvtsd_f64(sum) + _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
  for (; i < m; ++i) total += xp[i] * xp[i];
  return std::sqrt(total);
}

double max_abs_diff(std::size_t n, const Cplx* x, const Cplx* y) {
  // Track max |d|^2 per lane pair, take the sqrt once at the end.
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xp + 2 * i),
                              _mm256_loadu_pd(yp + 2 * i));
    __m256d d2 = _mm256_mul_pd(d, d);
    // re^2 + im^2 within each complex slot.
    __m256d sw = _mm256_permute_pd(d2, 0x5);
    best = _mm256_max_pd(best, _mm256_add_pd(d2, sw));
  }
  __m128d lo = _mm256_castpd256_pd128(best);
  __m128d hi = _mm256_extractf128_pd(best, 1);
  __m128d mx = _mm_max_pd(lo, hi);
  double m2 = std::max(_mm_cvtsd_f64(mx), _mm_cvtsd_f64(_mm_unpackhi_pd(mx, mx)));
  double m = std::sqrt(m2);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

extern const KernelTable kTable;
const KernelTable kTable = {
    axpy, xpay, rk4_combine, spmv, dotu, nrm2, max_abs_diff,
};

}  // namespace magmech::kernels::avx2
