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

#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "magmech/kernels/kernels.hpp"

namespace {

using magmech::kernels::Cplx;
using magmech::kernels::CsrMatrix;
using magmech::kernels::Isa;
using magmech::kernels::Triplet;

std::vector<Cplx> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Cplx> v(n);
  for (auto& x : v) x = Cplx{g(rng), g(rng)};
  return v;
}

CsrMatrix random_csr(std::mt19937_64& rng, int n, double fill) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Triplet> trips;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (u(rng) < fill) trips.push_back({i, j, Cplx{g(rng), g(rng)}});
    }
  }
  // Keep at least one entry so the matrix is not empty.
  trips.push_back({0, 0, Cplx{1.0, 0.0}});
  return magmech::kernels::csr_from_triplets(n, n, trips);
}

double rel_diff(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  double num = 0.0, den = 1e-300;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(a[i]));
  }
  return num / den;
}

}  // namespace

TEST_CASE("csr_from_triplets sums duplicates and orders columns") {
  std::vector<Triplet> trips{{1, 2, {1.0, 0.0}},
                             {0, 1, {2.0, 0.0}},
                             {1, 2, {0.5, -1.0}},
                             {1, 0, {3.0, 0.0}}};
  const auto m = magmech::kernels::csr_from_triplets(3, 3, trips);
  CHECK(m.rows == 3);
  CHECK(m.nnz() == 3);
  CHECK(m.row_ptr[0] == 0);
  CHECK(m.row_ptr[1] == 1);
  CHECK(m.row_ptr[2] == 3);
  CHECK(m.col[1] == 0);
  CHECK(m.col[2] == 2);
  CHECK(m.val[2] == Cplx{1.5, -1.0});
}

TEST_CASE("spmv reference matches a dense contraction") {
  std::mt19937_64 rng(11);
  const int n = 37;
  const auto a = random_csr(rng, n, 0.15);
  const auto x = random_vector(rng, n);
  std::vector<Cplx> dense(n * n, Cplx{0.0, 0.0});
  for (int r = 0; r < a.rows; ++r) {
    for (int k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
      dense[r * n + a.col[k]] = a.val[k];
    }
  }
  std::vector<Cplx> expected(n, Cplx{0.0, 0.0});
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) expected[r] += dense[r * n + c] * x[c];
  }
  std::vector<Cplx> got(n);
  magmech::kernels::table(Isa::scalar).spmv(a, x.data(), got.data());
  CHECK(rel_diff(expected, got) < 1e-14);
}

TEST_CASE("scalar and avx2 kernel sets agree on random inputs") {
  if (!magmech::kernels::avx2_supported()) {
    MESSAGE("AVX2 not available; equivalence suite skipped");
    return;
  }
  const auto& ref = magmech::kernels::table(Isa::scalar);
  const auto& vec = magmech::kernels::table(Isa::avx2);
  std::mt19937_64 rng(7);

  // Odd sizes exercise the scalar tails of the vector loops.
  for (std::size_t n : {1u, 2u, 3u, 8u, 63u, 64u, 257u, 1600u}) {
    const auto x = random_vector(rng, n);
    const Cplx a{0.3, -1.7};

    auto y1 = random_vector(rng, n);
    auto y2 = y1;
    ref.axpy(n, a, x.data(), y1.data());
    vec.axpy(n, a, x.data(), y2.data());
    CHECK(rel_diff(y1, y2) < 1e-13);

    std::vector<Cplx> o1(n), o2(n);
    ref.xpay(n, y1.data(), a, x.data(), o1.data());
    vec.xpay(n, y1.data(), a, x.data(), o2.data());
    CHECK(rel_diff(o1, o2) < 1e-13);

    const auto k1 = random_vector(rng, n);
    const auto k2 = random_vector(rng, n);
    const auto k3 = random_vector(rng, n);
    const auto k4 = random_vector(rng, n);
    ref.rk4_combine(n, x.data(), k1.data(), k2.data(), k3.data(), k4.data(),
                    0.37, o1.data());
    vec.rk4_combine(n, x.data(), k1.data(), k2.data(), k3.data(), k4.data(),
                    0.37, o2.data());
    CHECK(rel_diff(o1, o2) < 1e-13);

    const Cplx d1 = ref.dotu(n, x.data(), k1.data());
    const Cplx d2 = vec.dotu(n, x.data(), k1.data());
    CHECK(std::abs(d1 - d2) <= 1e-12 * (1.0 + std::abs(d1)));

    CHECK(ref.nrm2(n, x.data()) ==
          doctest::Approx(vec.nrm2(n, x.data())).epsilon(1e-13));
    CHECK(ref.max_abs_diff(n, x.data(), k1.data()) ==
          doctest::Approx(vec.max_abs_diff(n, x.data(), k1.data()))
              .epsilon(1e-13));
  }

  for (int n : {5, 40, 160}) {
    const auto a = random_csr(rng, n, 0.12);
    const auto x = random_vector(rng, n);
    std::vector<Cplx> y1(n), y2(n);
    ref.spmv(a, x.data(), y1.data());
    vec.spmv(a, x.data(), y2.data());
    CHECK(rel_diff(y1, y2) < 1e-13);
  }
}

TEST_CASE("dispatch honors force_isa") {
  const Isa before = magmech::kernels::active_isa();
  magmech::kernels::force_isa(Isa::scalar);
  CHECK(magmech::kernels::active_isa() == Isa::scalar);
  magmech::kernels::force_isa(before);
  CHECK(magmech::kernels::active_isa() == before);
}
