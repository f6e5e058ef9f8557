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

#include <cmath>
#include <random>

#include "magmech/linalg.hpp"

namespace {

using magmech::Cplx;
using magmech::Matrix;

Matrix random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Cplx{g(rng), g(rng)};
  }
  magmech::hermitize(m);
  return m;
}

}  // namespace

TEST_CASE("kron respects block placement") {
  Matrix a(2, 2);
  a(0, 1) = 2.0;
  Matrix b = Matrix::identity(3);
  const Matrix k = magmech::kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(k(0, 4).real() == doctest::Approx(0.0));
  CHECK(k(1, 4).real() == doctest::Approx(2.0));
  CHECK(k(2, 5).real() == doctest::Approx(2.0));
}

TEST_CASE("hermitian eigenvalues of a known matrix") {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  m(0, 1) = Cplx{0.0, -2.0};
  m(1, 0) = Cplx{0.0, 2.0};
  const auto ev = magmech::eigvals_hermitian(m);
  CHECK(ev[0] == doctest::Approx(-std::sqrt(5.0)));
  CHECK(ev[1] == doctest::Approx(std::sqrt(5.0)));
  CHECK(magmech::spectral_norm_hermitian(m) ==
        doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("expm of a skew-Hermitian generator is unitary") {
  std::mt19937_64 rng(3);
  Matrix h = random_hermitian(rng, 6);
  Matrix g = Cplx{0.0, 1.0} * h;  // skew-Hermitian
  const Matrix u = magmech::expm_skew_hermitian(g);
  const Matrix should_be_id = magmech::mul(magmech::adjoint(u), u);
  Matrix diff = should_be_id - Matrix::identity(6);
  double max_abs = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      max_abs = std::max(max_abs, std::abs(diff(i, j)));
    }
  }
  CHECK(max_abs < 1e-12);
}

TEST_CASE("hermitize halves the defect exactly") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = Cplx{g(rng), g(rng)};
  }
  CHECK(magmech::hermiticity_defect(m) > 0.1);
  magmech::hermitize(m);
  CHECK(magmech::hermiticity_defect(m) == doctest::Approx(0.0));
}
