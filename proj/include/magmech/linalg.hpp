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

#ifndef MAGMECH_LINALG_HPP_
#define MAGMECH_LINALG_HPP_

#include <complex>
#include <vector>

namespace magmech {

using Cplx = std::complex<double>;

// Dense complex matrix, row-major. Operators on the truncated qubit x Fock
// space are small (dim <= 2*40), so this stays deliberately simple; the
// integrator hot path works on CSR superoperators, not on this type.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  Cplx& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Cplx& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  Cplx* data() { return data_.data(); }
  const Cplx* data() const { return data_.data(); }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Cplx s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Cplx s, Matrix a) { return a *= s; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cplx> data_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
Cplx trace(const Matrix& a);

// max_ij |A_ij - conj(A_ji)|
double hermiticity_defect(const Matrix& a);

// Symmetrizes in place: A <- (A + A^dagger)/2.
void hermitize(Matrix& a);

// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> eigvals_hermitian(const Matrix& a);
double min_eigval_hermitian(const Matrix& a);
double spectral_norm_hermitian(const Matrix& a);

// exp(G) for skew-Hermitian G (G^dagger = -G); the result is unitary.
Matrix expm_skew_hermitian(const Matrix& g);

}  // namespace magmech

#endif  // MAGMECH_LINALG_HPP_
