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

#include "magmech/linalg.hpp"

#include <Eigen/Dense>

#include <cassert>
#include <cmath>

namespace magmech {

namespace {

using EigenMap =
    Eigen::Map<Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::RowMajor>>;
using ConstEigenMap =
    Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>;

ConstEigenMap as_eigen(const Matrix& m) {
  return ConstEigenMap(m.data(), m.rows(), m.cols());
}

EigenMap as_eigen(Matrix& m) { return EigenMap(m.data(), m.rows(), m.cols()); }

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix out(a.rows(), b.cols());
  as_eigen(out) = as_eigen(a) * as_eigen(b);
  return out;
}

Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  as_eigen(out) = as_eigen(a).adjoint();
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Cplx aij = a(i, j);
      if (aij == Cplx{0.0, 0.0}) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

Cplx trace(const Matrix& a) {
  assert(a.rows() == a.cols());
  Cplx t{0.0, 0.0};
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double hermiticity_defect(const Matrix& a) {
  assert(a.rows() == a.cols());
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

void hermitize(Matrix& a) {
  assert(a.rows() == a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i; j < a.cols(); ++j) {
      const Cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
}

std::vector<double> eigvals_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      as_eigen(a), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double min_eigval_hermitian(const Matrix& a) {
  return eigvals_hermitian(a).front();
}

double spectral_norm_hermitian(const Matrix& a) {
  const auto ev = eigvals_hermitian(a);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

Matrix expm_skew_hermitian(const Matrix& g) {
  // iG is Hermitian; exp(G) = V exp(-i diag) V^dagger.
  const int n = g.rows();
  Eigen::MatrixXcd h = Cplx{0.0, 1.0} * as_eigen(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i) {
    phases(i) = std::exp(Cplx{0.0, -solver.eigenvalues()(i)});
  }
  Eigen::MatrixXcd u = solver.eigenvectors() * phases.asDiagonal() *
                       solver.eigenvectors().adjoint();
  Matrix out(n, n);
  as_eigen(out) = u;
  return out;
}

}  // namespace magmech
