// Copyright 2026 The oaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oaqec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

Matrix identity(Index dim);

// |i><j| on a dim-dimensional space.
Matrix matrix_unit(Index dim, Index i, Index j);
Vector basis_vector(Index dim, Index i);

// Kronecker product; the left factor indexes the most significant digit.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors);

Matrix commutator(const Matrix& a, const Matrix& b);

// Largest singular value.
double op_norm(const Matrix& m);

// Column-stacking vectorization: vec(A X B) = (B^T kron A) vec(X).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Index rows, Index cols);

// max(||P^2 - P||, ||P - P^dag||) in operator norm.
double projector_defect(const Matrix& p);
bool is_projector(const Matrix& p, double tol);

// Orthonormal columns spanning the range of an orthogonal projector.
Matrix range_basis(const Matrix& projector);

// Orthonormal columns spanning the range of a positive semidefinite matrix,
// keeping eigenvalues above cutoff.
Matrix psd_range_basis(const Matrix& psd, double cutoff);

// Unitary factor U of the polar decomposition m = U |m|.
Matrix polar_unitary(const Matrix& m);

// Partial traces on C^outer kron C^inner.
Matrix trace_out_second(const Matrix& m, Index outer, Index inner);
Matrix trace_out_first(const Matrix& m, Index outer, Index inner);

// Hermitian pieces of a matrix: (m + m^dag)/2 and (m - m^dag)/(2i).
Matrix hermitian_real_part(const Matrix& m);
Matrix hermitian_imag_part(const Matrix& m);

}  // namespace oaqec
