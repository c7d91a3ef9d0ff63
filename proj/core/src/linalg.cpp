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

#include "oaqec/linalg.hpp"

#include "oaqec/errors.hpp"

namespace oaqec {

Matrix identity(Index dim) { return Matrix::Identity(dim, dim); }

Matrix matrix_unit(Index dim, Index i, Index j) {
  Matrix m = Matrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

Vector basis_vector(Index dim, Index i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron(const std::vector<Matrix>& factors) {
  if (factors.empty()) return Matrix::Identity(1, 1);
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double op_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw InputError("unvec: size mismatch");
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

double projector_defect(const Matrix& p) {
  if (p.rows() != p.cols()) throw InputError("projector must be square");
  return std::max(op_norm(p * p - p), op_norm(p - p.adjoint()));
}

bool is_projector(const Matrix& p, double tol) {
  return p.rows() == p.cols() && projector_defect(p) <= tol;
}

Matrix psd_range_basis(const Matrix& psd, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(psd);
  const auto& vals = eig.eigenvalues();
  std::vector<Index> keep;
  for (Index i = vals.size() - 1; i >= 0; --i) {
    if (vals(i) > cutoff) keep.push_back(i);
  }
  Matrix out(psd.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    out.col(static_cast<Index>(c)) = eig.eigenvectors().col(keep[c]);
  }
  return out;
}

Matrix range_basis(const Matrix& projector) {
  return psd_range_basis(projector, 0.5);
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix trace_out_second(const Matrix& m, Index outer, Index inner) {
  if (m.rows() != outer * inner || m.cols() != outer * inner) {
    throw InputError("trace_out_second: dimension mismatch");
  }
  Matrix out = Matrix::Zero(outer, outer);
  for (Index i = 0; i < outer; ++i) {
    for (Index j = 0; j < outer; ++j) {
      for (Index l = 0; l < inner; ++l) out(i, j) += m(i * inner + l, j * inner + l);
    }
  }
  return out;
}

Matrix trace_out_first(const Matrix& m, Index outer, Index inner) {
  if (m.rows() != outer * inner || m.cols() != outer * inner) {
    throw InputError("trace_out_first: dimension mismatch");
  }
  Matrix out = Matrix::Zero(inner, inner);
  for (Index i = 0; i < outer; ++i) out += m.block(i * inner, i * inner, inner, inner);
  return out;
}

Matrix hermitian_real_part(const Matrix& m) {
  return 0.5 * (m + m.adjoint());
}

Matrix hermitian_imag_part(const Matrix& m) {
  return Complex(0.0, -0.5) * (m - m.adjoint());
}

}  // namespace oaqec
