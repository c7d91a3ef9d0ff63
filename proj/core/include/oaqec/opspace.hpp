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

// Geometry of L(H) under the Hilbert-Schmidt inner product <A, B> = Tr(A^dag B).
//
// Matrices are vectorized by stacking columns (Eigen's native storage order),
// so vec(A X B) = (B^T kron A) vec(X). Every superoperator matrix built in this
// library follows that convention.

#pragma once

#include <span>
#include <vector>

#include "oaqec/linalg.hpp"
#include "oaqec/tolerances.hpp"

namespace oaqec {

Complex hs_inner(const Matrix& a, const Matrix& b);

// A linear subspace of L(C^dim), stored as a Hilbert-Schmidt orthonormal basis.
class OperatorSpan {
 public:
  // Empty span of L(C^dim).
  explicit OperatorSpan(Index dim);
  // basis must already be orthonormal (checked to tol::kOrthonormal).
  OperatorSpan(Index dim, std::vector<Matrix> basis);

  Index dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Matrix& operator[](std::size_t i) const { return basis_[i]; }
  auto begin() const { return basis_.begin(); }
  auto end() const { return basis_.end(); }

  // True iff the adjoint of every basis element lies in the span (to 1e-8).
  bool adjoint_closed() const { return adjoint_closed_; }

  // Orthogonal projection of x onto the span.
  Matrix project(const Matrix& x) const;
  // Frobenius distance from x to the span.
  double distance(const Matrix& x) const;
  bool contains(const Matrix& x, double tol = tol::kVerdict) const;

  // Matrix whose columns are vec(B_i); dim^2 x size().
  Matrix stacked() const;

 private:
  Index dim_;
  std::vector<Matrix> basis_;
  bool adjoint_closed_ = true;
};

// Orthonormal basis of span(mats). Rank is decided by singular values of the
// stacked vectorized matrices: values <= tol * largest are treated as zero.
OperatorSpan orthonormalize_span(std::span<const Matrix> mats,
                                 double tol = tol::kRank);

// max_i distance(of[i], in); zero iff span(of) is contained in span(in).
double containment_residual(const OperatorSpan& of, const OperatorSpan& in);
// Symmetric containment residual; zero iff the spans coincide.
double span_residual(const OperatorSpan& a, const OperatorSpan& b);

// max over basis pairs of the distance of B_i B_j from the span.
double closure_residual(const OperatorSpan& span);

// The linear condition L X - X R = 0 on an operator X.
struct LinearConstraint {
  Matrix left;
  Matrix right;
};

// [X, s] = 0.
LinearConstraint commutes_with(const Matrix& s);

// Orthonormal basis of { X = P X P : L_i X - X R_i = 0 for every i }.
// Constraints are normalized to unit size, stacked, and their joint null space
// is read off an SVD at relative threshold tol. Throws InputError when
// restriction is not an orthogonal projector.
OperatorSpan superop_kernel(std::span<const LinearConstraint> constraints,
                            const Matrix& restriction, double tol = tol::kRank);

}  // namespace oaqec
