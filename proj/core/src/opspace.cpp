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

#include "oaqec/opspace.hpp"

#include <algorithm>
#include <cmath>

#include "oaqec/errors.hpp"

namespace oaqec {

namespace {

// Columns of u (rows dim*dim) become matrices.
std::vector<Matrix> columns_as_matrices(const Matrix& u, Index count, Index dim) {
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index c = 0; c < count; ++c) out.push_back(unvec(u.col(c), dim, dim));
  return out;
}

}  // namespace

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("hs_inner: dimension mismatch");
  }
  // Tr(A^dag B) = sum_ij conj(A_ij) B_ij
  return (a.array().conjugate() * b.array()).sum();
}

OperatorSpan::OperatorSpan(Index dim) : dim_(dim) {
  if (dim <= 0) throw InputError("OperatorSpan: dimension must be positive");
}

OperatorSpan::OperatorSpan(Index dim, std::vector<Matrix> basis)
    : dim_(dim), basis_(std::move(basis)) {
  if (dim <= 0) throw InputError("OperatorSpan: dimension must be positive");
  for (const auto& b : basis_) {
    if (b.rows() != dim || b.cols() != dim) {
      throw InputError("OperatorSpan: basis element has wrong dimension");
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i; j < basis_.size(); ++j) {
      const Complex g = hs_inner(basis_[i], basis_[j]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(g - want) > tol::kOrthonormal) {
        throw InputError("OperatorSpan: basis is not orthonormal");
      }
    }
  }
  for (const auto& b : basis_) {
    if (distance(b.adjoint()) > tol::kVerdict) {
      adjoint_closed_ = false;
      break;
    }
  }
}

Matrix OperatorSpan::project(const Matrix& x) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const auto& b : basis_) out += hs_inner(b, x) * b;
  return out;
}

double OperatorSpan::distance(const Matrix& x) const {
  return (x - project(x)).norm();
}

bool OperatorSpan::contains(const Matrix& x, double tol) const {
  return distance(x) <= tol;
}

Matrix OperatorSpan::stacked() const {
  Matrix out(dim_ * dim_, static_cast<Index>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    out.col(static_cast<Index>(i)) = vec(basis_[i]);
  }
  return out;
}

OperatorSpan orthonormalize_span(std::span<const Matrix> mats, double tol) {
  if (mats.empty()) throw InputError("orthonormalize_span: empty input");
  const Index dim = mats.front().rows();
  Matrix stack(dim * dim, static_cast<Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != dim || mats[i].cols() != dim) {
      throw InputError("orthonormalize_span: dimension mismatch");
    }
    stack.col(static_cast<Index>(i)) = vec(mats[i]);
  }
  Eigen::BDCSVD<Matrix> svd(stack, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return OperatorSpan(dim);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol * sv(0)) ++rank;
  return OperatorSpan(dim, columns_as_matrices(svd.matrixU(), rank, dim));
}

double containment_residual(const OperatorSpan& of, const OperatorSpan& in) {
  if (of.dim() != in.dim()) throw InputError("span dimension mismatch");
  double worst = 0.0;
  for (const auto& b : of) worst = std::max(worst, in.distance(b));
  return worst;
}

double span_residual(const OperatorSpan& a, const OperatorSpan& b) {
  if (a.size() != b.size()) return std::max(1.0, containment_residual(a, b));
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

double closure_residual(const OperatorSpan& span) {
  double worst = 0.0;
  for (const auto& x : span) {
    for (const auto& y : span) worst = std::max(worst, span.distance(x * y));
  }
  return worst;
}

LinearConstraint commutes_with(const Matrix& s) { return {s, s}; }

OperatorSpan superop_kernel(std::span<const LinearConstraint> constraints,
                            const Matrix& restriction, double tol) {
  const Index dim = restriction.rows();
  if (!is_projector(restriction, tol::kTracePreserving)) {
    throw InputError("superop_kernel: restriction is not an orthogonal projector");
  }
  const Matrix w = range_basis(restriction);
  const Index r = w.cols();
  if (r == 0) return OperatorSpan(dim);

  // X = W Y W^dag with Y in L(C^r); each constraint becomes a dim^2 x r^2 block.
  std::vector<Matrix> blocks;
  for (const auto& c : constraints) {
    if (c.left.rows() != dim || c.left.cols() != dim || c.right.rows() != dim ||
        c.right.cols() != dim) {
      throw InputError("superop_kernel: constraint dimension mismatch");
    }
    const double scale = std::max(c.left.norm(), c.right.norm());
    if (scale <= tol::kNegligibleNorm) continue;
    const Matrix lw = c.left * w / scale;
    const Matrix wr = w.adjoint() * c.right / scale;
    blocks.push_back(kron(w.conjugate(), lw) - kron(wr.transpose(), w));
  }

  const Index cols = r * r;
  std::vector<Matrix> kernel;
  if (blocks.empty()) {
    for (Index c = 0; c < cols; ++c) {
      kernel.push_back(w * unvec(basis_vector(cols, c), r, r) * w.adjoint());
    }
    return OperatorSpan(dim, std::move(kernel));
  }

  Matrix stack(static_cast<Index>(blocks.size()) * dim * dim, cols);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    stack.middleRows(static_cast<Index>(b) * dim * dim, dim * dim) = blocks[b];
  }
  // Tall stacks are reduced to their square R factor; singular values agree.
  if (stack.rows() > cols) {
    Eigen::HouseholderQR<Matrix> qr(stack);
    stack = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  }
  Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // Constraints are normalized to unit scale, so a largest singular value far
  // below 1 means every constraint is trivially satisfied (e.g. [X, 1] = 0).
  const double cutoff = tol * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  for (Index c = rank; c < cols; ++c) {
    kernel.push_back(w * unvec(svd.matrixV().col(c), r, r) * w.adjoint());
  }
  return OperatorSpan(dim, std::move(kernel));
}

}  // namespace oaqec
