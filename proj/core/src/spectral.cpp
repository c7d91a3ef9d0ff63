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

#include "spectral.hpp"

namespace oaqec::detail {

std::vector<std::vector<Index>> cluster_sorted(const Eigen::VectorXd& values,
                                               double gap) {
  std::vector<std::vector<Index>> clusters;
  for (Index i = 0; i < values.size(); ++i) {
    if (clusters.empty() || values(i) - values(i - 1) > gap) clusters.emplace_back();
    clusters.back().push_back(i);
  }
  return clusters;
}

Matrix random_self_adjoint(const OperatorSpan& span, Rng& rng) {
  Matrix h = Matrix::Zero(span.dim(), span.dim());
  for (const auto& b : span) {
    h += rng.normal() * hermitian_real_part(b);
    h += rng.normal() * hermitian_imag_part(b);
  }
  const double norm = op_norm(h);
  if (norm > 0) h /= norm;
  return h;
}

Matrix random_element(const OperatorSpan& span, Rng& rng) {
  Matrix g = Matrix::Zero(span.dim(), span.dim());
  for (const auto& b : span) g += rng.complex_normal() * b;
  return g;
}

SpectralSplit split_spectrum(const Matrix& h, const Matrix& w, double gap) {
  SpectralSplit out;
  if (w.cols() == 0) return out;
  const Matrix compressed = w.adjoint() * h * w;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (compressed + compressed.adjoint()));
  for (const auto& cluster : cluster_sorted(eig.eigenvalues(), gap)) {
    Matrix cols(w.cols(), static_cast<Index>(cluster.size()));
    for (std::size_t c = 0; c < cluster.size(); ++c) {
      cols.col(static_cast<Index>(c)) = eig.eigenvectors().col(cluster[c]);
    }
    Matrix space = w * cols;
    out.projectors.push_back(space * space.adjoint());
    out.eigenspaces.push_back(std::move(space));
  }
  return out;
}

}  // namespace oaqec::detail
