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

#include <vector>

#include "oaqec/linalg.hpp"
#include "oaqec/opspace.hpp"
#include "oaqec/random.hpp"

namespace oaqec::detail {

// Groups ascending eigenvalues into runs separated by gaps larger than gap.
std::vector<std::vector<Index>> cluster_sorted(const Eigen::VectorXd& values,
                                               double gap);

// A random self-adjoint element of a *-closed span, scaled to unit operator norm.
Matrix random_self_adjoint(const OperatorSpan& span, Rng& rng);

// A random (generally non-normal) element of a span.
Matrix random_element(const OperatorSpan& span, Rng& rng);

struct SpectralSplit {
  std::vector<Matrix> projectors;   // ambient-space spectral projectors
  std::vector<Matrix> eigenspaces;  // orthonormal columns per cluster
};

// Spectral projectors of a self-adjoint h restricted to the range of the
// isometry w, in ascending eigenvalue order.
SpectralSplit split_spectrum(const Matrix& h, const Matrix& w, double gap);

}  // namespace oaqec::detail
