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

#include "oaqec/random.hpp"

#include <cmath>

namespace oaqec {

double Rng::normal() { return normal_(engine_); }

double Rng::uniform() { return uniform_(engine_); }

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

Matrix Rng::ginibre(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
  }
  return m;
}

Matrix Rng::haar_unitary(Index dim) {
  Eigen::HouseholderQR<Matrix> qr(ginibre(dim, dim));
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so Q is Haar distributed.
  for (Index i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    if (a > 0) q.col(i) *= d / a;
  }
  return q;
}

Matrix Rng::hermitian(Index dim) {
  Matrix g = ginibre(dim, dim);
  return 0.5 * (g + g.adjoint());
}

Vector Rng::unit_vector(Index dim) {
  Vector v = ginibre(dim, 1).col(0);
  return v / v.norm();
}

Matrix Rng::density(Index dim, Index rank) {
  if (rank <= 0 || rank > dim) rank = dim;
  Matrix g = ginibre(dim, rank);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

std::vector<double> Rng::simplex(std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - uniform());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace oaqec
