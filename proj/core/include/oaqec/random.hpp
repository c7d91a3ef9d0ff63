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

#include <cstdint>
#include <random>
#include <vector>

#include "oaqec/linalg.hpp"

namespace oaqec {

// Seeded source of random matrices and states. Every randomized routine in
// the library takes its seed explicitly, so results are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal();
  double uniform();
  Complex complex_normal();

  // Entries i.i.d. standard complex Gaussian.
  Matrix ginibre(Index rows, Index cols);
  Matrix haar_unitary(Index dim);
  Matrix hermitian(Index dim);
  Vector unit_vector(Index dim);
  // Random density matrix of the given rank (rank <= 0 means full rank).
  Matrix density(Index dim, Index rank = 0);
  // Uniform sample from the probability simplex.
  std::vector<double> simplex(std::size_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace oaqec
