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

// Random problem instances with known answers.
//
// A planted code is a block channel: on each sector C^n (x) C^m it acts as
// 1_n (x) B_c with sum_c B_c^dag B_c = 1, and a junk block outside the code
// is sent to its own output block. Conjugating by random unitaries on input
// and output hides the structure. The sector algebra is then correctable, and
// conserved when the output unitary equals the input one.

#pragma once

#include <utility>
#include <vector>

#include "oaqec/algebra.hpp"
#include "oaqec/channel.hpp"
#include "oaqec/opspace.hpp"
#include "oaqec/random.hpp"

namespace testing_support {

using oaqec::Index;
using oaqec::KrausChannel;
using oaqec::Matrix;
using oaqec::OperatorSpan;
using oaqec::Rng;

struct SectorShape {
  Index n;
  Index m;
};

struct PlantedCode {
  KrausChannel channel;
  Matrix projector;
  OperatorSpan algebra;
  Matrix input_unitary;
};

// Random isometry with the given shape (rows >= cols).
inline Matrix random_isometry(Rng& rng, Index rows, Index cols) {
  Eigen::HouseholderQR<Matrix> qr(rng.ginibre(rows, cols));
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

// Kraus blocks of a random channel C^in -> C^out with k elements. Requires
// k * out >= in.
inline std::vector<Matrix> random_kraus_blocks(Rng& rng, Index in, Index out, Index k) {
  const Matrix v = random_isometry(rng, k * out, in);
  std::vector<Matrix> blocks;
  for (Index c = 0; c < k; ++c) blocks.push_back(v.middleRows(c * out, out));
  return blocks;
}

inline KrausChannel random_channel(Rng& rng, Index in, Index out, Index k) {
  return KrausChannel(random_kraus_blocks(rng, in, out, k));
}

inline PlantedCode planted_code(Rng& rng, const std::vector<SectorShape>& sectors,
                                Index junk, Index kraus_count, bool conserved) {
  Index code = 0;
  for (const auto& s : sectors) code += s.n * s.m;
  const Index d = code + junk;
  std::vector<Matrix> kraus(static_cast<std::size_t>(kraus_count), Matrix::Zero(d, d));
  std::vector<Matrix> algebra;
  Index offset = 0;
  for (const auto& s : sectors) {
    const auto blocks = random_kraus_blocks(rng, s.m, s.m, kraus_count);
    for (Index c = 0; c < kraus_count; ++c) {
      kraus[static_cast<std::size_t>(c)].block(offset, offset, s.n * s.m, s.n * s.m) =
          oaqec::kron(oaqec::identity(s.n), blocks[static_cast<std::size_t>(c)]);
    }
    for (Index i = 0; i < s.n; ++i) {
      for (Index j = 0; j < s.n; ++j) {
        Matrix x = Matrix::Zero(d, d);
        x.block(offset, offset, s.n * s.m, s.n * s.m) =
            oaqec::kron(oaqec::matrix_unit(s.n, i, j), oaqec::identity(s.m));
        algebra.push_back(std::move(x));
      }
    }
    offset += s.n * s.m;
  }
  if (junk > 0) {
    const auto blocks = random_kraus_blocks(rng, junk, junk, kraus_count);
    for (Index c = 0; c < kraus_count; ++c) {
      kraus[static_cast<std::size_t>(c)].block(code, code, junk, junk) =
          blocks[static_cast<std::size_t>(c)];
    }
  }
  const Matrix u_in = rng.haar_unitary(d);
  const Matrix u_out = conserved ? u_in : rng.haar_unitary(d);
  for (auto& k : kraus) k = u_out * k * u_in.adjoint();
  for (auto& x : algebra) x = u_in * x * u_in.adjoint();
  Matrix p = Matrix::Zero(d, d);
  p.topLeftCorner(code, code) = Matrix::Identity(code, code);
  p = u_in * p * u_in.adjoint();
  return PlantedCode{KrausChannel(std::move(kraus)), p, oaqec::orthonormalize_span(algebra),
                     u_in};
}

// A selection of sector layouts with total dimension <= 8.
inline std::vector<std::vector<SectorShape>> small_layouts() {
  return {{{2, 1}},         {{2, 2}},         {{2, 1}, {1, 1}}, {{2, 1}, {2, 1}},
          {{3, 1}},         {{2, 1}, {1, 2}}, {{2, 3}},         {{3, 1}, {2, 1}},
          {{1, 1}, {1, 1}}, {{2, 2}, {1, 2}}};
}

}  // namespace testing_support
