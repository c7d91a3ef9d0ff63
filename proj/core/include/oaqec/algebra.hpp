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

// Finite-dimensional *-algebras of operators, carried as OperatorSpans.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oaqec/linalg.hpp"
#include "oaqec/opspace.hpp"
#include "oaqec/tolerances.hpp"

namespace oaqec {

// One simple sector L(A_k) (x) 1_{B_k} of an algebra.
struct Sector {
  Matrix projector;  // onto A_k (x) B_k
  Index n = 0;       // dim A_k (logical)
  Index m = 0;       // dim B_k (multiplicity)
  // Isometry C^n (x) C^m -> H onto Range(projector); column i*m + l is the
  // image of |i>|l>. Algebra elements look like a (x) 1_m in this frame.
  Matrix frame;
};

// Wedderburn data for an algebra: H = (+)_k (A_k (x) B_k) (+) K.
struct AlgebraStructure {
  Index ambient_dim = 0;
  std::vector<Sector> sectors;
  Matrix unit;
};

// Smallest *-closed, multiplication-closed span containing generators.
OperatorSpan generate_algebra(std::span<const Matrix> generators,
                              double tol = tol::kRank);

// { X = P X P : [X, s] = [X^dag, s] = 0 for all s } for s ranging over
// a basis of ops. The result is always *-closed.
OperatorSpan commutant(std::span<const Matrix> ops, const Matrix& projector,
                       double tol = tol::kRank);
OperatorSpan commutant(const OperatorSpan& ops, const Matrix& projector,
                       double tol = tol::kRank);

// The unit element of an algebra. Throws PreconditionError when the span has
// no unit within 1e-8 (not multiplication closed). The zero algebra has unit 0.
Matrix unit(const OperatorSpan& algebra);

OperatorSpan center(const OperatorSpan& algebra);

// Subspace intersection; tol bounds the sine of accepted principal angles.
OperatorSpan intersect(const OperatorSpan& a, const OperatorSpan& b,
                       double tol = tol::kVerdict);

struct WedderburnOptions {
  std::uint64_t seed = 0;
  int max_retries = 8;
  double tol = tol::kVerdict;
};

// Decomposes a *-algebra into simple sectors. Central projectors come from a
// random central element, multiplicity spaces from a random element of each
// sector, and the frames are aligned by polar decomposition. The result is
// verified against every basis element; a failed verification resamples with
// the next seed, and NumericalError is thrown once retries are exhausted.
//
// Sectors are ordered by descending rank, ties by the spectrum of the sampled
// central element.
AlgebraStructure wedderburn(const OperatorSpan& algebra,
                            const WedderburnOptions& options = {});

// frame (a (x) 1_m) frame^dag
Matrix embed_in_sector(const Sector& sector, const Matrix& logical);
// The logical block a of x ~ a (x) 1_m, i.e. Tr_B(frame^dag x frame) / m.
Matrix logical_part(const Sector& sector, const Matrix& x);

// Worst deviation, over the basis of algebra, from the block form promised by
// structure (block shape inside sectors plus reassembly of the element).
double structure_residual(const AlgebraStructure& structure,
                          const OperatorSpan& algebra);

// Span of all frame (a (x) 1_m) frame^dag, i.e. the algebra the structure
// describes.
OperatorSpan algebra_from_structure(const AlgebraStructure& structure);

}  // namespace oaqec
