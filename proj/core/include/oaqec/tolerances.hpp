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

namespace oaqec::tol {

// Relative singular-value cutoff for numerical rank and null spaces.
inline constexpr double kRank = 1e-9;
// Operator-norm threshold for every verdict (conserved, correctable, ...).
inline constexpr double kVerdict = 1e-8;
// Maximum ||sum_a E_a^dag E_a - 1|| for a channel to count as trace preserving.
inline constexpr double kTracePreserving = 1e-9;
// Products of basis pairs must project back into a span within this residual.
inline constexpr double kClosure = 1e-7;
// Eigenvalue gap separating spectral clusters (on unit-norm samples).
inline constexpr double kClusterGap = 1e-6;
// Operators at or below this Frobenius norm are treated as zero.
inline constexpr double kNegligibleNorm = 1e-12;
// Canonical error directions with weight at or below this are discarded.
inline constexpr double kCanonicalWeight = 1e-10;
// Orthonormality tolerance of a stored span basis.
inline constexpr double kOrthonormal = 1e-10;

}  // namespace oaqec::tol
