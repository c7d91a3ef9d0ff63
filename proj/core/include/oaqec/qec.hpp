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

// Passive (conserved) and active (correctable) protection of operator
// algebras on a code subspace P H.

#pragma once

#include <optional>

#include "oaqec/algebra.hpp"
#include "oaqec/channel.hpp"
#include "oaqec/opspace.hpp"
#include "oaqec/tolerances.hpp"

namespace oaqec {

struct CodeContext {
  KrausChannel channel;
  Matrix projector;      // P
  OperatorSpan algebra;  // candidate algebra A
  // When set, A is an algebra containing P and the commutator tests range
  // over P A P; otherwise A must live inside L(P H).
  bool projector_in_algebra = false;

  // Throws InputError on any violated invariant.
  void validate() const;
};

struct Verdict {
  bool holds = false;
  // max_X ||P E^dag(X) P - P X P|| (conservation). Not computed for
  // correctability, which has no recovery-free definitional test.
  std::optional<double> residual_definition;
  // max_{a,X} ||[E_a P, X]|| (conservation) or ||[P E_a^dag E_b P, X]||
  // (correctability).
  double residual_commutator = 0.0;
  Index algebra_dim = 0;
};

// Evaluates both the definition P E^dag(X) P = P X P and the commutator
// criterion [E_a P, X] = 0; holds iff both residuals are <= tol.
Verdict is_conserved(const CodeContext& ctx, double tol = tol::kVerdict);

// Holds iff [P E_a^dag E_b P, X] = 0 for all Kraus pairs and basis X.
Verdict is_correctable(const CodeContext& ctx, double tol = tol::kVerdict);

// Commutant of { E_a P, P E_a^dag } inside L(P H): the largest algebra
// conserved for states in P H.
OperatorSpan largest_conserved(const KrausChannel& channel, const Matrix& projector,
                               double tol = tol::kRank);

// Commutant of { P E_a^dag E_b P } inside L(P H): the largest algebra
// correctable for states in P H.
OperatorSpan largest_correctable(const KrausChannel& channel,
                                 const Matrix& projector, double tol = tol::kRank);

struct SubsystemVerdict {
  bool holds = false;
  double residual = 0.0;
};

// Checks P_k E^dag(X (x) 1) P_k = X (x) 1 on the matrix units X of L(A_k),
// where P_k projects onto sector k of structure.
SubsystemVerdict noiseless_subsystem_check(const KrausChannel& channel,
                                           const AlgebraStructure& structure,
                                           std::size_t sector,
                                           double tol = tol::kVerdict);

// Tr(E(rho) P) for a state rho supported in P H.
double repeatability_probability(const KrausChannel& channel, const Matrix& projector,
                                 const Matrix& rho);

// Orthonormal basis of P A P.
OperatorSpan compress(const OperatorSpan& algebra, const Matrix& projector);

}  // namespace oaqec
