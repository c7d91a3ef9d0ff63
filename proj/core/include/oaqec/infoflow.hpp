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

// System/apparatus information flow. A unitary interaction U with an apparatus
// prepared in psi_A defines V|psi> = U(|psi> (x) |psi_A>) and two channels out
// of the system: E_SS (keep the system) and E_SA (keep the apparatus). The
// algebras correctable for each, their intersection C (information held by
// both), and the correlation certificate of C are computed here.

#pragma once

#include <cstdint>
#include <vector>

#include "oaqec/channel.hpp"
#include "oaqec/opspace.hpp"
#include "oaqec/tolerances.hpp"

namespace oaqec {

struct InfoFlowCertificates {
  // A_SA computed as largest_correctable(E_SA) vs Alg(Ran E_SS^dag)'.
  double apparatus_algebra_agreement = 0.0;
  // C inside both A_SS and A_SA.
  double duplicated_containment = 0.0;
  // A_SA inside the commutant of A_SS.
  double commutant_containment = 0.0;
  // max ||[c, c']|| over basis pairs of C.
  double duplicated_commutativity = 0.0;
  // max ||F_a^dag F_b - E_SS^dag(|a><b|)||.
  double complementary_overlap = 0.0;
  // E_SS^dag(X_i) = P_i, E_SA^dag(Y_i) = P_i, POVM positivity and completeness.
  double povm_consistency = 0.0;
  // max |M_ij - delta_ij Tr(rho P_i)| over the sampled states.
  double correlation_deviation = 0.0;

  double worst() const;
};

struct InfoFlowReport {
  Isometry isometry;
  KrausChannel system_channel;     // E_SS
  KrausChannel apparatus_channel;  // E_SA
  OperatorSpan system_algebra;     // A_SS
  OperatorSpan apparatus_algebra;  // A_SA
  OperatorSpan duplicated;         // C = A_SS cap A_SA
  std::vector<Matrix> duplicated_projectors;  // P_i
  std::vector<Matrix> system_povm;            // X_i = R_SS^dag(P_i)
  std::vector<Matrix> apparatus_povm;         // Y_i = R_SA^dag(P_i)
  // M_ij = Tr(V rho V^dag (X_i (x) Y_j)) for the maximally mixed system state.
  RealMatrix correlation;
  InfoFlowCertificates certificates;

  bool certified(double tol = tol::kVerdict) const { return certificates.worst() <= tol; }
};

struct InfoFlowOptions {
  std::uint64_t seed = 0;
  std::size_t correlation_samples = 8;
};

// Throws InputError for a non-unitary U or non-normalized psi_A.
InfoFlowReport analyze_interaction(const Matrix& u, const Vector& psi_apparatus,
                                   const InfoFlowOptions& options = {});

// Minimal projectors of a commutative *-algebra, from the spectrum of a random
// self-adjoint element (resampled and re-verified up to 8 times). They sum to
// the unit of C and each lies in C. Throws InputError when C is not commutative.
std::vector<Matrix> duplicated_projectors(const OperatorSpan& duplicated,
                                          std::uint64_t seed = 0);

struct CorrelationResult {
  // One matrix M_ij per state.
  std::vector<RealMatrix> matrices;
  double max_deviation = 0.0;
};

// M_ij = Tr(V rho V^dag (X_i (x) Y_j)), compared against delta_ij Tr(rho P_i).
CorrelationResult correlation_matrix(const Isometry& v,
                                     const std::vector<Matrix>& projectors,
                                     const std::vector<Matrix>& system_povm,
                                     const std::vector<Matrix>& apparatus_povm,
                                     const std::vector<Matrix>& states);

}  // namespace oaqec
