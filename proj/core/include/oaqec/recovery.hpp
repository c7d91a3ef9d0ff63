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

// Recovery channels for correctable algebras, their verification in the
// Heisenberg and Schrodinger pictures, and the lift of a corrected algebra to
// an operator space that is corrected on every input state.

#pragma once

#include <cstdint>
#include <vector>

#include "oaqec/algebra.hpp"
#include "oaqec/channel.hpp"
#include "oaqec/opspace.hpp"
#include "oaqec/tolerances.hpp"

namespace oaqec {

struct RecoveryOptions {
  double tol = tol::kVerdict;
  std::size_t schrodinger_samples = 8;
  std::uint64_t seed = 0;
};

struct RecoveryReport {
  KrausChannel recovery;
  double heisenberg_residual = 0.0;
  double schrodinger_residual = 0.0;
  double tp_defect = 0.0;
  // Largest deviation of the error Gram blocks from scalar form; this is the
  // correctability condition the synthesis relies on.
  double scalarity_residual = 0.0;
  // One syndrome projector Q_k per structure sector, then one for the
  // complement sector P - 1_A when present, then Q_perp last.
  std::vector<Matrix> syndrome_projectors;
  bool has_complement_sector = false;
};

// Builds a trace-preserving recovery R for an algebra correctable on P H.
//
// For every sector (plus the complement P - 1_A, treated as n = 1) the error
// operators E_c iota_l are diagonalized into canonical errors F_i with
// F_i^dag F_j = delta_ij d_i 1; each contributes R = iota_psi (F_i/sqrt(d_i))^dag
// and the syndrome projector sum_i F_i F_i^dag / d_i. States found outside all
// syndromes are reset to P / Tr P.
//
// Throws PreconditionError when the Gram blocks are not scalar within tol
// (the algebra is not correctable) or a sector is annihilated by the channel.
RecoveryReport synthesize_recovery(const KrausChannel& channel, const Matrix& projector,
                                   const OperatorSpan& algebra,
                                   const AlgebraStructure& structure,
                                   const RecoveryOptions& options = {});

// max_X ||P E^dag(R^dag(X)) P - P X P|| over a basis of algebra.
double verify_heisenberg(const KrausChannel& channel, const KrausChannel& recovery,
                         const Matrix& projector, const OperatorSpan& algebra);

// Sends seeded random mixtures sum_k alpha_k frame_k (rho_k (x) tau_k) through
// R o E and reports the worst deviation from sum_k alpha_k rho_k (x) tau'_k:
// wrong logical marginals, non-product sector blocks, cross-sector coherence,
// or weight outside the sectors.
double verify_schrodinger(const KrausChannel& channel, const KrausChannel& recovery,
                          const AlgebraStructure& structure, std::size_t sample_count,
                          std::uint64_t seed);

struct LiftedSpace {
  OperatorSpan span;  // E^dag(R^dag(A))
  // max ||E^dag(R^dag(X)) - X|| over the span: correction on all states.
  double fixed_point_residual = 0.0;
  // Symmetric residual between P V P and A.
  double code_residual = 0.0;
  double closure_residual = 0.0;
  bool multiplication_closed = false;
};

// Requires E^dag(R^dag(X)) = E^dag(R^dag(P X P)) for all X, which holds when
// R^dag(X) = R^dag(P X P) as for synthesized recoveries. Checked on matrix
// units; throws PreconditionError otherwise.
LiftedSpace lift_operator_space(const KrausChannel& channel,
                                const KrausChannel& recovery, const Matrix& projector,
                                const OperatorSpan& algebra, double tol = tol::kVerdict);

// max |Tr(s E^dag(R^dag(X))) - Tr(s X)| over the given states s and lifted basis X.
double verify_all_states(const KrausChannel& channel, const KrausChannel& recovery,
                         const OperatorSpan& lifted, const std::vector<Matrix>& states);
// Same, over sample_count seeded full-rank states.
double verify_all_states(const KrausChannel& channel, const KrausChannel& recovery,
                         const OperatorSpan& lifted, std::size_t sample_count,
                         std::uint64_t seed);

}  // namespace oaqec
