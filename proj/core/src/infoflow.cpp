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

#include "oaqec/infoflow.hpp"

#include <algorithm>
#include <cmath>

#include "oaqec/algebra.hpp"
#include "oaqec/errors.hpp"
#include "oaqec/qec.hpp"
#include "oaqec/random.hpp"
#include "oaqec/recovery.hpp"
#include "spectral.hpp"

namespace oaqec {

double InfoFlowCertificates::worst() const {
  return std::max({apparatus_algebra_agreement, duplicated_containment,
                   commutant_containment, duplicated_commutativity,
                   complementary_overlap, povm_consistency, correlation_deviation});
}

std::vector<Matrix> duplicated_projectors(const OperatorSpan& duplicated,
                                          std::uint64_t seed) {
  const Index d = duplicated.dim();
  if (duplicated.empty()) return {};
  for (const auto& a : duplicated) {
    for (const auto& b : duplicated) {
      if (op_norm(commutator(a, b)) > tol::kVerdict) {
        throw InputError("duplicated_projectors: algebra is not commutative");
      }
    }
  }
  const Matrix e = unit(duplicated);
  const Matrix support = range_basis(e);
  constexpr int kRetries = 8;
  for (int attempt = 0; attempt <= kRetries; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    auto split = detail::split_spectrum(detail::random_self_adjoint(duplicated, rng),
                                        support, tol::kClusterGap);
    if (split.projectors.size() != duplicated.size()) continue;
    bool ok = true;
    Matrix total = Matrix::Zero(d, d);
    for (const auto& p : split.projectors) {
      ok = ok && duplicated.contains(p, tol::kVerdict);
      total += p;
    }
    if (ok && op_norm(total - e) <= tol::kVerdict) return std::move(split.projectors);
  }
  throw NumericalError("duplicated_projectors: could not certify spectral projectors");
}

CorrelationResult correlation_matrix(const Isometry& v,
                                     const std::vector<Matrix>& projectors,
                                     const std::vector<Matrix>& system_povm,
                                     const std::vector<Matrix>& apparatus_povm,
                                     const std::vector<Matrix>& states) {
  const auto n = static_cast<Index>(projectors.size());
  if (static_cast<Index>(system_povm.size()) != n ||
      static_cast<Index>(apparatus_povm.size()) != n) {
    throw InputError("correlation_matrix: POVM families must match the projectors");
  }
  CorrelationResult out;
  for (const auto& rho : states) {
    const Matrix joint = v.matrix * rho * v.matrix.adjoint();
    RealMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
      const double expected_diag =
          (rho * projectors[static_cast<std::size_t>(i)]).trace().real();
      for (Index j = 0; j < n; ++j) {
        const Complex value = (joint * kron(system_povm[static_cast<std::size_t>(i)],
                                            apparatus_povm[static_cast<std::size_t>(j)]))
                                  .trace();
        m(i, j) = value.real();
        const double expected = i == j ? expected_diag : 0.0;
        out.max_deviation = std::max(out.max_deviation, std::abs(value - expected));
      }
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

InfoFlowReport analyze_interaction(const Matrix& u, const Vector& psi_apparatus,
                                   const InfoFlowOptions& options) {
  Isometry v = isometry_from_unitary(u, psi_apparatus);
  auto [system_channel, apparatus_channel] = marginal_channels(v);
  const Index ds = v.system_dim;
  const Matrix one = identity(ds);

  OperatorSpan system_algebra = largest_correctable(system_channel, one);
  OperatorSpan apparatus_algebra = largest_correctable(apparatus_channel, one);

  InfoFlowCertificates cert;

  // Second route to A_SA: the commutant of the algebra generated by the range
  // of E_SS^dag.
  std::vector<Matrix> range;
  for (Index a = 0; a < ds; ++a) {
    for (Index b = 0; b < ds; ++b) {
      range.push_back(apply_dual(system_channel, matrix_unit(ds, a, b)));
    }
  }
  const OperatorSpan range_algebra = generate_algebra(range);
  cert.apparatus_algebra_agreement =
      span_residual(apparatus_algebra, commutant(range_algebra, one));

  for (const auto& x : apparatus_algebra) {
    for (const auto& y : system_algebra) {
      cert.commutant_containment =
          std::max(cert.commutant_containment, op_norm(commutator(x, y)));
    }
  }

  OperatorSpan duplicated = intersect(system_algebra, apparatus_algebra);
  cert.duplicated_containment = std::max(containment_residual(duplicated, system_algebra),
                                         containment_residual(duplicated, apparatus_algebra));
  for (const auto& a : duplicated) {
    for (const auto& b : duplicated) {
      cert.duplicated_commutativity =
          std::max(cert.duplicated_commutativity, op_norm(commutator(a, b)));
    }
  }

  for (Index a = 0; a < ds; ++a) {
    for (Index b = 0; b < ds; ++b) {
      const Matrix lhs = apparatus_channel[static_cast<std::size_t>(a)].adjoint() *
                         apparatus_channel[static_cast<std::size_t>(b)];
      const Matrix rhs = apply_dual(system_channel, matrix_unit(ds, a, b));
      cert.complementary_overlap = std::max(cert.complementary_overlap, op_norm(lhs - rhs));
    }
  }

  std::vector<Matrix> projectors = duplicated_projectors(duplicated, options.seed);

  RecoveryOptions ropts;
  ropts.seed = options.seed;
  const RecoveryReport system_recovery = synthesize_recovery(
      system_channel, one, system_algebra,
      wedderburn(system_algebra, {.seed = options.seed}), ropts);
  const RecoveryReport apparatus_recovery = synthesize_recovery(
      apparatus_channel, one, apparatus_algebra,
      wedderburn(apparatus_algebra, {.seed = options.seed}), ropts);

  std::vector<Matrix> system_povm;
  std::vector<Matrix> apparatus_povm;
  Matrix system_sum = Matrix::Zero(ds, ds);
  Matrix apparatus_sum = Matrix::Zero(v.apparatus_dim, v.apparatus_dim);
  for (const auto& p : projectors) {
    system_povm.push_back(apply_dual(system_recovery.recovery, p));
    apparatus_povm.push_back(apply_dual(apparatus_recovery.recovery, p));
    system_sum += system_povm.back();
    apparatus_sum += apparatus_povm.back();
    cert.povm_consistency = std::max(
        {cert.povm_consistency,
         op_norm(apply_dual(system_channel, system_povm.back()) - p),
         op_norm(apply_dual(apparatus_channel, apparatus_povm.back()) - p)});
    for (const Matrix* x : {&system_povm.back(), &apparatus_povm.back()}) {
      Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_real_part(*x));
      const double below = -eig.eigenvalues().minCoeff();
      const double above = eig.eigenvalues().maxCoeff() - 1.0;
      cert.povm_consistency =
          std::max({cert.povm_consistency, below, above, op_norm(*x - x->adjoint())});
    }
  }
  if (!projectors.empty()) {
    cert.povm_consistency = std::max(
        {cert.povm_consistency, op_norm(system_sum - one),
         op_norm(apparatus_sum - identity(v.apparatus_dim))});
  }

  std::vector<Matrix> states{one / static_cast<double>(ds)};
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.correlation_samples; ++i) {
    states.push_back(rng.density(ds));
  }
  CorrelationResult corr =
      correlation_matrix(v, projectors, system_povm, apparatus_povm, states);
  cert.correlation_deviation = corr.max_deviation;

  return InfoFlowReport{std::move(v),
                        std::move(system_channel),
                        std::move(apparatus_channel),
                        std::move(system_algebra),
                        std::move(apparatus_algebra),
                        std::move(duplicated),
                        std::move(projectors),
                        std::move(system_povm),
                        std::move(apparatus_povm),
                        std::move(corr.matrices.front()),
                        cert};
}

}  // namespace oaqec
