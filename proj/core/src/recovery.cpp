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

#include "oaqec/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "oaqec/errors.hpp"
#include "oaqec/random.hpp"

namespace oaqec {

namespace {

struct SectorFrame {
  Index n = 0;
  Index m = 0;
  Matrix frame;

  // v -> frame (v (x) |l>), an isometry C^n -> H.
  Matrix embedding(Index l) const {
    Matrix out(frame.rows(), n);
    for (Index i = 0; i < n; ++i) out.col(i) = frame.col(i * m + l);
    return out;
  }
};

struct SectorRecovery {
  std::vector<Matrix> kraus;
  Matrix syndrome;
  double scalarity = 0.0;
};

SectorRecovery recover_sector(const KrausChannel& channel, const SectorFrame& s,
                              double tol) {
  std::vector<Matrix> errors;
  for (const auto& e : channel.kraus()) {
    for (Index l = 0; l < s.m; ++l) errors.push_back(e * s.embedding(l));
  }
  const auto count = static_cast<Index>(errors.size());
  Matrix gram(count, count);
  SectorRecovery out;
  const Matrix one = identity(s.n);
  for (Index a = 0; a < count; ++a) {
    for (Index b = 0; b < count; ++b) {
      const Matrix g = errors[static_cast<std::size_t>(a)].adjoint() *
                       errors[static_cast<std::size_t>(b)];
      gram(a, b) = g.trace() / static_cast<double>(s.n);
      out.scalarity = std::max(out.scalarity, op_norm(g - gram(a, b) * one));
    }
  }
  if (out.scalarity > tol) {
    throw PreconditionError(
        "synthesize_recovery: error Gram blocks are not scalar (residual " +
        std::to_string(out.scalarity) + "); the algebra is not correctable");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_real_part(gram));
  const Matrix target = s.embedding(0);
  out.syndrome = Matrix::Zero(channel.dim_out(), channel.dim_out());
  for (Index i = count - 1; i >= 0; --i) {
    const double weight = eig.eigenvalues()(i);
    if (weight <= tol::kCanonicalWeight) continue;
    Matrix f = Matrix::Zero(channel.dim_out(), s.n);
    for (Index k = 0; k < count; ++k) {
      f += eig.eigenvectors()(k, i) * errors[static_cast<std::size_t>(k)];
    }
    f /= std::sqrt(weight);
    out.kraus.push_back(target * f.adjoint());
    out.syndrome += f * f.adjoint();
  }
  if (out.kraus.empty()) {
    throw PreconditionError("synthesize_recovery: the channel annihilates a code sector");
  }
  return out;
}

Matrix composed_dual(const KrausChannel& channel, const KrausChannel& recovery,
                     const Matrix& x) {
  return apply_dual(channel, apply_dual(recovery, x));
}

}  // namespace

RecoveryReport synthesize_recovery(const KrausChannel& channel, const Matrix& projector,
                                   const OperatorSpan& algebra,
                                   const AlgebraStructure& structure,
                                   const RecoveryOptions& options) {
  const Index din = channel.dim_in();
  const Index dout = channel.dim_out();
  if (projector.rows() != din || !is_projector(projector, tol::kTracePreserving)) {
    throw InputError("synthesize_recovery: P is not a projector on the channel input");
  }
  if (algebra.dim() != din || structure.ambient_dim != din) {
    throw InputError("synthesize_recovery: algebra dimension differs from channel input");
  }
  const Matrix& e = structure.unit;
  if (op_norm(projector * e * projector - e) > options.tol) {
    throw PreconditionError("synthesize_recovery: algebra is not supported in P H");
  }

  std::vector<SectorFrame> sectors;
  for (const auto& s : structure.sectors) sectors.push_back({s.n, s.m, s.frame});
  const Matrix complement = range_basis(projector - e);
  if (complement.cols() > 0) sectors.push_back({1, complement.cols(), complement});
  if (sectors.empty()) throw PreconditionError("synthesize_recovery: P is zero");

  std::vector<Matrix> kraus;
  std::vector<Matrix> syndromes;
  double scalarity = 0.0;
  Matrix covered = Matrix::Zero(dout, dout);
  for (const auto& s : sectors) {
    SectorRecovery r = recover_sector(channel, s, options.tol);
    scalarity = std::max(scalarity, r.scalarity);
    for (const auto& q : syndromes) {
      if (op_norm(q * r.syndrome) > options.tol) {
        throw PreconditionError(
            "synthesize_recovery: syndrome spaces of different sectors overlap");
      }
    }
    covered += r.syndrome;
    syndromes.push_back(std::move(r.syndrome));
    for (auto& k : r.kraus) kraus.push_back(std::move(k));
  }

  // Outside every syndrome: reset to P / Tr P.
  const Matrix rest = identity(dout) - covered;
  const Matrix rest_basis = psd_range_basis(hermitian_real_part(rest), 0.5);
  const Matrix code_basis = range_basis(projector);
  const double scale = 1.0 / std::sqrt(static_cast<double>(code_basis.cols()));
  for (Index j = 0; j < code_basis.cols(); ++j) {
    for (Index l = 0; l < rest_basis.cols(); ++l) {
      kraus.push_back(scale * code_basis.col(j) * rest_basis.col(l).adjoint());
    }
  }
  syndromes.push_back(rest);

  KrausChannel recovery(std::move(kraus));
  const double heisenberg = verify_heisenberg(channel, recovery, projector, algebra);
  const double schrodinger = verify_schrodinger(channel, recovery, structure,
                                                options.schrodinger_samples, options.seed);
  const double tp = recovery.tp_defect();
  return RecoveryReport{std::move(recovery), heisenberg, schrodinger, tp,
                        scalarity,           std::move(syndromes), complement.cols() > 0};
}

double verify_heisenberg(const KrausChannel& channel, const KrausChannel& recovery,
                         const Matrix& projector, const OperatorSpan& algebra) {
  if (recovery.dim_in() != channel.dim_out() || recovery.dim_out() != channel.dim_in()) {
    throw InputError("verify_heisenberg: recovery does not invert the channel's dimensions");
  }
  double worst = 0.0;
  for (const auto& x : algebra) {
    const Matrix back = composed_dual(channel, recovery, x);
    worst = std::max(worst, op_norm(projector * back * projector -
                                    projector * x * projector));
  }
  return worst;
}

double verify_schrodinger(const KrausChannel& channel, const KrausChannel& recovery,
                          const AlgebraStructure& structure, std::size_t sample_count,
                          std::uint64_t seed) {
  if (structure.sectors.empty()) return 0.0;
  Rng rng(seed);
  const Index d = structure.ambient_dim;
  double worst = 0.0;
  for (std::size_t sample = 0; sample < sample_count; ++sample) {
    const auto alpha = rng.simplex(structure.sectors.size());
    std::vector<Matrix> logical;
    Matrix rho = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < structure.sectors.size(); ++k) {
      const Sector& s = structure.sectors[k];
      logical.push_back(rng.density(s.n));
      rho += alpha[k] * s.frame * kron(logical.back(), rng.density(s.m)) *
             s.frame.adjoint();
    }
    const Matrix out = apply_state(recovery, apply_state(channel, rho));
    double captured = 0.0;
    for (std::size_t k = 0; k < structure.sectors.size(); ++k) {
      const Sector& s = structure.sectors[k];
      const Matrix block = s.frame.adjoint() * out * s.frame;
      captured += block.trace().real();
      const Matrix marginal = trace_out_second(block, s.n, s.m);
      worst = std::max(worst, op_norm(marginal - alpha[k] * logical[k]));
      const Matrix multiplicity = trace_out_first(block, s.n, s.m);
      worst = std::max(worst, op_norm(block - kron(logical[k], multiplicity)));
      for (std::size_t l = 0; l < structure.sectors.size(); ++l) {
        if (l == k) continue;
        worst = std::max(worst, op_norm(s.frame.adjoint() * out *
                                        structure.sectors[l].frame));
      }
    }
    worst = std::max(worst, std::abs(1.0 - captured));
  }
  return worst;
}

LiftedSpace lift_operator_space(const KrausChannel& channel,
                                const KrausChannel& recovery, const Matrix& projector,
                                const OperatorSpan& algebra, double tol) {
  const Index d = channel.dim_in();
  if (recovery.dim_in() != channel.dim_out() || recovery.dim_out() != d) {
    throw InputError("lift_operator_space: recovery dimensions do not match channel");
  }
  if (projector.rows() != d || algebra.dim() != d) {
    throw InputError("lift_operator_space: dimension mismatch");
  }
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const Matrix x = matrix_unit(d, i, j);
      if (op_norm(composed_dual(channel, recovery, x) -
                  composed_dual(channel, recovery, projector * x * projector)) > tol) {
        throw PreconditionError(
            "lift_operator_space: E^dag(R^dag(X)) depends on X outside P X P");
      }
    }
  }
  LiftedSpace out{OperatorSpan(d)};
  if (algebra.empty()) return out;
  std::vector<Matrix> images;
  for (const auto& x : algebra) images.push_back(composed_dual(channel, recovery, x));
  out.span = orthonormalize_span(images);
  for (const auto& x : out.span) {
    out.fixed_point_residual = std::max(
        out.fixed_point_residual, op_norm(composed_dual(channel, recovery, x) - x));
  }
  std::vector<Matrix> compressed;
  for (const auto& x : out.span) compressed.push_back(projector * x * projector);
  out.code_residual = span_residual(orthonormalize_span(compressed), algebra);
  out.closure_residual = closure_residual(out.span);
  out.multiplication_closed = out.closure_residual <= tol::kClosure;
  return out;
}

double verify_all_states(const KrausChannel& channel, const KrausChannel& recovery,
                         const OperatorSpan& lifted, const std::vector<Matrix>& states) {
  double worst = 0.0;
  for (const auto& x : lifted) {
    const Matrix back = composed_dual(channel, recovery, x);
    for (const auto& s : states) {
      worst = std::max(worst, std::abs((s * back).trace() - (s * x).trace()));
    }
  }
  return worst;
}

double verify_all_states(const KrausChannel& channel, const KrausChannel& recovery,
                         const OperatorSpan& lifted, std::size_t sample_count,
                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Matrix> states;
  for (std::size_t i = 0; i < sample_count; ++i) {
    states.push_back(rng.density(channel.dim_in()));
  }
  return verify_all_states(channel, recovery, lifted, states);
}

}  // namespace oaqec
