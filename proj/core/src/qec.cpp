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

#include "oaqec/qec.hpp"

#include <algorithm>

#include "oaqec/errors.hpp"

namespace oaqec {

namespace {

void require_square(const KrausChannel& channel, const char* what) {
  if (channel.dim_in() != channel.dim_out()) {
    throw InputError(std::string(what) + ": channel must map L(H) to itself");
  }
}

void require_projector(const Matrix& p, Index dim, const char* what) {
  if (p.rows() != dim || p.cols() != dim) {
    throw InputError(std::string(what) + ": projector has the wrong dimension");
  }
  if (!is_projector(p, tol::kTracePreserving)) {
    throw InputError(std::string(what) + ": P is not an orthogonal projector");
  }
}

// The operators X the commutator criteria range over.
OperatorSpan test_algebra(const CodeContext& ctx) {
  return ctx.projector_in_algebra ? compress(ctx.algebra, ctx.projector) : ctx.algebra;
}

}  // namespace

void CodeContext::validate() const {
  require_projector(projector, channel.dim_in(), "CodeContext");
  if (algebra.dim() != channel.dim_in()) {
    throw InputError("CodeContext: algebra dimension differs from channel input");
  }
  if (projector_in_algebra) {
    if (!algebra.contains(projector, tol::kVerdict)) {
      throw InputError("CodeContext: P does not lie in the algebra");
    }
    return;
  }
  for (const auto& x : algebra) {
    if (op_norm(projector * x * projector - x) > tol::kVerdict) {
      throw InputError("CodeContext: algebra element not supported in P H");
    }
  }
}

OperatorSpan compress(const OperatorSpan& algebra, const Matrix& projector) {
  if (algebra.empty()) return algebra;
  std::vector<Matrix> parts;
  for (const auto& x : algebra) parts.push_back(projector * x * projector);
  return orthonormalize_span(parts);
}

Verdict is_conserved(const CodeContext& ctx, double tol) {
  ctx.validate();
  require_square(ctx.channel, "is_conserved");
  const Matrix& p = ctx.projector;
  double definition = 0.0;
  for (const auto& x : ctx.algebra) {
    definition = std::max(
        definition, op_norm(p * apply_dual(ctx.channel, x) * p - p * x * p));
  }
  double comm = 0.0;
  for (const auto& x : test_algebra(ctx)) {
    for (const auto& e : ctx.channel.kraus()) {
      comm = std::max(comm, op_norm(commutator(e * p, x)));
    }
  }
  return {definition <= tol && comm <= tol, definition, comm,
          static_cast<Index>(ctx.algebra.size())};
}

Verdict is_correctable(const CodeContext& ctx, double tol) {
  ctx.validate();
  const Matrix& p = ctx.projector;
  const OperatorSpan xs = test_algebra(ctx);
  double comm = 0.0;
  for (const auto& ea : ctx.channel.kraus()) {
    for (const auto& eb : ctx.channel.kraus()) {
      const Matrix m = p * ea.adjoint() * eb * p;
      for (const auto& x : xs) comm = std::max(comm, op_norm(commutator(m, x)));
    }
  }
  return {comm <= tol, std::nullopt, comm, static_cast<Index>(ctx.algebra.size())};
}

OperatorSpan largest_conserved(const KrausChannel& channel, const Matrix& projector,
                               double tol) {
  require_square(channel, "largest_conserved");
  require_projector(projector, channel.dim_in(), "largest_conserved");
  std::vector<Matrix> ops;
  for (const auto& e : channel.kraus()) ops.push_back(e * projector);
  return commutant(std::span<const Matrix>(ops), projector, tol);
}

OperatorSpan largest_correctable(const KrausChannel& channel,
                                 const Matrix& projector, double tol) {
  require_projector(projector, channel.dim_in(), "largest_correctable");
  // Every ordered pair; the set is closed under adjoints (a <-> b), so the
  // plain commutant constraints suffice.
  std::vector<LinearConstraint> constraints;
  for (const auto& ea : channel.kraus()) {
    for (const auto& eb : channel.kraus()) {
      Matrix m = projector * ea.adjoint() * eb * projector;
      if (m.norm() <= tol::kNegligibleNorm) continue;
      constraints.push_back(commutes_with(m));
    }
  }
  return superop_kernel(constraints, projector, tol);
}

SubsystemVerdict noiseless_subsystem_check(const KrausChannel& channel,
                                           const AlgebraStructure& structure,
                                           std::size_t sector, double tol) {
  require_square(channel, "noiseless_subsystem_check");
  if (sector >= structure.sectors.size()) {
    throw InputError("noiseless_subsystem_check: sector index out of range");
  }
  if (structure.ambient_dim != channel.dim_in()) {
    throw InputError("noiseless_subsystem_check: structure dimension mismatch");
  }
  const Sector& s = structure.sectors[sector];
  double worst = 0.0;
  for (Index i = 0; i < s.n; ++i) {
    for (Index j = 0; j < s.n; ++j) {
      const Matrix x = embed_in_sector(s, matrix_unit(s.n, i, j));
      worst = std::max(
          worst, op_norm(s.projector * apply_dual(channel, x) * s.projector - x));
    }
  }
  return {worst <= tol, worst};
}

double repeatability_probability(const KrausChannel& channel, const Matrix& projector,
                                 const Matrix& rho) {
  require_square(channel, "repeatability_probability");
  require_projector(projector, channel.dim_in(), "repeatability_probability");
  if (rho.rows() != channel.dim_in() || rho.cols() != channel.dim_in()) {
    throw InputError("repeatability_probability: state dimension mismatch");
  }
  if (op_norm(projector * rho * projector - rho) > tol::kTracePreserving) {
    throw InputError("repeatability_probability: state is not supported in P H");
  }
  return (apply_state(channel, rho) * projector).trace().real();
}

}  // namespace oaqec
