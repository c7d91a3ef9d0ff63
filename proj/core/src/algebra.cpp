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

#include "oaqec/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "oaqec/errors.hpp"
#include "oaqec/random.hpp"
#include "spectral.hpp"

namespace oaqec {

OperatorSpan generate_algebra(std::span<const Matrix> generators, double tol) {
  if (generators.empty()) throw InputError("generate_algebra: no generators");
  std::vector<Matrix> pool;
  for (const auto& g : generators) {
    pool.push_back(g);
    pool.push_back(g.adjoint());
  }
  OperatorSpan current = orthonormalize_span(pool, tol);
  const Index cap = current.dim() * current.dim();
  while (!current.empty()) {
    pool.assign(current.begin(), current.end());
    for (const auto& x : current) {
      for (const auto& y : current) pool.push_back(x * y);
    }
    OperatorSpan next = orthonormalize_span(pool, tol);
    if (next.size() == current.size() || static_cast<Index>(next.size()) >= cap) {
      return next;
    }
    current = std::move(next);
  }
  return current;
}

OperatorSpan commutant(std::span<const Matrix> ops, const Matrix& projector,
                       double tol) {
  std::vector<LinearConstraint> constraints;
  for (const auto& s : ops) {
    if (s.rows() != projector.rows() || s.cols() != projector.cols()) {
      throw InputError("commutant: operator and projector dimensions differ");
    }
    constraints.push_back(commutes_with(s));
    constraints.push_back(commutes_with(s.adjoint()));
  }
  return superop_kernel(constraints, projector, tol);
}

OperatorSpan commutant(const OperatorSpan& ops, const Matrix& projector,
                       double tol) {
  if (ops.dim() != projector.rows()) {
    throw InputError("commutant: span and projector dimensions differ");
  }
  if (ops.adjoint_closed()) {
    std::vector<LinearConstraint> constraints;
    for (const auto& s : ops) constraints.push_back(commutes_with(s));
    return superop_kernel(constraints, projector, tol);
  }
  return commutant(std::span<const Matrix>(ops.basis()), projector, tol);
}

Matrix unit(const OperatorSpan& algebra) {
  const Index d = algebra.dim();
  const auto n = static_cast<Index>(algebra.size());
  if (n == 0) return Matrix::Zero(d, d);
  const Index block = d * d;
  // Solve e B_i = B_i and B_i e = B_i jointly for e = sum_j c_j B_j.
  Matrix system(2 * n * block, n);
  Vector rhs(2 * n * block);
  for (Index i = 0; i < n; ++i) {
    const Matrix& bi = algebra[static_cast<std::size_t>(i)];
    rhs.segment(2 * i * block, block) = vec(bi);
    rhs.segment((2 * i + 1) * block, block) = vec(bi);
    for (Index j = 0; j < n; ++j) {
      const Matrix& bj = algebra[static_cast<std::size_t>(j)];
      system.block(2 * i * block, j, block, 1) = vec(bj * bi);
      system.block((2 * i + 1) * block, j, block, 1) = vec(bi * bj);
    }
  }
  const Vector c = system.colPivHouseholderQr().solve(rhs);
  Matrix e = Matrix::Zero(d, d);
  for (Index j = 0; j < n; ++j) e += c(j) * algebra[static_cast<std::size_t>(j)];
  double residual = 0.0;
  for (const auto& b : algebra) {
    residual = std::max({residual, op_norm(e * b - b), op_norm(b * e - b)});
  }
  if (residual > tol::kVerdict) {
    throw PreconditionError("unit: span is not an algebra (unit residual " +
                            std::to_string(residual) + ")");
  }
  return hermitian_real_part(e);
}

OperatorSpan center(const OperatorSpan& algebra) {
  if (algebra.empty()) return algebra;
  const Matrix e = unit(algebra);
  return intersect(algebra, commutant(algebra, e));
}

OperatorSpan intersect(const OperatorSpan& a, const OperatorSpan& b, double tol) {
  if (a.dim() != b.dim()) throw InputError("intersect: dimension mismatch");
  const Index d = a.dim();
  if (a.empty() || b.empty()) return OperatorSpan(d);
  const Matrix am = a.stacked();
  const Matrix bm = b.stacked();
  // Coefficient vectors c with (1 - Pi_B) A c = 0.
  const Matrix outside = am - bm * (bm.adjoint() * am);
  Eigen::JacobiSVD<Matrix> svd(outside, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Index n = am.cols();
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol) ++rank;
  std::vector<Matrix> basis;
  for (Index c = rank; c < n; ++c) {
    basis.push_back(unvec(am * svd.matrixV().col(c), d, d));
  }
  return OperatorSpan(d, std::move(basis));
}

Matrix embed_in_sector(const Sector& sector, const Matrix& logical) {
  return sector.frame * kron(logical, identity(sector.m)) * sector.frame.adjoint();
}

Matrix logical_part(const Sector& sector, const Matrix& x) {
  const Matrix block = sector.frame.adjoint() * x * sector.frame;
  return trace_out_second(block, sector.n, sector.m) / static_cast<double>(sector.m);
}

double structure_residual(const AlgebraStructure& structure,
                          const OperatorSpan& algebra) {
  double worst = 0.0;
  for (const auto& x : algebra) {
    Matrix rebuilt = Matrix::Zero(x.rows(), x.cols());
    for (const auto& s : structure.sectors) {
      const Matrix a = logical_part(s, x);
      const Matrix block = s.frame.adjoint() * x * s.frame;
      worst = std::max(worst, op_norm(block - kron(a, identity(s.m))));
      rebuilt += embed_in_sector(s, a);
    }
    worst = std::max(worst, op_norm(rebuilt - x));
  }
  return worst;
}

OperatorSpan algebra_from_structure(const AlgebraStructure& structure) {
  std::vector<Matrix> units;
  for (const auto& s : structure.sectors) {
    for (Index i = 0; i < s.n; ++i) {
      for (Index j = 0; j < s.n; ++j) {
        units.push_back(embed_in_sector(s, matrix_unit(s.n, i, j)));
      }
    }
  }
  if (units.empty()) return OperatorSpan(structure.ambient_dim);
  return orthonormalize_span(units);
}

namespace {

std::optional<AlgebraStructure> try_decompose(const OperatorSpan& algebra,
                                              const Matrix& e,
                                              const OperatorSpan& centre,
                                              std::uint64_t seed, double tol) {
  Rng rng(seed);
  const Index d = algebra.dim();
  const Matrix support = range_basis(e);

  const auto central = detail::split_spectrum(
      detail::random_self_adjoint(centre, rng), support, tol::kClusterGap);
  if (central.projectors.size() != centre.size()) return std::nullopt;

  AlgebraStructure out{d, {}, e};
  Index total = 0;
  for (std::size_t k = 0; k < central.projectors.size(); ++k) {
    const Matrix& pk = central.projectors[k];
    const Matrix& wk = central.eigenspaces[k];
    const Index rank = wk.cols();

    std::vector<Matrix> parts;
    for (const auto& b : algebra) parts.push_back(b * pk);
    const OperatorSpan block = orthonormalize_span(parts);
    const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(block.size()))));
    if (n == 0 || n * n != static_cast<Index>(block.size()) || rank % n != 0) {
      return std::nullopt;
    }
    const Index m = rank / n;
    total += n * n;

    const auto inner = detail::split_spectrum(
        detail::random_self_adjoint(block, rng), wk, tol::kClusterGap);
    if (static_cast<Index>(inner.eigenspaces.size()) != n) return std::nullopt;
    for (const auto& space : inner.eigenspaces) {
      if (space.cols() != m) return std::nullopt;
    }

    // Align each eigenspace basis with the first via the polar part of the
    // compression of a generic element: V_0^dag g V_i = g_0i * (unitary).
    const Matrix g = detail::random_element(block, rng);
    const Matrix& v0 = inner.eigenspaces.front();
    Matrix frame(d, n * m);
    frame.middleCols(0, m) = v0;
    for (Index i = 1; i < n; ++i) {
      const Matrix& vi = inner.eigenspaces[static_cast<std::size_t>(i)];
      const Matrix c = v0.adjoint() * g * vi;
      Eigen::JacobiSVD<Matrix> svd(c);
      const auto& sv = svd.singularValues();
      if (sv(0) <= 0.0 || sv(m - 1) < 1e-6 * sv(0)) return std::nullopt;
      frame.middleCols(i * m, m) = vi * polar_unitary(c).adjoint();
    }
    out.sectors.push_back({pk, n, m, std::move(frame)});
  }
  if (total != static_cast<Index>(algebra.size())) return std::nullopt;

  std::stable_sort(out.sectors.begin(), out.sectors.end(),
                   [](const Sector& a, const Sector& b) { return a.n * a.m > b.n * b.m; });
  if (structure_residual(out, algebra) > tol) return std::nullopt;
  return out;
}

}  // namespace

AlgebraStructure wedderburn(const OperatorSpan& algebra,
                            const WedderburnOptions& options) {
  const Index d = algebra.dim();
  if (algebra.empty()) return {d, {}, Matrix::Zero(d, d)};
  if (!algebra.adjoint_closed()) {
    throw InputError("wedderburn: span is not closed under adjoints");
  }
  if (closure_residual(algebra) > tol::kClosure) {
    throw InputError("wedderburn: span is not closed under multiplication");
  }
  const Matrix e = unit(algebra);
  const OperatorSpan centre = center(algebra);
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    auto result = try_decompose(algebra, e, centre,
                                options.seed + static_cast<std::uint64_t>(attempt),
                                options.tol);
    if (result) return std::move(*result);
  }
  throw NumericalError("wedderburn: could not certify a decomposition after " +
                       std::to_string(options.max_retries) + " retries");
}

}  // namespace oaqec
