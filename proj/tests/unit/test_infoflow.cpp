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

#include <algorithm>

#include <gtest/gtest.h>

#include "oaqec/algebra.hpp"
#include "oaqec/errors.hpp"
#include "oaqec/infoflow.hpp"
#include "oaqec/models.hpp"
#include "oaqec/random.hpp"

namespace oaqec {
namespace {

const Vector kZero = basis_vector(2, 0);

Matrix ket_bra_plus() {
  Vector plus = Vector::Ones(2) / std::sqrt(2.0);
  return plus * plus.adjoint();
}

// Index of the projector with the largest weight on |0>.
std::size_t ground_index(const std::vector<Matrix>& projectors) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < projectors.size(); ++i) {
    if (projectors[i](0, 0).real() > projectors[best](0, 0).real()) best = i;
  }
  return best;
}

TEST(AnalyzeInteraction, Identity) {
  const InfoFlowReport r = analyze_interaction(identity(4), kZero);
  EXPECT_EQ(r.system_algebra.size(), 4u);
  EXPECT_EQ(r.apparatus_algebra.size(), 1u);
  EXPECT_EQ(r.duplicated.size(), 1u);
  ASSERT_EQ(r.duplicated_projectors.size(), 1u);
  EXPECT_LE(op_norm(r.duplicated_projectors[0] - identity(2)), 1e-10);
  EXPECT_TRUE(r.certified());
}

TEST(AnalyzeInteraction, Cnot) {
  const InfoFlowReport r = analyze_interaction(models::cnot(), kZero);
  EXPECT_EQ(r.system_algebra.size(), 2u);
  EXPECT_EQ(r.apparatus_algebra.size(), 2u);
  EXPECT_EQ(r.duplicated.size(), 2u);
  ASSERT_EQ(r.duplicated_projectors.size(), 2u);
  const std::size_t g = ground_index(r.duplicated_projectors);
  EXPECT_LE(op_norm(r.duplicated_projectors[g] - matrix_unit(2, 0, 0)), 1e-10);
  EXPECT_LE(op_norm(r.duplicated_projectors[1 - g] - matrix_unit(2, 1, 1)), 1e-10);
  EXPECT_TRUE(r.certified());
  EXPECT_LE(r.certificates.worst(), 1e-8);
  // Maximally mixed input: M = diag(1/2, 1/2).
  EXPECT_NEAR(r.correlation(0, 0), 0.5, 1e-10);
  EXPECT_NEAR(r.correlation(1, 1), 0.5, 1e-10);
  EXPECT_NEAR(r.correlation(0, 1), 0.0, 1e-10);
}

TEST(AnalyzeInteraction, Swap) {
  const InfoFlowReport r = analyze_interaction(models::swap(), kZero);
  EXPECT_EQ(r.system_algebra.size(), 1u);
  EXPECT_EQ(r.apparatus_algebra.size(), 4u);
  EXPECT_EQ(r.duplicated.size(), 1u);
  EXPECT_TRUE(r.certified());
}

TEST(AnalyzeInteraction, RandomUnitariesCertify) {
  Rng rng(19);
  for (int i = 0; i < 6; ++i) {
    const Index ds = 2 + i % 2;
    const Index da = 2;
    const InfoFlowReport r = analyze_interaction(rng.haar_unitary(ds * da), basis_vector(da, 0),
                                                 {.seed = static_cast<std::uint64_t>(i)});
    EXPECT_TRUE(r.certified()) << i;
    EXPECT_EQ(r.duplicated_projectors.size(), r.duplicated.size());
    Matrix sum = Matrix::Zero(ds, ds);
    for (const auto& p : r.duplicated_projectors) sum += p;
    EXPECT_LE(op_norm(sum - identity(ds)), 1e-8);
  }
}

TEST(AnalyzeInteraction, PovmsSumToIdentity) {
  const InfoFlowReport r = analyze_interaction(models::cnot(), kZero);
  Matrix xs = Matrix::Zero(2, 2);
  Matrix ys = Matrix::Zero(2, 2);
  for (const auto& x : r.system_povm) xs += x;
  for (const auto& y : r.apparatus_povm) ys += y;
  EXPECT_LE(op_norm(xs - identity(2)), 1e-10);
  EXPECT_LE(op_norm(ys - identity(2)), 1e-10);
}

TEST(AnalyzeInteraction, RejectsBadInput) {
  EXPECT_THROW(analyze_interaction(Matrix::Ones(4, 4), kZero), InputError);
  EXPECT_THROW(analyze_interaction(identity(4), basis_vector(3, 0)), InputError);
}

TEST(AnalyzeInteraction, ApparatusBasisIndependent) {
  Rng rng(20);
  const Matrix w = rng.haar_unitary(2);
  const InfoFlowReport a = analyze_interaction(models::cnot(), kZero);
  const InfoFlowReport b = analyze_interaction(kron(identity(2), w) * models::cnot(), kZero);
  EXPECT_LE(span_residual(a.duplicated, b.duplicated), 1e-8);
  EXPECT_LE(span_residual(a.system_algebra, b.system_algebra), 1e-8);
  EXPECT_TRUE(b.certified());
}

TEST(AnalyzeInteraction, SeedIndependent) {
  const InfoFlowReport a = analyze_interaction(models::cnot(), kZero, {.seed = 1});
  const InfoFlowReport b = analyze_interaction(models::cnot(), kZero, {.seed = 2});
  EXPECT_LE(span_residual(a.duplicated, b.duplicated), 1e-10);
  ASSERT_EQ(a.duplicated_projectors.size(), b.duplicated_projectors.size());
  for (const auto& p : a.duplicated_projectors) {
    const auto close = std::any_of(b.duplicated_projectors.begin(), b.duplicated_projectors.end(),
                                   [&](const Matrix& q) { return op_norm(p - q) <= 1e-10; });
    EXPECT_TRUE(close);
  }
}

TEST(DuplicatedProjectors, HybridCenter) {
  const OperatorSpan z = center(models::hybrid_address_algebra(3));
  const std::vector<Matrix> ps = duplicated_projectors(z, 4);
  ASSERT_EQ(ps.size(), 3u);
  Matrix sum = Matrix::Zero(z.dim(), z.dim());
  for (const auto& p : ps) {
    EXPECT_LE(projector_defect(p), 1e-10);
    EXPECT_LE(z.distance(p), 1e-10);
    EXPECT_NEAR(p.trace().real(), 2.0, 1e-10);
    sum += p;
  }
  EXPECT_LE(op_norm(sum - models::hybrid_address_projector(3)), 1e-10);
}

TEST(DuplicatedProjectors, Examples) {
  const OperatorSpan scalars(2, {identity(2) / std::sqrt(2.0)});
  const auto one = duplicated_projectors(scalars);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_LE(op_norm(one[0] - identity(2)), 1e-10);
  EXPECT_TRUE(duplicated_projectors(OperatorSpan(2)).empty());
  const OperatorSpan m2(2, {matrix_unit(2, 0, 0), matrix_unit(2, 0, 1), matrix_unit(2, 1, 0),
                            matrix_unit(2, 1, 1)});
  EXPECT_THROW(duplicated_projectors(m2), InputError);
}

TEST(Correlation, CnotExamples) {
  const InfoFlowReport r = analyze_interaction(models::cnot(), kZero);
  const std::size_t g = ground_index(r.duplicated_projectors);
  const CorrelationResult c =
      correlation_matrix(r.isometry, r.duplicated_projectors, r.system_povm, r.apparatus_povm,
                         {ket_bra_plus(), matrix_unit(2, 0, 0)});
  ASSERT_EQ(c.matrices.size(), 2u);
  EXPECT_LE(c.max_deviation, 1e-10);
  const RealMatrix& plus = c.matrices[0];
  EXPECT_NEAR(plus(g, g), 0.5, 1e-10);
  EXPECT_NEAR(plus(1 - g, 1 - g), 0.5, 1e-10);
  EXPECT_NEAR(plus(0, 1), 0.0, 1e-10);
  const RealMatrix& ground = c.matrices[1];
  EXPECT_NEAR(ground(g, g), 1.0, 1e-10);
  EXPECT_NEAR(ground(1 - g, 1 - g), 0.0, 1e-10);
}

TEST(Correlation, ReportsDeviationForWrongPovm) {
  const InfoFlowReport r = analyze_interaction(models::cnot(), kZero);
  std::vector<Matrix> flipped = r.apparatus_povm;
  std::swap(flipped[0], flipped[1]);
  const CorrelationResult c = correlation_matrix(r.isometry, r.duplicated_projectors,
                                                 r.system_povm, flipped, {identity(2) / 2.0});
  EXPECT_GT(c.max_deviation, 0.4);
}

}  // namespace
}  // namespace oaqec
