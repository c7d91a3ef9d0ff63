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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "oaqec/algebra.hpp"
#include "oaqec/channel.hpp"
#include "oaqec/errors.hpp"
#include "oaqec/infoflow.hpp"
#include "oaqec/models.hpp"
#include "oaqec/qec.hpp"
#include "oaqec/random.hpp"
#include "oaqec/recovery.hpp"
#include "support/instances.hpp"

namespace {

using namespace oaqec;
using Clock = std::chrono::steady_clock;
namespace ts = testing_support;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_sectors(const AlgebraStructure& s, Index n, Index m) {
  for (const auto& sec : s.sectors) {
    if (sec.n != n || sec.m != m) return false;
  }
  return true;
}

Outcome ac1() {
  Outcome out;
  const auto start = Clock::now();
  const OperatorSpan conserved = largest_conserved(models::stabilizer_channel(), identity(8));
  const AlgebraStructure s = wedderburn(conserved);
  const double elapsed = seconds_since(start);
  out.require(conserved.size() == 16, "dimension " + std::to_string(conserved.size()) + " != 16");
  out.require(s.sectors.size() == 4 && all_sectors(s, 2, 1), "sector shapes");
  out.require(elapsed < 5.0, "runtime");
  out.note("dim=" + std::to_string(conserved.size()) + " sectors=" +
           std::to_string(s.sectors.size()) + "x(n=2,m=1) " + fmt("%.3fs", elapsed));
  return out;
}

Outcome ac2() {
  Outcome out;
  const auto gens = models::pauli_g_generators();
  const OperatorSpan g_commutant = commutant(generate_algebra(gens), identity(8));
  const AlgebraStructure s = wedderburn(g_commutant);
  out.require(g_commutant.size() == 8, "dimension " + std::to_string(g_commutant.size()) + " != 8");
  out.require(s.sectors.size() == 2 && all_sectors(s, 2, 2), "sector shapes");

  const OperatorSpan s_commutant = largest_conserved(models::stabilizer_channel(), identity(8));
  const Verdict lost =
      is_conserved(CodeContext{models::pauli_g_channel(), identity(8), s_commutant});
  out.require(!lost.holds, "stabilizer commutant conserved under G");

  const OperatorSpan g_largest = largest_conserved(models::pauli_g_channel(), identity(8));
  out.require(span_residual(g_largest, g_commutant) <= 1e-8,
              "largest conserved algebra for G differs from its commutant");

  const Verdict code =
      is_correctable(CodeContext{models::pauli_g_channel(), models::stabilizer_code_projector(),
                                 models::stabilizer_code_algebra()});
  out.require(code.holds, "stabilizer code not correctable for G");
  out.note("dim=" + std::to_string(g_commutant.size()) + " sectors=" +
           std::to_string(s.sectors.size()) + "x(n=2,m=2) S' conserved=" +
           (lost.holds ? "yes" : "no") + " code correctable=" + (code.holds ? "yes" : "no"));
  return out;
}

Outcome ac3() {
  Outcome out;
  const auto start = Clock::now();
  const KrausChannel e = models::bit_flip_channel();
  const Matrix p = models::bit_flip_code_projector();
  const OperatorSpan a = models::bit_flip_code_algebra();
  const RecoveryReport r = synthesize_recovery(e, p, a, wedderburn(a));
  const KrausChannel closed = models::bit_flip_recovery();
  double agreement = 0.0;
  for (const auto& x : a) {
    agreement = std::max(agreement, op_norm(apply_dual(r.recovery, x) - apply_dual(closed, x)));
  }
  const LiftedSpace lifted = lift_operator_space(e, r.recovery, p, a);
  const double all_states = verify_all_states(e, r.recovery, lifted.span, 16, 0);
  const double elapsed = seconds_since(start);
  out.require(agreement <= 1e-9, "recovery differs from the closed form");
  out.require(r.heisenberg_residual <= 1e-9, "heisenberg residual");
  out.require(lifted.code_residual <= 1e-8, "P V P != A");
  out.require(all_states <= 1e-8, "all-states residual");
  out.require(elapsed < 5.0, "runtime");
  out.note("closed-form=" + fmt("%.1e", agreement) + " PVP=" + fmt("%.1e", lifted.code_residual) +
           " all-states=" + fmt("%.1e", all_states) + " " + fmt("%.3fs", elapsed));
  return out;
}

Outcome ac4() {
  Outcome out;
  const Matrix p0 = matrix_unit(2, 0, 0);
  const Verdict qubit = is_conserved(
      CodeContext{models::spontaneous_emission(), p0, OperatorSpan(2, {p0})}, 1e-12);
  out.require(qubit.holds && *qubit.residual_definition <= 1e-12 &&
                  qubit.residual_commutator <= 1e-12,
              "qubit decoherence-free state");

  const KrausChannel qutrit = models::qutrit_spontaneous_emission();
  const Matrix p = matrix_unit(3, 0, 0) + matrix_unit(3, 1, 1);
  std::vector<Matrix> units;
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) units.push_back(matrix_unit(3, i, j));
  }
  const Verdict qutrit_verdict =
      is_conserved(CodeContext{qutrit, p, OperatorSpan(3, units)}, 1e-12);
  out.require(qutrit_verdict.holds && *qutrit_verdict.residual_definition <= 1e-12 &&
                  qutrit_verdict.residual_commutator <= 1e-12,
              "qutrit decoherence-free subspace");

  Rng rng(4);
  double closed_form = 0.0;
  for (int trial = 0; trial < 32; ++trial) {
    const Matrix x = p * rng.ginibre(3, 3) * p;
    Matrix expected = x;
    expected(2, 2) += x(0, 0);
    closed_form = std::max(closed_form,
                           (apply_dual(qutrit, x) - expected).cwiseAbs().maxCoeff());
  }
  out.require(closed_form <= 1e-12, "qutrit dual closed form");
  out.note("qubit=" + fmt("%.1e", std::max(*qubit.residual_definition, qubit.residual_commutator)) +
           " qutrit=" +
           fmt("%.1e", std::max(*qutrit_verdict.residual_definition,
                                qutrit_verdict.residual_commutator)) +
           " dual=" + fmt("%.1e", closed_form));
  return out;
}

Outcome ac5() {
  Outcome out;
  constexpr Index kAddresses = 3;
  const KrausChannel e = models::hybrid_address_channel(kAddresses);
  const Matrix p = models::hybrid_address_projector(kAddresses);
  const OperatorSpan a = models::hybrid_address_algebra(kAddresses);
  const AlgebraStructure s = wedderburn(a);
  const RecoveryReport r = synthesize_recovery(e, p, a, s);
  const double schrodinger = verify_schrodinger(e, r.recovery, s, 32, 5);

  Rng rng(5);
  double exact = 0.0;
  for (int trial = 0; trial < 32; ++trial) {
    const auto alpha = rng.simplex(kAddresses);
    Matrix rho = Matrix::Zero(p.rows(), p.cols());
    for (Index j = 0; j < kAddresses; ++j) {
      const Vector psi = rng.unit_vector(2);
      rho += alpha[static_cast<std::size_t>(j)] *
             kron({psi * psi.adjoint(), matrix_unit(kAddresses, j, j), matrix_unit(2, 0, 0)});
    }
    exact = std::max(exact, op_norm(apply_state(r.recovery, apply_state(e, rho)) - rho));
  }
  out.require(s.sectors.size() == kAddresses && all_sectors(s, 2, 1), "sector shapes");
  out.require(schrodinger <= 1e-9, "schrodinger residual");
  out.require(exact <= 1e-9, "exact recovery");
  out.note("sectors=" + std::to_string(s.sectors.size()) + " schrodinger=" +
           fmt("%.1e", schrodinger) + " exact=" + fmt("%.1e", exact));
  return out;
}

Outcome ac6() {
  Outcome out;
  constexpr int kInstances = 240;
  const auto layouts = ts::small_layouts();
  int conservation_disagree = 0;
  int correction_disagree = 0;
  int planted_mismatch = 0;
  int correctable_count = 0;
  int conserved_count = 0;
  for (int i = 0; i < kInstances; ++i) {
    Rng rng(1000 + static_cast<std::uint64_t>(i));
    const auto& layout = layouts[static_cast<std::size_t>(i) % layouts.size()];
    Index code = 0;
    for (const auto& sh : layout) code += sh.n * sh.m;
    const Index junk = static_cast<Index>(rng.uniform() * static_cast<double>(8 - code + 1)) %
                       (8 - code + 1);
    const Index kraus = 1 + static_cast<Index>(rng.uniform() * 4.0) % 4;
    const int kind = i % 3;
    ts::PlantedCode inst = ts::planted_code(rng, layout, junk, kraus, kind == 0);
    if (kind == 2) {
      const Index d = code + junk;
      inst.channel = ts::random_channel(rng, d, d, std::max<Index>(kraus, 2));
    }
    const CodeContext ctx{inst.channel, inst.projector, inst.algebra};

    const Verdict cons = is_conserved(ctx);
    const bool def_ok = *cons.residual_definition <= tol::kVerdict;
    const bool comm_ok = cons.residual_commutator <= tol::kVerdict;
    conservation_disagree += def_ok != comm_ok ? 1 : 0;
    conserved_count += cons.holds ? 1 : 0;

    const Verdict corr = is_correctable(ctx);
    bool synthesized = false;
    try {
      const RecoveryReport r =
          synthesize_recovery(inst.channel, inst.projector, inst.algebra, wedderburn(inst.algebra));
      synthesized = verify_heisenberg(inst.channel, r.recovery, inst.projector, inst.algebra) <=
                    tol::kVerdict;
    } catch (const PreconditionError&) {
      synthesized = false;
    }
    correction_disagree += corr.holds != synthesized ? 1 : 0;
    correctable_count += corr.holds ? 1 : 0;

    if (kind == 0 && !cons.holds) ++planted_mismatch;
    if (kind != 2 && !corr.holds) ++planted_mismatch;
  }
  out.require(conservation_disagree == 0, "conservation tests disagree");
  out.require(correction_disagree == 0, "correctability verdict vs synthesis disagree");
  out.require(planted_mismatch == 0, "planted instances misclassified");
  out.note("instances=" + std::to_string(kInstances) + " conserved=" +
           std::to_string(conserved_count) + " correctable=" + std::to_string(correctable_count) +
           " disagreements=" + std::to_string(conservation_disagree + correction_disagree) +
           " planted-mismatch=" + std::to_string(planted_mismatch));
  return out;
}

Outcome ac7() {
  Outcome out;
  constexpr int kInstances = 60;
  const auto layouts = ts::small_layouts();
  double worst = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    Rng rng(2000 + static_cast<std::uint64_t>(i));
    const auto& layout = layouts[static_cast<std::size_t>(i) % layouts.size()];
    const Index kraus = 2 + i % 3;
    const ts::PlantedCode inst = ts::planted_code(rng, layout, i % 2, kraus, false);
    const RecoveryReport r = synthesize_recovery(inst.channel, inst.projector, inst.algebra,
                                                 wedderburn(inst.algebra));
    const KrausChannel mixed = remix(inst.channel, rng.haar_unitary(kraus));
    worst = std::max(worst, verify_heisenberg(mixed, r.recovery, inst.projector, inst.algebra));
  }
  out.require(worst <= 1e-8, "remixed channel not corrected");
  out.note("instances=" + std::to_string(kInstances) + " worst=" + fmt("%.1e", worst));
  return out;
}

Outcome ac8() {
  Outcome out;
  std::vector<std::pair<std::string, Matrix>> cases{
      {"cnot", models::cnot()}, {"swap", models::swap()}, {"identity", identity(4)}};
  Rng rng(8);
  for (int i = 0; i < 24; ++i) cases.emplace_back("random", rng.haar_unitary(4));
  double commutativity = 0.0;
  double agreement = 0.0;
  double correlation = 0.0;
  double worst = 0.0;
  for (const auto& [name, u] : cases) {
    const InfoFlowReport r = analyze_interaction(u, basis_vector(2, 0));
    commutativity = std::max(commutativity, r.certificates.duplicated_commutativity);
    agreement = std::max(agreement, r.certificates.apparatus_algebra_agreement);
    correlation = std::max(correlation, r.certificates.correlation_deviation);
    worst = std::max(worst, r.certificates.worst());
  }
  out.require(commutativity <= 1e-8, "duplicated algebra not commutative");
  out.require(agreement <= 1e-8, "apparatus algebra constructions disagree");
  out.require(correlation <= 1e-8, "correlation deviation");
  out.require(worst <= 1e-8, "other certificates");
  out.note("cases=" + std::to_string(cases.size()) + " commutator=" + fmt("%.1e", commutativity) +
           " agreement=" + fmt("%.1e", agreement) + " correlation=" + fmt("%.1e", correlation));
  return out;
}

Outcome ac9() {
  Outcome out;
  constexpr int kInstances = 120;
  double worst = 0.0;
  double worst_image = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    Rng rng(3000 + static_cast<std::uint64_t>(i));
    const Index d = 2 + i % 7;
    const Index r = 1 + static_cast<Index>(rng.uniform() * static_cast<double>(d - 1)) % (d - 1);
    const Index count = 1 + i % 4;
    const Matrix w = ts::random_isometry(rng, d, r);
    std::vector<Matrix> f;
    Matrix joint(d, d * count);
    for (Index a = 0; a < count; ++a) {
      f.push_back(w * rng.ginibre(r, d));
      joint.middleCols(a * d, d) = f.back();
    }
    // Positive A supported on the orthogonal complement of every range.
    Eigen::JacobiSVD<Matrix> svd(joint, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    Index rank = 0;
    for (Index k = 0; k < sv.size(); ++k) rank += sv(k) > 1e-10 * sv(0) ? 1 : 0;
    const Matrix kernel = svd.matrixU().rightCols(d - rank);
    const Matrix g = rng.ginibre(d - rank, d - rank);
    const Matrix a = kernel * g * g.adjoint() * kernel.adjoint();
    Matrix image = Matrix::Zero(d, d);
    for (const auto& fa : f) image += fa.adjoint() * a * fa;
    worst_image = std::max(worst_image, op_norm(image));
    for (const auto& fa : f) worst = std::max(worst, op_norm(a * fa));
  }
  out.require(worst_image <= 1e-8, "constructed A not annihilated");
  out.require(worst <= 1e-8, "A F_a nonzero");
  out.note("instances=" + std::to_string(kInstances) + " worst=" + fmt("%.1e", worst));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %s  %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
