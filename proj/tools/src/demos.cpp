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
#include <cmath>
#include <functional>
#include <map>

#include "commands.hpp"
#include "oaqec/errors.hpp"
#include "oaqec/models.hpp"

namespace oaqec::cli {

namespace {

// Each demo records named checks; the status is 0 only if every one holds.
struct DemoBuilder {
  CommandResult out;
  double tol;
  bool all = true;

  void check(const std::string& name, bool ok) {
    out.result["checks"][name] = ok;
    all = all && ok;
  }
  void residual(const std::string& name, double value) {
    out.residuals[name] = value;
    check(name + " within tol", value <= tol);
  }
  void line(const std::string& s) {
    if (!out.summary.empty()) out.summary += '\n';
    out.summary += s;
  }
  CommandResult finish() {
    out.status = all ? kOk : kFailed;
    line(std::string("demo ") + (all ? "passed" : "FAILED"));
    return std::move(out);
  }
};

OperatorSpan matrix_units_on(Index dim, std::initializer_list<Index> indices) {
  std::vector<Matrix> units;
  for (Index i : indices) {
    for (Index j : indices) units.push_back(matrix_unit(dim, i, j));
  }
  return OperatorSpan(dim, std::move(units));
}

CommandResult spontaneous_emission(double tol, std::uint64_t seed) {
  DemoBuilder d{.out = {}, .tol = tol};
  const KrausChannel e = models::spontaneous_emission();
  const Matrix p0 = matrix_unit(2, 0, 0);
  const TpReport tp = validate_tp(e);
  d.check("trace preserving", tp.trace_preserving);

  const Verdict ground = is_conserved(CodeContext{e, p0, OperatorSpan(2, {p0})}, tol);
  d.out.result["ground_state"] = to_json(ground);
  d.check("|0><0| conserved", ground.holds);
  d.residual("ground_state", std::max(*ground.residual_definition, ground.residual_commutator));

  const Verdict full = is_conserved(CodeContext{e, identity(2), matrix_units_on(2, {0, 1})}, tol);
  d.out.result["full_algebra"] = to_json(full);
  d.check("M_2 not conserved", !full.holds);

  const OperatorSpan largest = largest_conserved(e, identity(2));
  d.out.result["largest_conserved_dim"] = largest.size();
  d.check("largest conserved algebra is scalars", largest.size() == 1);

  const AlgebraStructure s = wedderburn(OperatorSpan(2, {p0}), {.seed = seed});
  const SubsystemVerdict ns = noiseless_subsystem_check(e, s, 0, tol);
  d.check("|0> is a noiseless subsystem", ns.holds);
  const double repeat = repeatability_probability(e, p0, p0);
  d.out.result["repeatability"] = repeat;
  d.residual("repeatability", std::abs(repeat - 1.0));

  d.line("spontaneous emission: |0><0| conserved (" +
         sci(std::max(*ground.residual_definition, ground.residual_commutator)) +
         "), M_2 conserved: " + (full.holds ? "yes" : "no") +
         ", largest conserved dim " + std::to_string(largest.size()));
  return d.finish();
}

CommandResult qutrit_se(double tol, std::uint64_t seed) {
  DemoBuilder d{.out = {}, .tol = tol};
  const KrausChannel e = models::qutrit_spontaneous_emission();
  const Matrix p = matrix_unit(3, 0, 0) + matrix_unit(3, 1, 1);
  const OperatorSpan a = matrix_units_on(3, {0, 1});
  const Verdict v = is_conserved(CodeContext{e, p, a}, tol);
  d.out.result["verdict"] = to_json(v);
  d.check("L(P H) conserved", v.holds);
  d.residual("conservation", std::max(*v.residual_definition, v.residual_commutator));

  // E^dag(X) = X + <0|X|0> |2><2| for X supported on span{|0>, |1>}.
  double closed_form = 0.0;
  for (const auto& x : a) {
    Matrix expected = x;
    expected(2, 2) += x(0, 0);
    closed_form = std::max(closed_form, (apply_dual(e, x) - expected).cwiseAbs().maxCoeff());
  }
  d.residual("dual_closed_form", closed_form);

  const AlgebraStructure s = wedderburn(a, {.seed = seed});
  d.check("span{|0>,|1>} is a noiseless subsystem", noiseless_subsystem_check(e, s, 0, tol).holds);
  const Matrix p2 = matrix_unit(3, 2, 2);
  const double leak = repeatability_probability(e, p2, p2);
  d.out.result["repeatability_excited"] = leak;
  d.check("|2><2| leaves its subspace", std::abs(leak) <= tol);

  d.line("qutrit spontaneous emission: qubit subspace conserved (" +
         sci(std::max(*v.residual_definition, v.residual_commutator)) + "), dual closed form " +
         sci(closed_form));
  return d.finish();
}

CommandResult stabilizer_z1z2(double tol, std::uint64_t seed) {
  DemoBuilder d{.out = {}, .tol = tol};
  const OperatorSpan a = largest_conserved(models::stabilizer_channel(), identity(8));
  const AlgebraStructure s = wedderburn(a, {.seed = seed});
  d.out.result["algebra_dim"] = a.size();
  d.out.result["sectors"] = structure_summary(s);
  d.check("dimension 16", a.size() == 16);
  bool shapes_ok = s.sectors.size() == 4;
  for (const auto& sec : s.sectors) shapes_ok = shapes_ok && sec.n == 2 && sec.m == 1;
  d.check("4 sectors (n=2, m=1)", shapes_ok);
  const Verdict v = is_conserved(CodeContext{models::stabilizer_channel(), identity(8), a}, tol);
  d.check("conserved", v.holds);
  d.residual("conservation", std::max(*v.residual_definition, v.residual_commutator));
  d.residual("structure", structure_residual(s, a));
  d.line("stabilizer {Z1, Z2}: largest conserved algebra dim " + std::to_string(a.size()) +
         ", " + std::to_string(s.sectors.size()) + " sectors");
  return d.finish();
}

CommandResult pauli_g(double tol, std::uint64_t seed) {
  DemoBuilder d{.out = {}, .tol = tol};
  const KrausChannel g = models::pauli_g_channel();
  const OperatorSpan gc = commutant(generate_algebra(models::pauli_g_generators()), identity(8));
  const AlgebraStructure s = wedderburn(gc, {.seed = seed});
  d.out.result["commutant_dim"] = gc.size();
  d.out.result["sectors"] = structure_summary(s);
  d.check("dimension 8", gc.size() == 8);
  bool shapes_ok = s.sectors.size() == 2;
  for (const auto& sec : s.sectors) shapes_ok = shapes_ok && sec.n == 2 && sec.m == 2;
  d.check("2 sectors (n=2, m=2)", shapes_ok);

  const OperatorSpan largest = largest_conserved(g, identity(8));
  d.residual("largest_conserved_vs_commutant", span_residual(largest, gc));

  const OperatorSpan sc = largest_conserved(models::stabilizer_channel(), identity(8));
  const Verdict lost = is_conserved(CodeContext{g, identity(8), sc}, tol);
  d.out.result["stabilizer_commutant_conserved"] = lost.holds;
  d.check("stabilizer commutant not conserved", !lost.holds);

  const Matrix p = models::stabilizer_code_projector();
  const OperatorSpan code = models::stabilizer_code_algebra();
  const Verdict corr = is_correctable(CodeContext{g, p, code}, tol);
  d.out.result["code_correctable"] = corr.holds;
  d.check("stabilizer code correctable", corr.holds);
  const RecoveryReport rec = synthesize_recovery(g, p, code, wedderburn(code, {.seed = seed}),
                                                 {.tol = tol, .seed = seed});
  d.residual("heisenberg", rec.heisenberg_residual);
  d.line("G = {Z1, Z2, X1X2}: commutant dim " + std::to_string(gc.size()) +
         ", stabilizer commutant conserved: " + (lost.holds ? "yes" : "no") +
         ", code recovery residual " + sci(rec.heisenberg_residual));
  return d.finish();
}

CommandResult bitflip3(double tol, std::uint64_t seed) {
  DemoBuilder d{.out = {}, .tol = tol};
  const KrausChannel e = models::bit_flip_channel();
  const Matrix p = models::bit_flip_code_projector();
  const OperatorSpan a = models::bit_flip_code_algebra();
  d.check("trace preserving", validate_tp(e).trace_preserving);
  const Verdict corr = is_correctable(CodeContext{e, p, a}, tol);
  d.check("correctable", corr.holds);
  const RecoveryReport rec =
      synthesize_recovery(e, p, a, wedderburn(a, {.seed = seed}), {.tol = tol, .seed = seed});
  d.out.result["recovery"] = to_json(rec);
  d.residual("heisenberg", rec.heisenberg_residual);

  const KrausChannel closed = models::bit_flip_recovery();
  double agreement = 0.0;
  for (const auto& x : a) {
    agreement = std::max(agreement, op_norm(apply_dual(rec.recovery, x) - apply_dual(closed, x)));
  }
  d.residual("closed_form_agreement", agreement);

  const LiftedSpace lifted = lift_operator_space(e, rec.recovery, p, a, tol);
  d.out.result["lifted"] = to_json(lifted);
  d.residual("PVP_equals_A", lifted.code_residual);
  d.residual("fixed_point", lifted.fixed_point_residual);
  const double mixed = verify_all_states(e, rec.recovery, lifted.span, {identity(8) / 8.0});
  d.residual("maximally_mixed", mixed);
  const double all_states = verify_all_states(e, rec.recovery, lifted.span, 16, seed);
  d.residual("all_states", all_states);
  d.line("bit flip: heisenberg " + sci(rec.heisenberg_residual) + ", closed form " +
         sci(agreement) + ", P V P = A " + sci(lifted.code_residual) + ", all states " +
         sci(all_states));
  return d.finish();
}

CommandResult hybrid_address(double tol, std::uint64_t seed) {
  DemoBuilder d{.out = {}, .tol = tol};
  constexpr Index kAddresses = 3;
  const KrausChannel e = models::hybrid_address_channel(kAddresses);
  const Matrix p = models::hybrid_address_projector(kAddresses);
  const OperatorSpan a = models::hybrid_address_algebra(kAddresses);
  const AlgebraStructure s = wedderburn(a, {.seed = seed});
  d.out.result["sectors"] = structure_summary(s);
  d.check("3 qubit sectors", s.sectors.size() == 3);
  const Verdict corr = is_correctable(CodeContext{e, p, a}, tol);
  d.check("correctable", corr.holds);
  const RecoveryReport rec = synthesize_recovery(e, p, a, s, {.tol = tol, .seed = seed});
  d.out.result["recovery"] = to_json(rec);
  d.residual("heisenberg", rec.heisenberg_residual);
  d.residual("schrodinger", verify_schrodinger(e, rec.recovery, s, 32, seed));
  d.check("unit is P", op_norm(s.unit - p) <= tol);
  d.line("hybrid address (d=3): schrodinger " + sci(d.out.residuals["schrodinger"].get<double>()) +
         ", heisenberg " + sci(rec.heisenberg_residual));
  return d.finish();
}

CommandResult cnot_infoflow(double tol, std::uint64_t seed) {
  DemoBuilder d{.out = {}, .tol = tol};
  const InfoFlowReport rep = analyze_interaction(models::cnot(), basis_vector(2, 0), {.seed = seed});
  d.out.result["report"] = to_json(rep);
  d.check("A_SS diagonal", rep.system_algebra.size() == 2);
  d.check("A_SA diagonal", rep.apparatus_algebra.size() == 2);
  d.check("C diagonal", rep.duplicated.size() == 2);
  d.residual("certificates", rep.certificates.worst());
  d.line("CNOT: dim A_SS " + std::to_string(rep.system_algebra.size()) + ", dim A_SA " +
         std::to_string(rep.apparatus_algebra.size()) + ", dim C " +
         std::to_string(rep.duplicated.size()) + ", correlation deviation " +
         sci(rep.certificates.correlation_deviation));
  return d.finish();
}

}  // namespace

CommandResult run_demo(const std::string& name, double tol, std::uint64_t seed) {
  static const std::map<std::string, std::function<CommandResult(double, std::uint64_t)>> demos{
      {"spontaneous-emission", spontaneous_emission},
      {"qutrit-se", qutrit_se},
      {"stabilizer-z1z2", stabilizer_z1z2},
      {"pauli-g", pauli_g},
      {"bitflip3", bitflip3},
      {"hybrid-address", hybrid_address},
      {"cnot-infoflow", cnot_infoflow}};
  auto it = demos.find(name);
  if (it == demos.end()) {
    std::string known;
    for (const auto& [k, v] : demos) known += (known.empty() ? "" : ", ") + k;
    throw InputError("unknown demo '" + name + "' (known: " + known + ")");
  }
  CommandResult r = it->second(tol, seed);
  r.inputs = Json{{"demo", name}};
  return r;
}

}  // namespace oaqec::cli
