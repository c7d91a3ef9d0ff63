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

#include "commands.hpp"

#include <algorithm>
#include <cstdio>

#include "oaqec/errors.hpp"

namespace oaqec::cli {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Json structure_summary(const AlgebraStructure& s) {
  Json sectors = Json::array();
  for (const auto& sec : s.sectors) sectors.push_back(Json{{"n", sec.n}, {"m", sec.m}});
  return sectors;
}

namespace {

std::string shapes(const AlgebraStructure& s) {
  std::string out;
  for (const auto& sec : s.sectors) {
    if (!out.empty()) out += ' ';
    out += "(n=" + std::to_string(sec.n) + ",m=" + std::to_string(sec.m) + ")";
  }
  return out.empty() ? "none" : out;
}

}  // namespace

CommandResult conserved_report(const CodeContext& ctx, double tol) {
  const Verdict v = is_conserved(ctx, tol);
  CommandResult r;
  r.result = to_json(v);
  r.residuals = Json{{"definition", *v.residual_definition},
                     {"commutator", v.residual_commutator}};
  r.status = v.holds ? kOk : kFailed;
  r.summary = std::string("conserved: ") + (v.holds ? "true" : "false") + " (definition " +
              sci(*v.residual_definition) + ", commutator " + sci(v.residual_commutator) +
              ", algebra dim " + std::to_string(v.algebra_dim) + ")";
  return r;
}

CommandResult correctable_report(const CodeContext& ctx, double tol, std::uint64_t seed) {
  Verdict v = is_correctable(ctx, tol);
  CommandResult r;
  if (v.holds && !ctx.projector_in_algebra) {
    // The definitional condition needs a recovery; use the synthesized one.
    try {
      const RecoveryReport rec = synthesize_recovery(
          ctx.channel, ctx.projector, ctx.algebra, wedderburn(ctx.algebra, {.seed = seed}),
          {.tol = tol, .seed = seed});
      v.residual_definition = rec.heisenberg_residual;
    } catch (const PreconditionError&) {
      v.residual_definition = std::nullopt;
    }
  }
  r.result = to_json(v);
  r.residuals = Json{{"commutator", v.residual_commutator}};
  if (v.residual_definition) r.residuals["definition"] = *v.residual_definition;
  const bool definition_ok = !v.residual_definition || *v.residual_definition <= tol;
  r.status = v.holds && definition_ok ? kOk : kFailed;
  r.summary = std::string("correctable: ") + (v.holds ? "true" : "false") + " (commutator " +
              sci(v.residual_commutator) +
              (v.residual_definition ? ", recovery " + sci(*v.residual_definition) : "") +
              ", algebra dim " + std::to_string(v.algebra_dim) + ")";
  return r;
}

CommandResult largest_report(const KrausChannel& channel, const Matrix& projector,
                             const std::string& mode, std::uint64_t seed) {
  OperatorSpan span(channel.dim_in());
  if (mode == "conserved") {
    span = largest_conserved(channel, projector);
  } else if (mode == "correctable") {
    span = largest_correctable(channel, projector);
  } else {
    throw InputError("--mode must be 'conserved' or 'correctable'");
  }
  const AlgebraStructure s = wedderburn(span, {.seed = seed});
  const bool has_p = span.contains(projector);
  CommandResult r;
  r.result = Json{{"mode", mode},
                  {"algebra", to_json(span)},
                  {"algebra_dim", span.size()},
                  {"contains_projector", has_p},
                  {"sectors", structure_summary(s)}};
  r.residuals = Json{{"structure", structure_residual(s, span)},
                     {"closure", closure_residual(span)}};
  r.summary = "largest " + mode + " algebra: dim " + std::to_string(span.size()) +
              ", sectors " + shapes(s) + (has_p ? ", contains P" : ", does not contain P");
  return r;
}

CommandResult structure_report(const OperatorSpan& algebra, double tol, std::uint64_t seed) {
  const AlgebraStructure s = wedderburn(algebra, {.seed = seed, .tol = tol});
  const double residual = structure_residual(s, algebra);
  CommandResult r;
  r.result = to_json(s);
  r.result["algebra_dim"] = algebra.size();
  r.result["center_dim"] = center(algebra).size();
  r.residuals = Json{{"structure", residual}};
  r.status = residual <= tol ? kOk : kFailed;
  r.summary = "structure: dim " + std::to_string(algebra.size()) + ", sectors " + shapes(s) +
              " (residual " + sci(residual) + ")";
  return r;
}

CommandResult recover_report(const KrausChannel& channel, const Matrix& projector,
                             const OperatorSpan& algebra, double tol, std::uint64_t seed) {
  const AlgebraStructure s = wedderburn(algebra, {.seed = seed});
  const RecoveryReport rec =
      synthesize_recovery(channel, projector, algebra, s, {.tol = tol, .seed = seed});
  CommandResult r;
  r.result = to_json(rec);
  r.result["sectors"] = structure_summary(s);
  r.residuals = Json{{"heisenberg", rec.heisenberg_residual},
                     {"schrodinger", rec.schrodinger_residual},
                     {"tp_defect", rec.tp_defect},
                     {"scalarity", rec.scalarity_residual}};
  const double worst = std::max({rec.heisenberg_residual, rec.schrodinger_residual,
                                 rec.tp_defect, rec.scalarity_residual});
  r.status = worst <= tol ? kOk : kFailed;
  r.summary = "recovery: " + std::to_string(rec.recovery.size()) + " Kraus elements, " +
              "heisenberg " + sci(rec.heisenberg_residual) + ", schrodinger " +
              sci(rec.schrodinger_residual) + ", tp defect " + sci(rec.tp_defect);
  return r;
}

CommandResult lift_report(const KrausChannel& channel, const KrausChannel& recovery,
                          const Matrix& projector, const OperatorSpan& algebra, double tol,
                          std::uint64_t seed) {
  const LiftedSpace lifted = lift_operator_space(channel, recovery, projector, algebra, tol);
  const double all_states = verify_all_states(channel, recovery, lifted.span, 16, seed);
  CommandResult r;
  r.result = to_json(lifted);
  r.result["all_states_residual"] = all_states;
  r.residuals = Json{{"fixed_point", lifted.fixed_point_residual},
                     {"code", lifted.code_residual},
                     {"all_states", all_states}};
  const double worst =
      std::max({lifted.fixed_point_residual, lifted.code_residual, all_states});
  r.status = worst <= tol ? kOk : kFailed;
  r.summary = "lift: dim " + std::to_string(lifted.span.size()) + ", P V P = A residual " +
              sci(lifted.code_residual) + ", all-states " + sci(all_states) +
              (lifted.multiplication_closed ? ", an algebra" : ", not an algebra");
  return r;
}

CommandResult infoflow_report(const Matrix& unitary, const Vector& apparatus_state, double tol,
                              std::uint64_t seed) {
  const InfoFlowReport rep = analyze_interaction(unitary, apparatus_state, {.seed = seed});
  const auto& c = rep.certificates;
  CommandResult r;
  r.result = to_json(rep);
  r.result["nontrivial_duplicated_observable"] = rep.duplicated.size() > 1;
  r.residuals = Json{{"apparatus_algebra_agreement", c.apparatus_algebra_agreement},
                     {"duplicated_containment", c.duplicated_containment},
                     {"commutant_containment", c.commutant_containment},
                     {"duplicated_commutativity", c.duplicated_commutativity},
                     {"complementary_overlap", c.complementary_overlap},
                     {"povm_consistency", c.povm_consistency},
                     {"correlation_deviation", c.correlation_deviation}};
  r.status = rep.certified(tol) ? kOk : kFailed;
  r.summary = "infoflow: dim A_SS " + std::to_string(rep.system_algebra.size()) +
              ", dim A_SA " + std::to_string(rep.apparatus_algebra.size()) + ", dim C " +
              std::to_string(rep.duplicated.size()) +
              (rep.duplicated.size() > 1 ? "" : " (no nontrivial duplicated observable)") +
              ", worst certificate " + sci(c.worst());
  return r;
}

}  // namespace oaqec::cli
