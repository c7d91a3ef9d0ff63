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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "oaqec/errors.hpp"

namespace oaqec::cli {

namespace {

Json load(const std::string& file, const char* option) {
  if (file.empty()) throw InputError(std::string("missing required option --") + option);
  return read_json_file(file);
}

KrausChannel load_channel(const JobSpec& job) {
  return channel_from_json(load(job.channel, "channel"), job.channel);
}

Matrix load_projector(const JobSpec& job, Index dim) {
  if (job.projector.empty()) return identity(dim);
  Matrix p = matrix_from_json(load(job.projector, "projector"), job.projector);
  if (p.rows() != dim || p.cols() != dim) {
    throw InputError(job.projector + ": projector dimension does not match the channel input");
  }
  return p;
}

OperatorSpan load_algebra(const JobSpec& job) {
  return span_from_json(load(job.algebra, "algebra"), job.algebra);
}

CodeContext load_context(const JobSpec& job, CommandResult& r) {
  KrausChannel ch = load_channel(job);
  Matrix p = load_projector(job, ch.dim_in());
  OperatorSpan a = load_algebra(job);
  CodeContext ctx{std::move(ch), std::move(p), std::move(a), job.projector_in_algebra};
  ctx.validate();
  r.inputs = Json{{"channel", job.channel}, {"algebra", job.algebra},
                  {"projector", job.projector.empty() ? Json(nullptr) : Json(job.projector)},
                  {"projector_in_algebra", job.projector_in_algebra}};
  return ctx;
}

// Carries the inputs across to a result produced by a helper.
CommandResult with_inputs(CommandResult r, Json inputs) {
  r.inputs = std::move(inputs);
  return r;
}

}  // namespace

CommandResult run(const JobSpec& job) {
  if (!(job.tol > 0.0 && job.tol < 1e-2)) throw InputError("--tol must lie in (0, 1e-2)");
  const std::string& c = job.command;
  if (c == "validate") {
    const KrausChannel ch = load_channel(job);
    const TpReport tp = validate_tp(ch);
    CommandResult r;
    r.inputs = Json{{"channel", job.channel}};
    r.result = Json{{"dim_in", ch.dim_in()},
                    {"dim_out", ch.dim_out()},
                    {"kraus_count", ch.size()},
                    {"trace_preserving", tp.trace_preserving},
                    {"tp_defect", tp.tp_defect}};
    r.result["unital_defect"] = tp.unital_defect ? Json(*tp.unital_defect) : Json(nullptr);
    r.residuals = Json{{"tp_defect", tp.tp_defect}};
    r.status = tp.trace_preserving ? kOk : kFailed;
    r.summary = std::string("channel ") + std::to_string(ch.dim_out()) + "x" +
                std::to_string(ch.dim_in()) + ", " + std::to_string(ch.size()) +
                " Kraus elements, trace preserving: " + (tp.trace_preserving ? "yes" : "no") +
                " (defect " + sci(tp.tp_defect) + ")";
    return r;
  }
  if (c == "conserved" || c == "correctable") {
    CommandResult scratch;
    const CodeContext ctx = load_context(job, scratch);
    CommandResult r = c == "conserved" ? conserved_report(ctx, job.tol)
                                       : correctable_report(ctx, job.tol, job.seed);
    return with_inputs(std::move(r), scratch.inputs);
  }
  if (c == "largest") {
    const KrausChannel ch = load_channel(job);
    const Matrix p = load_projector(job, ch.dim_in());
    return with_inputs(largest_report(ch, p, job.mode, job.seed),
                       Json{{"channel", job.channel},
                            {"projector", job.projector.empty() ? Json(nullptr) : Json(job.projector)},
                            {"mode", job.mode}});
  }
  if (c == "structure") {
    return with_inputs(structure_report(load_algebra(job), job.tol, job.seed),
                       Json{{"algebra", job.algebra}});
  }
  if (c == "recover" || c == "lift") {
    CommandResult scratch;
    const CodeContext ctx = load_context(job, scratch);
    if (c == "recover") {
      return with_inputs(recover_report(ctx.channel, ctx.projector, ctx.algebra, job.tol, job.seed),
                         scratch.inputs);
    }
    Json inputs = scratch.inputs;
    KrausChannel recovery = KrausChannel::identity(1);
    if (job.recovery.empty()) {
      recovery = synthesize_recovery(ctx.channel, ctx.projector, ctx.algebra,
                                     wedderburn(ctx.algebra, {.seed = job.seed}),
                                     {.tol = job.tol, .seed = job.seed})
                     .recovery;
      inputs["recovery"] = nullptr;
    } else {
      recovery = channel_from_json(load(job.recovery, "recovery"), job.recovery);
      inputs["recovery"] = job.recovery;
    }
    return with_inputs(
        lift_report(ctx.channel, recovery, ctx.projector, ctx.algebra, job.tol, job.seed),
        std::move(inputs));
  }
  if (c == "infoflow") {
    const Matrix u = matrix_from_json(load(job.unitary, "unitary"), job.unitary);
    Vector psi = basis_vector(2, 0);
    if (!job.apparatus_state.empty()) {
      psi = vector_from_json(load(job.apparatus_state, "apparatus-state"), job.apparatus_state);
    }
    return with_inputs(
        infoflow_report(u, psi, job.tol, job.seed),
        Json{{"unitary", job.unitary},
             {"apparatus_state",
              job.apparatus_state.empty() ? Json(nullptr) : Json(job.apparatus_state)}});
  }
  if (c == "demo") return run_demo(job.demo, job.tol, job.seed);
  throw InputError("unknown command '" + c + "'");
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conserved and correctable operator algebras for quantum channels"};
  app.require_subcommand(1);
  app.fallthrough();
  JobSpec job;
  bool no_timing = false;

  app.add_option("--tol", job.tol, "Verdict tolerance, in (0, 1e-2)")->capture_default_str();
  app.add_option("--seed", job.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--output,-o", job.output, "Write the JSON report here instead of stdout");
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 (byte-identical reports)");

  const auto channel_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--channel", job.channel, "Channel JSON file");
    if (required) o->required();
  };
  const auto code_opts = [&](CLI::App* sub) {
    channel_opt(sub, true);
    sub->add_option("--projector", job.projector, "Code projector JSON file (default: identity)");
    sub->add_option("--algebra", job.algebra, "Algebra span JSON file")->required();
    sub->add_flag("--projector-in-algebra", job.projector_in_algebra,
                  "The algebra contains P; test over P A P");
  };

  auto* validate = app.add_subcommand("validate", "Check a channel for trace preservation");
  channel_opt(validate, true);
  auto* conserved = app.add_subcommand("conserved", "Is the algebra conserved on P H?");
  code_opts(conserved);
  auto* correctable = app.add_subcommand("correctable", "Is the algebra correctable on P H?");
  code_opts(correctable);
  auto* largest = app.add_subcommand("largest", "Largest conserved or correctable algebra");
  channel_opt(largest, true);
  largest->add_option("--projector", job.projector, "Code projector JSON file (default: identity)");
  largest->add_option("--mode", job.mode, "conserved or correctable")
      ->check(CLI::IsMember({"conserved", "correctable"}))
      ->capture_default_str();
  auto* structure = app.add_subcommand("structure", "Sector decomposition of an algebra");
  structure->add_option("--algebra", job.algebra, "Algebra span JSON file")->required();
  auto* recover = app.add_subcommand("recover", "Synthesize and verify a recovery channel");
  code_opts(recover);
  auto* lift = app.add_subcommand("lift", "Lift a code to an operator space correct on all states");
  code_opts(lift);
  lift->add_option("--recovery", job.recovery, "Recovery channel JSON (default: synthesized)");
  auto* infoflow = app.add_subcommand("infoflow", "System/apparatus information flow");
  infoflow->add_option("--unitary", job.unitary, "Interaction unitary JSON file")->required();
  infoflow->add_option("--apparatus-state", job.apparatus_state,
                       "Apparatus state vector JSON file (default: |0> on a qubit)");
  auto* demo = app.add_subcommand("demo", "Run a built-in example");
  demo->add_option("name", job.demo,
                   "spontaneous-emission, qutrit-se, stabilizer-z1z2, pauli-g, bitflip3, "
                   "hybrid-address, cnot-infoflow")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.timing = !no_timing;

  const auto start = std::chrono::steady_clock::now();
  CommandResult r;
  try {
    r = run(job);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    // Preconditions that fail on valid input (e.g. a non-correctable code
    // handed to recover) and uncertified numerics.
    r.result = Json{{"error", e.what()}};
    r.status = kFailed;
    r.summary = std::string("failed: ") + e.what();
  }
  const double elapsed =
      job.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count()
                 : 0.0;

  Json envelope{{"command", job.command},
                {"inputs", r.inputs},
                {"tol", job.tol},
                {"seed", job.seed},
                {"result", r.result},
                {"residuals", r.residuals},
                {"elapsed_ms", elapsed}};
  const std::string text = canonical_dump(envelope);
  if (job.output.empty()) {
    out << text;
  } else {
    std::ofstream file(job.output);
    if (!file) {
      err << "input error: cannot write " << job.output << '\n';
      return kInputError;
    }
    file << text;
  }
  err << r.summary << '\n';
  return r.status;
}

}  // namespace oaqec::cli
