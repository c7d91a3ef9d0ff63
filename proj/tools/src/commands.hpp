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

#pragma once

#include <string>

#include "cli.hpp"
#include "oaqec/algebra.hpp"
#include "oaqec/channel.hpp"
#include "oaqec/infoflow.hpp"
#include "oaqec/qec.hpp"
#include "oaqec/recovery.hpp"

namespace oaqec::cli {

// Shared pieces of the subcommands, also used by the demos.

std::string sci(double x);

Json structure_summary(const AlgebraStructure& s);

CommandResult conserved_report(const CodeContext& ctx, double tol);
CommandResult correctable_report(const CodeContext& ctx, double tol, std::uint64_t seed);
CommandResult largest_report(const KrausChannel& channel, const Matrix& projector,
                             const std::string& mode, std::uint64_t seed);
CommandResult structure_report(const OperatorSpan& algebra, double tol, std::uint64_t seed);
CommandResult recover_report(const KrausChannel& channel, const Matrix& projector,
                             const OperatorSpan& algebra, double tol, std::uint64_t seed);
CommandResult lift_report(const KrausChannel& channel, const KrausChannel& recovery,
                          const Matrix& projector, const OperatorSpan& algebra, double tol,
                          std::uint64_t seed);
CommandResult infoflow_report(const Matrix& unitary, const Vector& apparatus_state, double tol,
                              std::uint64_t seed);

CommandResult run_demo(const std::string& name, double tol, std::uint64_t seed);

}  // namespace oaqec::cli
