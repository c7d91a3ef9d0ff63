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

#include <cstdint>
#include <iosfwd>
#include <string>

#include "oaqec/serialize.hpp"

namespace oaqec::cli {

enum ExitStatus : int { kOk = 0, kFailed = 1, kInputError = 2 };

struct JobSpec {
  std::string command;
  std::string channel;
  std::string projector;
  std::string algebra;
  std::string recovery;
  std::string unitary;
  std::string apparatus_state;
  std::string mode = "conserved";
  std::string demo;
  std::string output;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  bool projector_in_algebra = false;
  bool timing = true;
};

// What a command hands back to the envelope writer.
struct CommandResult {
  Json inputs = Json::object();
  Json result = Json::object();
  Json residuals = Json::object();
  int status = kOk;
  std::string summary;
};

// Runs one job. Throws InputError on bad input files or options.
CommandResult run(const JobSpec& job);

// Full front end: parses argv, runs, writes the report and summary. Returns
// the process exit status.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oaqec::cli
