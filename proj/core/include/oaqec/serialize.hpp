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

// JSON encoding of the library's values.
//
// Matrices are {"re": [[...]], "im": [[...]]} with rows listed in order; "im"
// may be omitted on input. Vectors are {"re": [...], "im": [...]}. Channels are
// {"dim_in", "dim_out", "kraus": [matrix...]}. A span is either
// {"dim", "basis": [matrix...]} (orthonormalized on read) or
// {"dim", "generators": [matrix...]}, meaning the algebra they generate.
//
// Decoding failures throw InputError naming the offending field path.

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "oaqec/algebra.hpp"
#include "oaqec/channel.hpp"
#include "oaqec/infoflow.hpp"
#include "oaqec/linalg.hpp"
#include "oaqec/opspace.hpp"
#include "oaqec/qec.hpp"
#include "oaqec/recovery.hpp"

namespace oaqec {

using Json = nlohmann::json;

Json to_json(const Matrix& m);
Json to_json(const Vector& v);
Json to_json(const RealMatrix& m);
Json to_json(const KrausChannel& ch);
Json to_json(const OperatorSpan& span);
Json to_json(const AlgebraStructure& structure);
Json to_json(const Verdict& verdict);
Json to_json(const RecoveryReport& report);
Json to_json(const LiftedSpace& lifted);
Json to_json(const InfoFlowReport& report);

Matrix matrix_from_json(const Json& j, std::string_view path = "matrix");
Vector vector_from_json(const Json& j, std::string_view path = "vector");
KrausChannel channel_from_json(const Json& j, std::string_view path = "channel");
OperatorSpan span_from_json(const Json& j, std::string_view path = "span");

// Reads and parses a file; parse errors carry line and column.
Json read_json_file(const std::string& file);

// Deterministic rendering: keys sorted, floating-point values printed with 17
// significant digits, arrays of scalars kept on one line. Non-finite numbers
// become null.
std::string canonical_dump(const Json& j, int indent = 2);

}  // namespace oaqec
