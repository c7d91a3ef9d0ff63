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

// Standard channels, codes and interactions used by the demos, tests and
// benchmarks. Multi-qubit operators use the convention that qubit 0 is the
// leftmost (most significant) tensor factor.

#pragma once

#include <array>
#include <vector>

#include "oaqec/channel.hpp"
#include "oaqec/linalg.hpp"
#include "oaqec/opspace.hpp"

namespace oaqec::models {

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// op acting on one qubit of an n-qubit register.
Matrix qubit_operator(int num_qubits, int qubit, const Matrix& op);

// {|0><0|, |0><1|}.
KrausChannel spontaneous_emission();
// {|0><0| + |1><1|, |0><2|}.
KrausChannel qutrit_spontaneous_emission();
// {|0><0| + |1><1|, |0><2|/sqrt2, |1><2|/sqrt2}: E o E = E.
KrausChannel idempotent_qutrit();
// {1, Z_1, Z_2}/sqrt3 on three qubits.
KrausChannel stabilizer_channel();
// {Z_1, Z_2, X_1 X_2}/sqrt3 on three qubits.
KrausChannel pauli_g_channel();
// Generators {Z_1, Z_2, X_1 X_2}.
std::vector<Matrix> pauli_g_generators();
// Joint eigenvalue-1 space of Z_1, Z_2: |000><000| + |001><001|.
Matrix stabilizer_code_projector();
// Span of the logical qubit on the stabilizer code.
OperatorSpan stabilizer_code_algebra();

// {sqrt p_0 1, sqrt p_i X_i}.
KrausChannel bit_flip_channel(const std::array<double, 4>& p = {0.7, 0.1, 0.1, 0.1});
// |000><000| + |111><111|.
Matrix bit_flip_code_projector();
// span{|iii><jjj|}.
OperatorSpan bit_flip_code_algebra();
// {P, X_1 P, X_2 P, X_3 P} plus a tail resetting the orthogonal complement
// into the code, so that R^dag(A) = P A P + sum_i X_i P A P X_i on the code.
KrausChannel bit_flip_recovery();

// Qubit sectors labelled by an address j, with a flag qubit:
// C^2 (x) C^d (x) C^2. With probability q the flag flips and the data qubit
// at address j suffers u_j, cycling through X, Z, Y.
KrausChannel hybrid_address_channel(Index addresses, double flip_probability = 0.25);
// sum_j 1_2 (x) |j><j| (x) |0><0|.
Matrix hybrid_address_projector(Index addresses);
// (+)_j M_2 (x) |j><j| (x) |0><0|.
OperatorSpan hybrid_address_algebra(Index addresses);

// Control on the first (system) factor.
Matrix cnot();
Matrix swap();
// {|0><0|, |1><1|}.
KrausChannel dephasing();

}  // namespace oaqec::models
