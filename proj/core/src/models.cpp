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

#include "oaqec/models.hpp"

#include <cmath>

#include "oaqec/errors.hpp"

namespace oaqec::models {

namespace {

Matrix from_rows(Index dim, std::initializer_list<Complex> entries) {
  Matrix m(dim, dim);
  auto it = entries.begin();
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) m(i, j) = *it++;
  }
  return m;
}

Matrix ket_bra(Index dim, Index i, Index j) { return matrix_unit(dim, i, j); }

}  // namespace

Matrix pauli_x() { return from_rows(2, {0, 1, 1, 0}); }
Matrix pauli_y() { return from_rows(2, {0, Complex(0, -1), Complex(0, 1), 0}); }
Matrix pauli_z() { return from_rows(2, {1, 0, 0, -1}); }

Matrix qubit_operator(int num_qubits, int qubit, const Matrix& op) {
  if (qubit < 0 || qubit >= num_qubits) throw InputError("qubit index out of range");
  std::vector<Matrix> factors(static_cast<std::size_t>(num_qubits), identity(2));
  factors[static_cast<std::size_t>(qubit)] = op;
  return kron(factors);
}

KrausChannel spontaneous_emission() {
  return KrausChannel({ket_bra(2, 0, 0), ket_bra(2, 0, 1)});
}

KrausChannel qutrit_spontaneous_emission() {
  return KrausChannel({ket_bra(3, 0, 0) + ket_bra(3, 1, 1), ket_bra(3, 0, 2)});
}

KrausChannel idempotent_qutrit() {
  const double s = 1.0 / std::sqrt(2.0);
  return KrausChannel(
      {ket_bra(3, 0, 0) + ket_bra(3, 1, 1), s * ket_bra(3, 0, 2), s * ket_bra(3, 1, 2)});
}

KrausChannel stabilizer_channel() {
  const double s = 1.0 / std::sqrt(3.0);
  return KrausChannel({s * identity(8), s * qubit_operator(3, 0, pauli_z()),
                       s * qubit_operator(3, 1, pauli_z())});
}

std::vector<Matrix> pauli_g_generators() {
  return {qubit_operator(3, 0, pauli_z()), qubit_operator(3, 1, pauli_z()),
          qubit_operator(3, 0, pauli_x()) * qubit_operator(3, 1, pauli_x())};
}

KrausChannel pauli_g_channel() {
  std::vector<Matrix> kraus = pauli_g_generators();
  for (auto& k : kraus) k /= std::sqrt(3.0);
  return KrausChannel(std::move(kraus));
}

Matrix stabilizer_code_projector() { return ket_bra(8, 0, 0) + ket_bra(8, 1, 1); }

OperatorSpan stabilizer_code_algebra() {
  return OperatorSpan(8, {ket_bra(8, 0, 0), ket_bra(8, 0, 1), ket_bra(8, 1, 0),
                          ket_bra(8, 1, 1)});
}

KrausChannel bit_flip_channel(const std::array<double, 4>& p) {
  double total = 0.0;
  for (double x : p) {
    if (x < 0.0) throw InputError("bit_flip_channel: negative probability");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InputError("bit_flip_channel: probabilities must sum to 1");
  std::vector<Matrix> kraus{std::sqrt(p[0]) * identity(8)};
  for (int i = 0; i < 3; ++i) {
    kraus.push_back(std::sqrt(p[static_cast<std::size_t>(i) + 1]) *
                    qubit_operator(3, i, pauli_x()));
  }
  return KrausChannel(std::move(kraus));
}

Matrix bit_flip_code_projector() { return ket_bra(8, 0, 0) + ket_bra(8, 7, 7); }

OperatorSpan bit_flip_code_algebra() {
  return OperatorSpan(8, {ket_bra(8, 0, 0), ket_bra(8, 0, 7), ket_bra(8, 7, 0),
                          ket_bra(8, 7, 7)});
}

KrausChannel bit_flip_recovery() {
  const Matrix p = bit_flip_code_projector();
  std::vector<Matrix> kraus{p};
  Matrix covered = p;
  for (int i = 0; i < 3; ++i) {
    const Matrix x = qubit_operator(3, i, pauli_x());
    kraus.push_back(p * x);
    covered += x * p * x;
  }
  // The four syndrome spaces cover all of C^8, so no tail is needed.
  if (op_norm(covered - identity(8)) > 1e-12) {
    throw NumericalError("bit_flip_recovery: syndromes do not cover the register");
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel hybrid_address_channel(Index addresses, double flip_probability) {
  if (addresses < 1) throw InputError("hybrid_address_channel: need at least one address");
  if (flip_probability < 0.0 || flip_probability > 1.0) {
    throw InputError("hybrid_address_channel: flip probability outside [0, 1]");
  }
  const Matrix paulis[3] = {pauli_x(), pauli_z(), pauli_y()};
  Matrix flipped = Matrix::Zero(4 * addresses, 4 * addresses);
  for (Index j = 0; j < addresses; ++j) {
    flipped += kron({paulis[j % 3], ket_bra(addresses, j, j), pauli_x()});
  }
  return KrausChannel({std::sqrt(1.0 - flip_probability) * identity(4 * addresses),
                       std::sqrt(flip_probability) * flipped});
}

Matrix hybrid_address_projector(Index addresses) {
  return kron({identity(2), identity(addresses), ket_bra(2, 0, 0)});
}

OperatorSpan hybrid_address_algebra(Index addresses) {
  std::vector<Matrix> basis;
  for (Index j = 0; j < addresses; ++j) {
    for (Index a = 0; a < 2; ++a) {
      for (Index b = 0; b < 2; ++b) {
        basis.push_back(kron({ket_bra(2, a, b), ket_bra(addresses, j, j), ket_bra(2, 0, 0)}));
      }
    }
  }
  return OperatorSpan(4 * addresses, std::move(basis));
}

Matrix cnot() {
  return from_rows(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

Matrix swap() {
  return from_rows(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

KrausChannel dephasing() { return KrausChannel({ket_bra(2, 0, 0), ket_bra(2, 1, 1)}); }

}  // namespace oaqec::models
