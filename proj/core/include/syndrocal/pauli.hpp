// Copyright 2026 The syndrocal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace syndrocal {

// N-qubit Pauli operator in symplectic form with a tracked phase:
//
//   P = i^phase_exp * X^x_mask * Z^z_mask
//
// Qubit q carries X if only bit q of x_mask is set, Z if only bit q of
// z_mask, Y if both (Y = i X Z), identity if neither. The phase convention
// follows X.Z = -iY, Z.X = +iY, X.Y = iZ. N <= 64.
struct Pauli {
  int n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int phase_exp = 0;  // exponent of i, mod 4

  Pauli() = default;
  Pauli(int n, std::uint64_t x, std::uint64_t z, int phase = 0);

  static Pauli identity(int n);
  static Pauli single(int n, int qubit, char letter);  // letter in {I,X,Y,Z}

  bool is_identity_mask() const { return x_mask == 0 && z_mask == 0; }
  bool operator==(const Pauli& other) const = default;
};

// Commutator pairing: 0 if p and q commute, 1 if they anticommute.
int pairing(const Pauli& p, const Pauli& q);

// Group product with phase accumulation.
Pauli multiply(const Pauli& p, const Pauli& q);

// Number of qubits with X, Y or Z.
int weight(const Pauli& p);

// +1, +i, -1 or -i as rendered in front of the letter string; the i
// absorbed into each Y is not part of it.
int rendered_phase_exp(const Pauli& p);

// "+IIIXXXX" style rendering; sign omitted only by request.
std::string to_string(const Pauli& p, bool with_sign = true);

// Parses the rendering above. Accepts optional leading +/-/+i/-i.
Pauli pauli_from_string(const std::string& text);

struct CliffordGate {
  enum class Kind { H, S, X, Y, Z, CNOT, CZ, SWAP };

  Kind kind;
  int q0 = -1;
  int q1 = -1;  // -1 for one-qubit gates

  static CliffordGate h(int q) { return {Kind::H, q, -1}; }
  static CliffordGate s(int q) { return {Kind::S, q, -1}; }
  static CliffordGate x(int q) { return {Kind::X, q, -1}; }
  static CliffordGate y(int q) { return {Kind::Y, q, -1}; }
  static CliffordGate z(int q) { return {Kind::Z, q, -1}; }
  static CliffordGate cnot(int control, int target) {
    return {Kind::CNOT, control, target};
  }
  static CliffordGate cz(int a, int b) { return {Kind::CZ, a, b}; }
  static CliffordGate swap(int a, int b) { return {Kind::SWAP, a, b}; }

  bool two_qubit() const { return q1 >= 0; }
  bool operator==(const CliffordGate& other) const = default;
};

const char* gate_name(CliffordGate::Kind kind);

// Heisenberg conjugation g p g^dagger, phase-exact.
Pauli conjugate(const CliffordGate& g, const Pauli& p);

// Conjugation by the inverse gate, i.e. back-propagation of p through g.
Pauli conjugate_inverse(const CliffordGate& g, const Pauli& p);

}  // namespace syndrocal
