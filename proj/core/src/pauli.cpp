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

#include "syndrocal/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace syndrocal {

namespace {

int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

void check_same_size(const Pauli& p, const Pauli& q) {
  if (p.n_qubits != q.n_qubits) {
    throw std::invalid_argument("Pauli size mismatch");
  }
}

void check_qubit(const Pauli& p, int q) {
  if (q < 0 || q >= p.n_qubits) {
    throw std::out_of_range("qubit index out of range");
  }
}

}  // namespace

Pauli::Pauli(int n, std::uint64_t x, std::uint64_t z, int phase)
    : n_qubits(n), x_mask(x), z_mask(z), phase_exp(((phase % 4) + 4) % 4) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("Pauli supports 1..64 qubits");
  }
  const std::uint64_t allowed =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((x & ~allowed) || (z & ~allowed)) {
    throw std::invalid_argument("Pauli mask exceeds qubit count");
  }
}

Pauli Pauli::identity(int n) { return Pauli(n, 0, 0, 0); }

Pauli Pauli::single(int n, int qubit, char letter) {
  std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I':
      return Pauli(n, 0, 0, 0);
    case 'X':
      return Pauli(n, bit, 0, 0);
    case 'Y':
      return Pauli(n, bit, bit, 1);  // Y = i X Z
    case 'Z':
      return Pauli(n, 0, bit, 0);
    default:
      throw std::invalid_argument("Pauli letter must be one of I, X, Y, Z");
  }
}

int pairing(const Pauli& p, const Pauli& q) {
  check_same_size(p, q);
  return parity64(p.x_mask & q.z_mask) ^ parity64(p.z_mask & q.x_mask);
}

Pauli multiply(const Pauli& p, const Pauli& q) {
  check_same_size(p, q);
  // (i^a X^x1 Z^z1)(i^b X^x2 Z^z2): commuting Z^z1 past X^x2 costs
  // (-1)^(z1.x2).
  int phase = p.phase_exp + q.phase_exp + 2 * parity64(p.z_mask & q.x_mask);
  return Pauli(p.n_qubits, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask, phase);
}

int weight(const Pauli& p) { return std::popcount(p.x_mask | p.z_mask); }

int rendered_phase_exp(const Pauli& p) {
  int y_count = std::popcount(p.x_mask & p.z_mask);
  return ((p.phase_exp - y_count) % 4 + 4) % 4;
}

std::string to_string(const Pauli& p, bool with_sign) {
  static const char* signs[4] = {"+", "+i", "-", "-i"};
  std::string out;
  if (with_sign) out += signs[rendered_phase_exp(p)];
  for (int q = 0; q < p.n_qubits; ++q) {
    bool x = (p.x_mask >> q) & 1;
    bool z = (p.z_mask >> q) & 1;
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

Pauli pauli_from_string(const std::string& text) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    phase = text[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase += 1;
      ++pos;
    }
  }
  const std::string letters = text.substr(pos);
  if (letters.empty() || letters.size() > 64) {
    throw std::invalid_argument("bad Pauli string: \"" + text + "\"");
  }
  std::uint64_t x = 0, z = 0;
  int y_count = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    std::uint64_t bit = std::uint64_t{1} << q;
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        ++y_count;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument("bad Pauli letter in \"" + text + "\"");
    }
  }
  return Pauli(static_cast<int>(letters.size()), x, z, phase + y_count);
}

const char* gate_name(CliffordGate::Kind kind) {
  switch (kind) {
    case CliffordGate::Kind::H:
      return "H";
    case CliffordGate::Kind::S:
      return "S";
    case CliffordGate::Kind::X:
      return "X";
    case CliffordGate::Kind::Y:
      return "Y";
    case CliffordGate::Kind::Z:
      return "Z";
    case CliffordGate::Kind::CNOT:
      return "CNOT";
    case CliffordGate::Kind::CZ:
      return "CZ";
    case CliffordGate::Kind::SWAP:
      return "SWAP";
  }
  return "?";
}

namespace {

// Images of single-qubit generators under conjugation. `dagger` selects
// the inverse gate (only S is not self-inverse in this set).
Pauli image_of_x(const CliffordGate& g, int q, int n, bool dagger) {
  using K = CliffordGate::Kind;
  const std::uint64_t b0 = std::uint64_t{1} << g.q0;
  const std::uint64_t b1 = g.q1 >= 0 ? std::uint64_t{1} << g.q1 : 0;
  const std::uint64_t bq = std::uint64_t{1} << q;
  switch (g.kind) {
    case K::H:
      return Pauli(n, 0, bq, 0);  // X -> Z
    case K::S:
      return Pauli(n, bq, bq, dagger ? 3 : 1);  // X -> +-Y
    case K::X:
      return Pauli(n, bq, 0, 0);
    case K::Y:
    case K::Z:
      return Pauli(n, bq, 0, 2);  // X -> -X
    case K::CNOT:
      if (q == g.q0) return Pauli(n, b0 | b1, 0, 0);  // Xc -> Xc Xt
      return Pauli(n, bq, 0, 0);                      // Xt -> Xt
    case K::CZ:
      return Pauli(n, bq, q == g.q0 ? b1 : b0, 0);  // Xa -> Xa Zb
    case K::SWAP:
      return Pauli(n, q == g.q0 ? b1 : b0, 0, 0);
  }
  throw std::logic_error("unhandled gate kind");
}

Pauli image_of_z(const CliffordGate& g, int q, int n, bool /*dagger*/) {
  using K = CliffordGate::Kind;
  const std::uint64_t b0 = std::uint64_t{1} << g.q0;
  const std::uint64_t b1 = g.q1 >= 0 ? std::uint64_t{1} << g.q1 : 0;
  const std::uint64_t bq = std::uint64_t{1} << q;
  switch (g.kind) {
    case K::H:
      return Pauli(n, bq, 0, 0);  // Z -> X
    case K::S:
    case K::Z:
      return Pauli(n, 0, bq, 0);
    case K::X:
    case K::Y:
      return Pauli(n, 0, bq, 2);  // Z -> -Z
    case K::CNOT:
      if (q == g.q1) return Pauli(n, 0, b0 | b1, 0);  // Zt -> Zc Zt
      return Pauli(n, 0, bq, 0);                      // Zc -> Zc
    case K::CZ:
      return Pauli(n, 0, bq, 0);
    case K::SWAP:
      return Pauli(n, 0, q == g.q0 ? b1 : b0, 0);
  }
  throw std::logic_error("unhandled gate kind");
}

Pauli conjugate_impl(const CliffordGate& g, const Pauli& p, bool dagger) {
  check_qubit(p, g.q0);
  if (g.two_qubit()) {
    check_qubit(p, g.q1);
    if (g.q0 == g.q1) {
      throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
  }
  const std::uint64_t touched =
      (std::uint64_t{1} << g.q0) | (g.q1 >= 0 ? std::uint64_t{1} << g.q1 : 0);
  if (((p.x_mask | p.z_mask) & touched) == 0) return p;

  // Conjugate the canonical product i^k X^x Z^z factor by factor; bits
  // outside the gate support pass through unchanged.
  Pauli result(p.n_qubits, p.x_mask & ~touched, 0, p.phase_exp);
  for (int q : {g.q0, g.q1}) {
    if (q < 0) continue;
    if ((p.x_mask >> q) & 1) {
      result = multiply(result, image_of_x(g, q, p.n_qubits, dagger));
    }
  }
  result = multiply(result, Pauli(p.n_qubits, 0, p.z_mask & ~touched, 0));
  for (int q : {g.q0, g.q1}) {
    if (q < 0) continue;
    if ((p.z_mask >> q) & 1) {
      result = multiply(result, image_of_z(g, q, p.n_qubits, dagger));
    }
  }
  return result;
}

}  // namespace

Pauli conjugate(const CliffordGate& g, const Pauli& p) {
  return conjugate_impl(g, p, false);
}

Pauli conjugate_inverse(const CliffordGate& g, const Pauli& p) {
  return conjugate_impl(g, p, true);
}

}  // namespace syndrocal
