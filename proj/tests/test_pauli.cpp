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

#include <string>
#include <stdexcept>

#include "doctest.h"
#include "syndrocal/code.hpp"
#include "syndrocal/pauli.hpp"
#include "syndrocal/rng.hpp"

using namespace syndrocal;

TEST_CASE("pairing on one and two qubits") {
  Pauli x = pauli_from_string("X"), z = pauli_from_string("Z");
  CHECK(pairing(x, z) == 1);
  CHECK(pairing(x, x) == 0);
  // Two anticommuting overlaps cancel mod 2.
  CHECK(pairing(pauli_from_string("XZ"), pauli_from_string("ZX")) == 0);
  CHECK_THROWS_AS(pairing(x, pauli_from_string("XX")), std::invalid_argument);
}

TEST_CASE("pairing is symmetric, bilinear and alternating") {
  CounterRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_pauli = [&]() {
      return Pauli(4, rng.next_u64() & 15, rng.next_u64() & 15, 0);
    };
    Pauli p = rand_pauli(), q = rand_pauli(), r = rand_pauli();
    CHECK(pairing(p, q) == pairing(q, p));
    CHECK(pairing(p, p) == 0);
    CHECK(pairing(multiply(p, q), r) == (pairing(p, r) ^ pairing(q, r)));
  }
}

TEST_CASE("single-qubit product phase table") {
  // Entry [p][q] is the rendered phase exponent of p*q over I, X, Y, Z,
  // following X.Z = -iY, Z.X = +iY, X.Y = +iZ.
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  const int expected[4][4] = {{0, 0, 0, 0},
                              {0, 0, 1, 3},
                              {0, 3, 0, 1},
                              {0, 1, 3, 0}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Pauli p = Pauli::single(1, 0, letters[i]);
      Pauli q = Pauli::single(1, 0, letters[j]);
      Pauli prod = multiply(p, q);
      CHECK(rendered_phase_exp(prod) == expected[i][j]);
      // The letter part is the XOR of the mask pairs.
      CHECK(prod.x_mask == (p.x_mask ^ q.x_mask));
      CHECK(prod.z_mask == (p.z_mask ^ q.z_mask));
    }
  }
  CHECK(to_string(multiply(pauli_from_string("X"), pauli_from_string("Z"))) ==
        "-iY");
}

TEST_CASE("hermitian paulis square to +identity") {
  CounterRng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::string s = "+";
    for (int q = 0; q < 5; ++q) s += "IXYZ"[rng.next_u64() & 3];
    Pauli p = pauli_from_string(s);
    Pauli sq = multiply(p, p);
    CHECK(sq.is_identity_mask());
    CHECK(sq.phase_exp == 0);
  }
}

TEST_CASE("IIIXXXX times IIIZZZZ is +IIIYYYY") {
  Pauli prod =
      multiply(pauli_from_string("+IIIXXXX"), pauli_from_string("+IIIZZZZ"));
  CHECK(to_string(prod) == "+IIIYYYY");
  CHECK(weight(prod) == 4);
}

TEST_CASE("weight counts Y once") {
  CHECK(weight(Pauli::identity(3)) == 0);
  CHECK(weight(pauli_from_string("IIIYYYY")) == 4);
  CHECK(weight(Pauli(2, 0b10, 0b10, 1)) == 1);  // X and Z on the same qubit
}

TEST_CASE("string rendering round trips") {
  CounterRng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next_u64() % 9);
    std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
    Pauli p(n, rng.next_u64() & mask, rng.next_u64() & mask,
            static_cast<int>(rng.next_u64() & 3));
    Pauli q = pauli_from_string(to_string(p));
    CHECK(q == p);
  }
  CHECK(to_string(pauli_from_string("-iXZ")) == "-iXZ");
  CHECK_THROWS_AS(pauli_from_string("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(pauli_from_string("+"), std::invalid_argument);
}

TEST_CASE("tableau rules for H, CNOT and CZ") {
  // H on qubit 0 of two qubits.
  CHECK(to_string(conjugate(CliffordGate::h(0), pauli_from_string("XI"))) ==
        "+ZI");
  CHECK(to_string(conjugate(CliffordGate::h(0), pauli_from_string("ZI"))) ==
        "+XI");
  CHECK(to_string(conjugate(CliffordGate::h(0), pauli_from_string("YI"))) ==
        "-YI");

  // CNOT(control 0, target 1).
  CliffordGate cnot = CliffordGate::cnot(0, 1);
  CHECK(to_string(conjugate(cnot, pauli_from_string("XI"))) == "+XX");
  CHECK(to_string(conjugate(cnot, pauli_from_string("IZ"))) == "+ZZ");
  CHECK(to_string(conjugate(cnot, pauli_from_string("ZI"))) == "+ZI");
  CHECK(to_string(conjugate(cnot, pauli_from_string("IX"))) == "+IX");

  // CZ(0, 1).
  CliffordGate cz = CliffordGate::cz(0, 1);
  CHECK(to_string(conjugate(cz, pauli_from_string("XI"))) == "+XZ");
  CHECK(to_string(conjugate(cz, pauli_from_string("IX"))) == "+ZX");
  CHECK(to_string(conjugate(cz, pauli_from_string("ZI"))) == "+ZI");

  // S sends X to Y and back with the inverse.
  CHECK(to_string(conjugate(CliffordGate::s(0), pauli_from_string("X"))) ==
        "+Y");
  CHECK(to_string(conjugate_inverse(CliffordGate::s(0), pauli_from_string("Y"))) ==
        "+X");
  CHECK_THROWS_AS(conjugate(CliffordGate::h(3), pauli_from_string("XX")),
                  std::out_of_range);
}

TEST_CASE("conjugation preserves the pairing") {
  CounterRng rng(14);
  const int n = 8;
  for (int trial = 0; trial < 10000; ++trial) {
    auto rand_pauli = [&]() {
      std::uint64_t mask = (1ull << n) - 1;
      return Pauli(n, rng.next_u64() & mask, rng.next_u64() & mask,
                   static_cast<int>(rng.next_u64() & 3));
    };
    auto rand_gate = [&]() {
      int q0 = static_cast<int>(rng.next_u64() % n);
      int q1 = static_cast<int>(rng.next_u64() % (n - 1));
      if (q1 >= q0) ++q1;
      switch (rng.next_u64() % 8) {
        case 0: return CliffordGate::h(q0);
        case 1: return CliffordGate::s(q0);
        case 2: return CliffordGate::x(q0);
        case 3: return CliffordGate::y(q0);
        case 4: return CliffordGate::z(q0);
        case 5: return CliffordGate::cnot(q0, q1);
        case 6: return CliffordGate::cz(q0, q1);
        default: return CliffordGate::swap(q0, q1);
      }
    };
    Pauli p = rand_pauli(), q = rand_pauli();
    CliffordGate g = rand_gate();
    CHECK(pairing(conjugate(g, p), conjugate(g, q)) == pairing(p, q));
    // conjugate_inverse undoes conjugate.
    CHECK(conjugate_inverse(g, conjugate(g, p)) == p);
  }
}

TEST_CASE("conjugation preserves the group law") {
  CounterRng rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    Pauli p(3, rng.next_u64() & 7, rng.next_u64() & 7,
            static_cast<int>(rng.next_u64() & 3));
    Pauli q(3, rng.next_u64() & 7, rng.next_u64() & 7,
            static_cast<int>(rng.next_u64() & 3));
    CliffordGate g = (trial & 1) ? CliffordGate::cz(0, 2) : CliffordGate::cnot(1, 0);
    CHECK(conjugate(g, multiply(p, q)) ==
          multiply(conjugate(g, p), conjugate(g, q)));
  }
}

TEST_CASE("syndrome_of matches the error representative table rows") {
  StabilizerCode code = steane();
  CHECK(syndrome_of(Pauli::identity(7), code) == 0);
  // X on qubit 1 flips only the S6 sign; Z on qubit 1 only S3.
  CHECK(syndrome_of(Pauli::single(7, 0, 'X'), code) == (f2::word{1} << 5));
  CHECK(syndrome_of(Pauli::single(7, 0, 'Z'), code) == (f2::word{1} << 2));
}

TEST_CASE("syndrome_of is a homomorphism") {
  StabilizerCode code = steane();
  CounterRng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    Pauli p(7, rng.next_u64() & 127, rng.next_u64() & 127, 0);
    Pauli q(7, rng.next_u64() & 127, rng.next_u64() & 127, 0);
    CHECK(syndrome_of(multiply(p, q), code) ==
          (syndrome_of(p, code) ^ syndrome_of(q, code)));
  }
  // Adjointness: pairing(p, S(a)) = syndrome_of(p) . a, exhaustively.
  for (f2::word a = 0; a < 64; ++a) {
    Pauli sa = stabilizer_element(code, a);
    for (int q = 0; q < 7; ++q) {
      for (char letter : {'X', 'Y', 'Z'}) {
        Pauli e = Pauli::single(7, q, letter);
        CHECK(pairing(e, sa) == f2::dot(syndrome_of(e, code), a));
      }
    }
  }
}

TEST_CASE("pauli constructors validate masks and sizes") {
  CHECK_THROWS_AS(Pauli(2, 0b100, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Pauli(0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Pauli::single(2, 1, 'Q'), std::invalid_argument);
  CHECK_THROWS_AS(conjugate(CliffordGate::cnot(1, 1), pauli_from_string("XX")),
                  std::invalid_argument);
}
