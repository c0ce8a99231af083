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

#include "syndrocal/circuit.hpp"
#include "syndrocal/f2.hpp"
#include "syndrocal/pauli.hpp"

namespace syndrocal {

// A joint Fourier coefficient of the circuit's internal distribution:
//   Lambda(Q, b) = sum_{e,u} P(e,u) (-1)^((e,Q) + u.b)
// where Q is an observable on the data register and b selects syndrome
// bits. Lambda(I, e_i) is the gamma factor of bit i's parity, Lambda(S(a), 0)
// the marginal beta factor of S(a).
struct SpectralQuery {
  Pauli data_observable;  // on n_data qubits
  f2::word bits = 0;      // subset of syndrome bits

  SpectralQuery(Pauli q, f2::word b) : data_observable(std::move(q)), bits(b) {}
};

// Evaluates Lambda(Q, b) by Heisenberg back-propagation: walk the
// instruction list backwards carrying the query observable, multiplying in
// a channel eigenvalue at every noise site and a (1 - 2q) factor at every
// classical flip of a selected bit. Exact, and independent of the input
// state. Runs in O(instructions).
double spectral_coefficient(const NoisyCircuit& circuit,
                            const SpectralQuery& query);

// gamma table: a -> Lambda(I, a), the Walsh transform of the outcome-flip
// marginal P(u).
f2::F2Function gamma_table(const NoisyCircuit& circuit);

// Marginal beta table: a -> Lambda(S(a), 0).
f2::F2Function beta_table(const NoisyCircuit& circuit);

// Outcome-resolved beta table: beta_{a,u} is the inverse Walsh transform
// of b -> Lambda(S(a), b) over the bit argument. Values are packed
// a | u << m, matching calib's BetaAuTable layout.
std::vector<double> beta_au_spectral(const NoisyCircuit& circuit);

}  // namespace syndrocal
