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

#include "syndrocal/channel.hpp"
#include "syndrocal/circuit.hpp"
#include "syndrocal/code.hpp"
#include "syndrocal/rng.hpp"
#include "syndrocal/states.hpp"

namespace syndrocal {

// Deterministic random instances for self-tests and property tests.

// m commuting independent generators on n qubits: canonical Z_i conjugated
// through a random Clifford word. Signs may come out negative.
StabilizerCode random_code(CounterRng& rng, int n, int m);

// Product state whose per-qubit Bloch components all have magnitude in
// [lo, hi]; keeps every stabilizer expectation bounded away from zero.
ProductState random_product_state(CounterRng& rng, int n, double lo = 0.35,
                                  double hi = 0.55);

// Sparse internal distribution with `extra` random error entries next to a
// dominant ideal component.
JointErrorDistribution random_faulty(CounterRng& rng, int n, int m, int extra);

// Random noisy circuit measuring the canonical Z_i "code" on n_data
// qubits: random Clifford words interleaved with named noise channels and
// classical flips, one ancilla gadget per syndrome bit.
NoisyCircuit random_circuit(CounterRng& rng, int n_data, int m);

}  // namespace syndrocal
