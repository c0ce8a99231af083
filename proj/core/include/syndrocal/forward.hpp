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

#include <cstddef>

#include "syndrocal/channel.hpp"
#include "syndrocal/circuit.hpp"

namespace syndrocal {

struct ForwardOptions {
  // Sparse support cap; exceeding it aborts with an error pointing at the
  // spectral engine, which handles such circuits query by query.
  std::size_t max_entries = 20'000'000;
  // Applied to the final result only; in flight the propagation is exact
  // (the support saturates long before pruning would shrink it, and
  // repeated in-flight pruning costs measurable probability mass).
  double prune_threshold = 1e-15;
};

// Exact internal distribution P(e, u) of the circuit, by forward
// propagation of a sparse distribution over (Pauli frame, flip word):
// gates conjugate frames, noise sites convolve, a measurement records the
// frame's X component on the measured qubit as the outcome-flip bit, and a
// reset clears the frame on its qubit. e is the accumulated error on the
// data register at the end of the circuit.
JointErrorDistribution exact_joint_distribution(
    const NoisyCircuit& circuit, const ForwardOptions& options = {});

}  // namespace syndrocal
