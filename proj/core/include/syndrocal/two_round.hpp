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
#include <vector>

#include "syndrocal/channel.hpp"
#include "syndrocal/circuit.hpp"
#include "syndrocal/f2.hpp"
#include "syndrocal/states.hpp"

namespace syndrocal {

// Outcome distribution of a single faulty measurement,
// ptilde(x) = (P(u) * p(.|rho))(x).
f2::F2Function noisy_outcome_distribution(const JointErrorDistribution& dist,
                                          const InputState& state,
                                          const StabilizerCode& code);

// Joint distribution q(x, y) of the two-round calibration experiment under
// the position-independence assumption (the same P acts in both rounds):
//
//   q(x,y) = sum_{e1,u1,u2} P(e1,u1) P(u2) p(x^u1|rho) [y == x^u1^Syn(e1)^u2]
//
// Returned over 2^(2m) outcomes indexed x | y << m.
f2::F2Function two_round_joint(const JointErrorDistribution& dist,
                               const InputState& state,
                               const StabilizerCode& code);

f2::F2Function round_marginal(const f2::F2Function& joint, int m, int round);

struct ShotRecord {
  f2::word x = 0;        // round-1 outcome
  f2::word y = 0;        // round-2 outcome when two rounds were sampled
  bool has_y = false;
  std::uint64_t shot_index = 0;  // seed lineage
};

// Draws words i.i.d. from `dist` with the counter generator keyed by
// (seed, shot index); deterministic and order-independent.
std::vector<f2::word> sample_words(const f2::F2Function& dist,
                                   std::uint64_t shots, std::uint64_t seed);

// One round samples ptilde, two rounds sample the two-round joint.
std::vector<ShotRecord> sample_shots(const JointErrorDistribution& dist,
                                     const InputState& state,
                                     const StabilizerCode& code,
                                     std::uint64_t shots, std::uint64_t seed,
                                     int rounds);

// Convenience overload that extracts the circuit's internal distribution
// with the forward engine first.
std::vector<ShotRecord> sample_shots(const NoisyCircuit& circuit,
                                     const InputState& state,
                                     std::uint64_t shots, std::uint64_t seed,
                                     int rounds);

}  // namespace syndrocal
