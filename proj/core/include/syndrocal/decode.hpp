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

#include "syndrocal/code.hpp"
#include "syndrocal/f2.hpp"

namespace syndrocal {

struct DecodeDecision {
  enum class Mode { Standard, Calibrated };

  f2::word observed = 0;
  f2::word chosen_syndrome = 0;
  Pauli correction;
  f2::F2Function posterior;  // over candidate syndromes, sums to 1
  Mode mode = Mode::Standard;
  double clipped_mass = 0.0;  // negative Walsh artifacts removed

  DecodeDecision() : posterior(1) {}
};

// Correction looked up directly from the measured syndrome.
DecodeDecision standard_decode(f2::word x, const DecodeTable& table);

// Correction from the most likely ideal syndrome: the posterior is the
// inverse Walsh transform of the conditional expectations a -> <S(a)>_x,
// clipped at zero and renormalized; ties in the argmax break toward the
// smallest word.
DecodeDecision calibrated_decode(f2::word x, const f2::F2Function& cond,
                                 const DecodeTable& table);

// P(u = 0) of the parallel Steane extraction under the Z-on-control model,
// as a closed-form polynomial in lambda.
double no_flip_probability(double lambda);

struct DisagreementPoint {
  double lambda = 0.0;
  double standard_wrong_rate = 0.0;
  double standard_wrong_rate_se = 0.0;
  double calibrated_wrong_rate = 0.0;
  double closed_form_target = 0.0;  // 1 - P(u=0)
};

// The codeword + Z-on-control scenario: how often each decoding applies a
// correction other than the (correct) identity.
std::vector<DisagreementPoint> disagreement_experiment(
    const std::vector<double>& lambdas, std::uint64_t shots, std::uint64_t seed);

}  // namespace syndrocal
