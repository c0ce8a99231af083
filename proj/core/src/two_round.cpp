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

#include "syndrocal/two_round.hpp"

#include <algorithm>
#include <stdexcept>

#include "syndrocal/forward.hpp"
#include "syndrocal/rng.hpp"

namespace syndrocal {

f2::F2Function noisy_outcome_distribution(const JointErrorDistribution& dist,
                                          const InputState& state,
                                          const StabilizerCode& code) {
  f2::F2Function ideal = ideal_syndrome_distribution(state, code);
  return f2::convolve(bit_marginal(dist), ideal);
}

f2::F2Function two_round_joint(const JointErrorDistribution& dist,
                               const InputState& state,
                               const StabilizerCode& code) {
  const int m = dist.m();
  if (m != code.m()) {
    throw std::invalid_argument("two_round_joint: syndrome width mismatch");
  }
  if (2 * m > f2::max_dim) {
    throw std::invalid_argument("two_round_joint: 2m exceeds supported dimension");
  }
  dist.check_normalized();
  const f2::word words = f2::word{1} << m;

  // Aggregate the round-1 error by (flip word, syndrome of the error).
  f2::F2Function ideal = ideal_syndrome_distribution(state, code);
  f2::F2Function flip_marginal = bit_marginal(dist);
  std::vector<double> by_flip_syn(std::size_t{1} << (2 * m), 0.0);
  for (const auto& [k, p] : dist.entries()) {
    f2::word u1 = dist.flips_of(k);
    f2::word syn = syndrome_of(dist.error_of(k), code);
    by_flip_syn[u1 | (syn << m)] += p;
  }

  f2::F2Function joint(2 * m);
  for (f2::word u1 = 0; u1 < words; ++u1) {
    for (f2::word syn = 0; syn < words; ++syn) {
      double t = by_flip_syn[u1 | (syn << m)];
      if (t == 0.0) continue;
      for (f2::word ideal_x = 0; ideal_x < words; ++ideal_x) {
        double base = t * ideal[ideal_x];
        if (base == 0.0) continue;
        const f2::word x = ideal_x ^ u1;
        const f2::word y_base = ideal_x ^ syn;
        for (f2::word u2 = 0; u2 < words; ++u2) {
          double q = flip_marginal[u2];
          if (q == 0.0) continue;
          joint[x | (static_cast<f2::word>(y_base ^ u2) << m)] += base * q;
        }
      }
    }
  }
  return joint;
}

f2::F2Function round_marginal(const f2::F2Function& joint, int m, int round) {
  if (joint.dim() != 2 * m || (round != 1 && round != 2)) {
    throw std::invalid_argument("round_marginal: bad arguments");
  }
  f2::F2Function out(m);
  const f2::word words = f2::word{1} << m;
  for (f2::word x = 0; x < words; ++x) {
    for (f2::word y = 0; y < words; ++y) {
      out[round == 1 ? x : y] += joint[x | (y << m)];
    }
  }
  return out;
}

std::vector<f2::word> sample_words(const f2::F2Function& dist,
                                   std::uint64_t shots, std::uint64_t seed) {
  dist.require_distribution(1e-9);
  std::vector<double> cdf(dist.size());
  double acc = 0.0;
  for (f2::word x = 0; x < dist.size(); ++x) {
    acc += std::max(dist[x], 0.0);
    cdf[x] = acc;
  }
  std::vector<f2::word> out;
  out.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    CounterRng rng(CounterRng::derive_key(seed, s));
    double r = rng.next_double() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
    out.push_back(static_cast<f2::word>(
        std::min<std::size_t>(it - cdf.begin(), dist.size() - 1)));
  }
  return out;
}

std::vector<ShotRecord> sample_shots(const JointErrorDistribution& dist,
                                     const InputState& state,
                                     const StabilizerCode& code,
                                     std::uint64_t shots, std::uint64_t seed,
                                     int rounds) {
  if (shots < 1) throw std::invalid_argument("sample_shots: shots must be >= 1");
  if (rounds != 1 && rounds != 2) {
    throw std::invalid_argument("sample_shots: rounds must be 1 or 2");
  }
  const int m = dist.m();
  std::vector<ShotRecord> out;
  out.reserve(shots);
  if (rounds == 1) {
    f2::F2Function pt = noisy_outcome_distribution(dist, state, code);
    auto words = sample_words(pt, shots, seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
      out.push_back(ShotRecord{words[s], 0, false, s});
    }
  } else {
    f2::F2Function joint = two_round_joint(dist, state, code);
    auto words = sample_words(joint, shots, seed);
    const f2::word mask = (f2::word{1} << m) - 1;
    for (std::uint64_t s = 0; s < shots; ++s) {
      out.push_back(
          ShotRecord{static_cast<f2::word>(words[s] & mask),
                     static_cast<f2::word>(words[s] >> m), true, s});
    }
  }
  return out;
}

std::vector<ShotRecord> sample_shots(const NoisyCircuit& circuit,
                                     const InputState& state,
                                     std::uint64_t shots, std::uint64_t seed,
                                     int rounds) {
  JointErrorDistribution joint = exact_joint_distribution(circuit);
  return sample_shots(joint, state, circuit.code(), shots, seed, rounds);
}

}  // namespace syndrocal
