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

#include <benchmark/benchmark.h>

#include "syndrocal/circuit.hpp"
#include "syndrocal/density.hpp"
#include "syndrocal/forward.hpp"
#include "syndrocal/spectral.hpp"
#include "syndrocal/two_round.hpp"

namespace {

using namespace syndrocal;

void BM_spectral_coefficient(benchmark::State& state) {
  NoiseSpec dep{NoiseSpec::Kind::Depolarizing2, 0.05};
  NoisyCircuit noisy = attach_noise(build_parallel_extraction_steane(), dep);
  Pauli s9 = stabilizer_element(noisy.code(), 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        spectral_coefficient(noisy, SpectralQuery(s9, 0x2a)));
  }
}
BENCHMARK(BM_spectral_coefficient);

void BM_gamma_table(benchmark::State& state) {
  NoiseSpec dep{NoiseSpec::Kind::Depolarizing2, 0.05};
  NoisyCircuit noisy = attach_noise(build_parallel_extraction_steane(), dep);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_table(noisy));
  }
}
BENCHMARK(BM_gamma_table);

void BM_forward_zcontrol(benchmark::State& state) {
  NoiseSpec zc{NoiseSpec::Kind::ZControl, 0.1};
  NoisyCircuit noisy = attach_noise(build_parallel_extraction_steane(), zc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_joint_distribution(noisy));
  }
}
BENCHMARK(BM_forward_zcontrol);

void BM_forward_depolarizing_gadget(benchmark::State& state) {
  NoiseSpec dep{NoiseSpec::Kind::Depolarizing2, 0.05};
  NoisyCircuit noisy =
      attach_noise(build_single_generator_extraction(steane(), 3), dep);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_joint_distribution(noisy));
  }
}
BENCHMARK(BM_forward_depolarizing_gadget);

void BM_two_round_joint(benchmark::State& state) {
  NoiseSpec zc{NoiseSpec::Kind::ZControl, 0.1};
  NoisyCircuit noisy = attach_noise(build_parallel_extraction_steane(), zc);
  JointErrorDistribution joint = exact_joint_distribution(noisy);
  InputState cw{CodewordState(noisy.code())};
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_round_joint(joint, cw, noisy.code()));
  }
}
BENCHMARK(BM_two_round_joint);

void BM_density_oracle_noiseless(benchmark::State& state) {
  NoisyCircuit circuit = build_parallel_extraction_steane();
  InputState cal(calibration_state(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_oracle(circuit, cal));
  }
}
BENCHMARK(BM_density_oracle_noiseless)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
