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

#include "syndrocal/f2.hpp"
#include "syndrocal/rng.hpp"

namespace {

using namespace syndrocal;

f2::F2Function random_function(int m) {
  CounterRng rng(m);
  f2::F2Function f(m);
  for (f2::word x = 0; x < f.size(); ++x) f[x] = rng.next_double();
  return f;
}

void BM_walsh(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  f2::F2Function f = random_function(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f2::walsh(f));
  }
  state.SetComplexityN(std::int64_t{1} << m);
}
BENCHMARK(BM_walsh)->Arg(6)->Arg(10)->Arg(16)->Complexity(benchmark::oNLogN);

void BM_convolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  f2::F2Function f = random_function(m);
  f2::F2Function g = random_function(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f2::convolve(f, g));
  }
}
BENCHMARK(BM_convolve)->Arg(6)->Arg(8);

void BM_cosets(benchmark::State& state) {
  f2::F2Subspace w(12, {0x0f3u, 0x3c5u, 0x111u, 0x802u});
  for (auto _ : state) {
    benchmark::DoNotOptimize(f2::cosets(w));
  }
}
BENCHMARK(BM_cosets);

}  // namespace
