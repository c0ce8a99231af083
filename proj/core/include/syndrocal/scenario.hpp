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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iosfwd>
#include <mutex>
#include <thread>
#include <string>
#include <utility>
#include <vector>

#include "syndrocal/calib.hpp"
#include "syndrocal/circuit.hpp"
#include "syndrocal/states.hpp"

namespace syndrocal {

// Batch experiment configuration; file values use flat key=value lines and
// command-line flags override them.
struct ScenarioConfig {
  std::string code = "steane";       // "steane" or a code file path
  std::string circuit = "parallel";  // "parallel" | "sequential"
  std::string noise = "none";        // noise model specification string
  std::string state = "calibration"; // "calibration" | "codeword"
  std::vector<double> lambdas;       // grid; overrides the noise parameter
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1;
  int rounds = 2;       // 1 calibrates gamma only
  bool analytic = true;
  bool emit_beta_au = false;  // also write the beta_{a,u} CSV
  std::string out_dir = ".";
};

ScenarioConfig read_config_file(const std::string& path);
void apply_config_entry(ScenarioConfig& config, const std::string& key,
                        const std::string& value);

// A configured scenario instance at one grid point.
struct Scenario {
  NoisyCircuit circuit;
  InputState state;
  NoiseSpec noise;
};

Scenario build_scenario(const ScenarioConfig& config, double param);

// Analytic calibration of a noisy circuit straight from the spectral
// engine: gamma(a) = Lambda(I, a), beta(a) = Lambda(S(a), 0).
CalibrationReport analytic_calibration(const NoisyCircuit& circuit);

// Empirical calibration from sampled records; with rounds = 1 only the
// gamma factors are defined.
CalibrationReport empirical_calibration(const NoisyCircuit& circuit,
                                        const InputState& state,
                                        std::uint64_t shots, std::uint64_t seed,
                                        int rounds = 2);

// CSV emission. Every command yields (file name, contents) pairs; contents
// are deterministic functions of the configuration.
using CsvFiles = std::vector<std::pair<std::string, std::string>>;

std::string calibration_csv(const CalibrationReport& report);
std::string beta_au_csv(const BetaAuTable& table);

CsvFiles cmd_calibrate(const ScenarioConfig& config);
CsvFiles cmd_estimate_channel(const ScenarioConfig& config);
CsvFiles cmd_decode_compare(const ScenarioConfig& config);
CsvFiles cmd_recover_generators(const ScenarioConfig& config);

// Cross-engine and appendix property checks; returns true when everything
// passes and prints one line per check. `inject_fault` corrupts the
// parallel-circuit gate table copy under test to prove the checks bite.
bool run_selftest(std::ostream& log, bool inject_fault = false);

// Shortest round-trip decimal rendering used by all CSV output.
std::string format_number(double v);

// Runs fn(0..count-1) on a bounded worker pool and returns results in
// index order. Tasks must be independent; determinism comes from the
// per-task seed keys, never from scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  if (count == 0) return out;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(
      count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace syndrocal
