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

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syndrocal/channel.hpp"
#include "syndrocal/code.hpp"
#include "syndrocal/pauli.hpp"

namespace syndrocal {

// One step of a noisy syndrome-extraction circuit. Measurements are in the
// Z basis and write one syndrome bit each.
struct Instruction {
  enum class Kind { Gate, Noise, Measure, ClassicalFlip, Reset };

  Kind kind = Kind::Gate;
  CliffordGate gate{CliffordGate::Kind::H, 0, -1};  // Gate
  std::optional<PauliChannel> channel;              // Noise
  std::optional<NoiseSpec> channel_spec;            // set for named models
  int qubit = -1;                                   // Measure / Reset
  int bit = -1;                                     // Measure / ClassicalFlip
  double flip_prob = 0.0;                           // ClassicalFlip

  static Instruction make_gate(CliffordGate g);
  static Instruction make_noise(PauliChannel ch,
                                std::optional<NoiseSpec> spec = std::nullopt);
  static Instruction make_measure(int qubit, int bit);
  static Instruction make_flip(int bit, double q);
  static Instruction make_reset(int qubit);
};

// An instruction sequence measuring the generators of `code` once. Data
// qubits occupy indices [0, n); ancillas follow.
class NoisyCircuit {
 public:
  NoisyCircuit(StabilizerCode code, int n_total,
               std::vector<Instruction> instructions);

  const StabilizerCode& code() const { return *code_; }
  int n_data() const { return code_->n(); }
  int n_total() const { return n_total_; }
  int m() const { return code_->m(); }
  const std::vector<Instruction>& instructions() const { return instructions_; }

 private:
  std::shared_ptr<const StabilizerCode> code_;
  int n_total_;
  std::vector<Instruction> instructions_;
};

// One ancilla, reused: per generator, prepare |0>, H, controlled Paulis
// onto the support, H, measure, reset.
NoisyCircuit build_sequential_extraction(const StabilizerCode& code);

// The three-ancilla parallel Steane extraction. The first half measures
// S3, S4, S5, the second half S6, S1, S2; two ancilla-ancilla CZ gates per
// half compensate for the interleaved ordering. Gate list kept in one data
// table in the implementation so it can be amended independently of the
// engines.
NoisyCircuit build_parallel_extraction_steane();

// Sequential gadget for a single generator; the result is a one-bit
// circuit over the sub-code generated by that generator alone.
NoisyCircuit build_single_generator_extraction(const StabilizerCode& code,
                                               int generator_index);

// Inserts noise instructions according to the model:
//  - depolarizing2 / z-control: a two-qubit channel after each two-qubit
//    gate (for z-control the Z falls on the first-listed gate qubit);
//  - bitflip: an X-flip channel per touched qubit after every gate and
//    reset, and a classical outcome flip per measurement;
//  - measflip: a classical outcome flip after each measurement only.
NoisyCircuit attach_noise(const NoisyCircuit& circuit, const NoiseSpec& spec);

// Plain-text dump, one instruction per line; bit-exact round trip with
// parse_circuit for circuits built from named noise models.
std::string dump_circuit(const NoisyCircuit& circuit);
NoisyCircuit parse_circuit(std::istream& in, const StabilizerCode& code);
NoisyCircuit parse_circuit(const std::string& text, const StabilizerCode& code);

}  // namespace syndrocal
