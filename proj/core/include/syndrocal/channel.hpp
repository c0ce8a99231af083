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
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syndrocal/code.hpp"
#include "syndrocal/f2.hpp"
#include "syndrocal/pauli.hpp"

namespace syndrocal {

// Pauli channel on an ordered list of register qubits. Probabilities are
// stored densely over the 4^s effective Paulis of the support, indexed by
// x_bits | z_bits << s in support order.
class PauliChannel {
 public:
  PauliChannel(std::vector<int> support, std::vector<double> probs);

  int support_size() const { return static_cast<int>(support_.size()); }
  const std::vector<int>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }

  // The error Pauli of a dense index, embedded in an n-qubit register.
  Pauli error_at(std::size_t index, int n_qubits) const;

 private:
  std::vector<int> support_;
  std::vector<double> probs_;
};

// Two-qubit depolarizing channel: p(I) = 1 - 15/16 lambda, all fifteen
// errors lambda/16 each.
PauliChannel depolarizing2(double lambda, int q0, int q1);

// Z error on the control qubit with probability lambda, identity otherwise.
PauliChannel z_control(double lambda, int control, int other);

// X flip with probability p on one qubit.
PauliChannel bit_flip(double p, int qubit);

// sum_p probs(p) (-1)^pairing(p, r), evaluated on the channel support.
// Equals 1 at the identity and lies in [-1, 1].
double eigenvalue(const PauliChannel& ch, const Pauli& r);

// Classical flip of one syndrome bit.
struct ClassicalFlipChannel {
  int bit = 0;
  double q = 0.0;
};

// Joint distribution P(e, u) over data-register Pauli errors e and
// outcome-flip words u; the internal probability distribution of a faulty
// measurement. Sparse storage keyed by (x_mask, z_mask, u).
class JointErrorDistribution {
 public:
  // Key layout: x | z << n | u << 2n. Requires 2n + m <= 64.
  using Key = std::uint64_t;
  using Map = std::unordered_map<Key, double>;

  JointErrorDistribution(int n, int m);

  static JointErrorDistribution ideal(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const Map& entries() const { return map_; }

  Key key(std::uint64_t x, std::uint64_t z, f2::word u) const;
  void unpack(Key k, std::uint64_t& x, std::uint64_t& z, f2::word& u) const;
  Pauli error_of(Key k) const;
  f2::word flips_of(Key k) const;

  void add(std::uint64_t x, std::uint64_t z, f2::word u, double p);
  double prob(std::uint64_t x, std::uint64_t z, f2::word u) const;
  double total() const;

  // Drops entries below the threshold (defaults match the engine pruning).
  void prune(double threshold = 1e-15);
  void check_normalized(double tol = 1e-9) const;

 private:
  int n_;
  int m_;
  Map map_;
};

// P(u) = sum_e P(e, u).
f2::F2Function bit_marginal(const JointErrorDistribution& dist);

// Conditional error distribution e -> P(e, u) / P(u). Throws
// std::domain_error when P(u) vanishes.
std::vector<std::pair<Pauli, double>> conditional(
    const JointErrorDistribution& dist, f2::word u);

// Marginal over outcome flips: e -> sum_u P(e, u).
std::vector<std::pair<Pauli, double>> error_marginal(
    const JointErrorDistribution& dist);

// Twisted convolution composing two faulty measurements: the first
// measurement has distribution `first` (generators S), the second `second`
// (generators T, given for Syn_T). Outcome bits of `first` occupy the low
// m positions of the composite word.
JointErrorDistribution compose_faulty(const JointErrorDistribution& second,
                                      const JointErrorDistribution& first,
                                      const std::vector<Pauli>& t_generators);

// Noise model specification, e.g. "depolarizing2:lambda=0.01",
// "z-control:lambda=0.1", "bitflip:p=0.01", "measflip:q=0.05", "none".
// Parsed case-insensitively.
struct NoiseSpec {
  enum class Kind { None, Depolarizing2, ZControl, BitFlip, MeasFlip };
  Kind kind = Kind::None;
  double param = 0.0;

  std::string to_string() const;
};

NoiseSpec parse_noise_spec(const std::string& text);

}  // namespace syndrocal
