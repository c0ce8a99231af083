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

#include "syndrocal/forward.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace syndrocal {

namespace {

// Frame keys pack (x, z, u) for the full register: x | z << N | u << 2N.
using Map = std::unordered_map<std::uint64_t, double>;

struct Layout {
  int n_total;
  std::uint64_t qmask;

  std::uint64_t x_of(std::uint64_t k) const { return k & qmask; }
  std::uint64_t z_of(std::uint64_t k) const { return (k >> n_total) & qmask; }
  std::uint64_t u_of(std::uint64_t k) const { return k >> (2 * n_total); }
  std::uint64_t key(std::uint64_t x, std::uint64_t z, std::uint64_t u) const {
    return x | (z << n_total) | (u << (2 * n_total));
  }
};

void check_cap(const Map& map, const ForwardOptions& options) {
  if (map.size() > options.max_entries) {
    throw std::runtime_error(
        "exact_joint_distribution: sparse support exceeded " +
        std::to_string(options.max_entries) +
        " entries; use the spectral engine for this circuit");
  }
}

}  // namespace

JointErrorDistribution exact_joint_distribution(const NoisyCircuit& circuit,
                                                const ForwardOptions& options) {
  const int n_total = circuit.n_total();
  const int m = circuit.m();
  if (2 * n_total + m > 64) {
    throw std::invalid_argument("circuit frame key does not fit 64 bits");
  }
  const Layout L{n_total, (std::uint64_t{1} << n_total) - 1};

  Map current;
  current[0] = 1.0;

  for (const Instruction& ins : circuit.instructions()) {
    switch (ins.kind) {
      case Instruction::Kind::Gate: {
        Map next;
        next.reserve(current.size());
        for (const auto& [k, p] : current) {
          Pauli frame(n_total, L.x_of(k), L.z_of(k), 0);
          Pauli moved = conjugate(ins.gate, frame);
          next[L.key(moved.x_mask, moved.z_mask, L.u_of(k))] += p;
        }
        current = std::move(next);
        break;
      }
      case Instruction::Kind::Noise: {
        const PauliChannel& ch = *ins.channel;
        // Precompute the channel errors as full-register mask pairs.
        std::vector<std::uint64_t> ex, ez;
        std::vector<double> ep;
        for (std::size_t idx = 0; idx < ch.probs().size(); ++idx) {
          if (ch.probs()[idx] == 0.0) continue;
          Pauli e = ch.error_at(idx, n_total);
          ex.push_back(e.x_mask);
          ez.push_back(e.z_mask);
          ep.push_back(ch.probs()[idx]);
        }
        Map next;
        next.reserve(current.size() * ep.size());
        for (const auto& [k, p] : current) {
          for (std::size_t i = 0; i < ep.size(); ++i) {
            double q = p * ep[i];
            if (q == 0.0) continue;
            next[k ^ L.key(ex[i], ez[i], 0)] += q;
          }
        }
        current = std::move(next);
        check_cap(current, options);
        break;
      }
      case Instruction::Kind::Measure: {
        const std::uint64_t xbit = std::uint64_t{1} << ins.qubit;
        const std::uint64_t ubit = std::uint64_t{1} << (2 * n_total + ins.bit);
        Map next;
        next.reserve(current.size());
        for (const auto& [k, p] : current) {
          next[(k & xbit) ? k ^ ubit : k] += p;
        }
        current = std::move(next);
        break;
      }
      case Instruction::Kind::ClassicalFlip: {
        const std::uint64_t ubit = std::uint64_t{1} << (2 * n_total + ins.bit);
        const double q = ins.flip_prob;
        if (q == 0.0) break;
        Map next;
        next.reserve(current.size() * 2);
        for (const auto& [k, p] : current) {
          if (p * (1.0 - q) != 0.0) next[k] += p * (1.0 - q);
          if (p * q != 0.0) next[k ^ ubit] += p * q;
        }
        current = std::move(next);
        check_cap(current, options);
        break;
      }
      case Instruction::Kind::Reset: {
        const std::uint64_t clear =
            ~((std::uint64_t{1} << ins.qubit) |
              (std::uint64_t{1} << (n_total + ins.qubit)));
        Map next;
        next.reserve(current.size());
        for (const auto& [k, p] : current) {
          next[k & clear] += p;
        }
        current = std::move(next);
        break;
      }
    }
  }

  // Project onto the data register; leftover ancilla components are dead
  // after the final measurement and reset.
  const int n_data = circuit.n_data();
  const std::uint64_t data_mask = (std::uint64_t{1} << n_data) - 1;
  JointErrorDistribution out(n_data, m);
  for (const auto& [k, p] : current) {
    out.add(L.x_of(k) & data_mask, L.z_of(k) & data_mask,
            static_cast<f2::word>(L.u_of(k)), p);
  }
  out.prune(options.prune_threshold);
  return out;
}

}  // namespace syndrocal
