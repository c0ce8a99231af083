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

#include "syndrocal/random_instances.hpp"

#include <vector>

namespace syndrocal {

namespace {

int pick(CounterRng& rng, int bound) {
  return static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(bound));
}

std::vector<CliffordGate> random_clifford_word(CounterRng& rng, int n,
                                               int length) {
  std::vector<CliffordGate> word;
  word.reserve(length);
  for (int i = 0; i < length; ++i) {
    int q0 = pick(rng, n);
    switch (pick(rng, n > 1 ? 4 : 2)) {
      case 0:
        word.push_back(CliffordGate::h(q0));
        break;
      case 1:
        word.push_back(CliffordGate::s(q0));
        break;
      case 2: {
        int q1 = pick(rng, n - 1);
        if (q1 >= q0) ++q1;
        word.push_back(CliffordGate::cnot(q0, q1));
        break;
      }
      default: {
        int q1 = pick(rng, n - 1);
        if (q1 >= q0) ++q1;
        word.push_back(CliffordGate::cz(q0, q1));
        break;
      }
    }
  }
  return word;
}

}  // namespace

StabilizerCode random_code(CounterRng& rng, int n, int m) {
  auto word = random_clifford_word(rng, n, 3 * n + 4);
  std::vector<Pauli> gens;
  for (int i = 0; i < m; ++i) {
    Pauli g = Pauli::single(n, i, 'Z');
    for (const CliffordGate& gate : word) g = conjugate(gate, g);
    gens.push_back(g);
  }
  return StabilizerCode(std::move(gens), {}, {});
}

ProductState random_product_state(CounterRng& rng, int n, double lo, double hi) {
  std::vector<BlochVector> qs;
  qs.reserve(n);
  for (int q = 0; q < n; ++q) {
    auto component = [&]() {
      double mag = lo + (hi - lo) * rng.next_double();
      return (rng.next_u64() & 1) ? mag : -mag;
    };
    qs.push_back(BlochVector{component(), component(), component()});
  }
  return ProductState(std::move(qs));
}

JointErrorDistribution random_faulty(CounterRng& rng, int n, int m, int extra) {
  JointErrorDistribution dist(n, m);
  const std::uint64_t qmask = (std::uint64_t{1} << n) - 1;
  const f2::word umask = (f2::word{1} << m) - 1;
  double ideal_weight = 0.55 + 0.2 * rng.next_double();
  dist.add(0, 0, 0, ideal_weight);
  double rest = 1.0 - ideal_weight;
  std::vector<double> cuts(extra);
  double total = 0.0;
  for (int i = 0; i < extra; ++i) {
    cuts[i] = 0.05 + rng.next_double();
    total += cuts[i];
  }
  for (int i = 0; i < extra; ++i) {
    dist.add(rng.next_u64() & qmask, rng.next_u64() & qmask,
             static_cast<f2::word>(rng.next_u64()) & umask,
             rest * cuts[i] / total);
  }
  return dist;
}

NoisyCircuit random_circuit(CounterRng& rng, int n_data, int m) {
  // Canonical Z-type bookkeeping code on the data register.
  std::vector<Pauli> gens;
  for (int i = 0; i < m; ++i) gens.push_back(Pauli::single(n_data, i, 'Z'));
  StabilizerCode code(std::move(gens), {}, {});

  const int n_total = n_data + m;
  std::vector<Instruction> ins;
  auto emit_noise = [&]() {
    switch (pick(rng, 3)) {
      case 0: {
        int q0 = pick(rng, n_total);
        int q1 = pick(rng, n_total - 1);
        if (q1 >= q0) ++q1;
        NoiseSpec spec{NoiseSpec::Kind::Depolarizing2, 0.02 + 0.1 * rng.next_double()};
        ins.push_back(Instruction::make_noise(
            depolarizing2(spec.param, q0, q1), spec));
        break;
      }
      case 1: {
        int q0 = pick(rng, n_total);
        NoiseSpec spec{NoiseSpec::Kind::BitFlip, 0.02 + 0.1 * rng.next_double()};
        ins.push_back(Instruction::make_noise(bit_flip(spec.param, q0), spec));
        break;
      }
      default: {
        int q0 = pick(rng, n_total);
        int q1 = pick(rng, n_total - 1);
        if (q1 >= q0) ++q1;
        NoiseSpec spec{NoiseSpec::Kind::ZControl, 0.05 + 0.2 * rng.next_double()};
        ins.push_back(Instruction::make_noise(z_control(spec.param, q0, q1), spec));
        break;
      }
    }
  };

  for (int bit = 0; bit < m; ++bit) {
    for (const CliffordGate& g : random_clifford_word(rng, n_data, 2 + pick(rng, 3))) {
      ins.push_back(Instruction::make_gate(g));
    }
    emit_noise();
    const int anc = n_data + bit;
    ins.push_back(Instruction::make_gate(CliffordGate::h(anc)));
    const int couplings = 1 + pick(rng, n_data);
    for (int c = 0; c < couplings; ++c) {
      int q = pick(rng, n_data);
      ins.push_back(Instruction::make_gate(
          (rng.next_u64() & 1) ? CliffordGate::cnot(anc, q)
                               : CliffordGate::cz(anc, q)));
      if (pick(rng, 2) == 0) emit_noise();
    }
    ins.push_back(Instruction::make_gate(CliffordGate::h(anc)));
    ins.push_back(Instruction::make_measure(anc, bit));
    if (pick(rng, 2) == 0) {
      ins.push_back(Instruction::make_flip(bit, 0.1 * rng.next_double()));
    }
    ins.push_back(Instruction::make_reset(anc));
  }
  return NoisyCircuit(std::move(code), n_total, std::move(ins));
}

}  // namespace syndrocal
