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

#include "syndrocal/spectral.hpp"

#include <stdexcept>

namespace syndrocal {

double spectral_coefficient(const NoisyCircuit& circuit,
                            const SpectralQuery& query) {
  if (query.data_observable.n_qubits != circuit.n_data()) {
    throw std::invalid_argument("spectral query must live on the data register");
  }
  if (query.bits >= (f2::word{1} << circuit.m())) {
    throw std::invalid_argument("spectral query bits out of range");
  }
  const int n = circuit.n_total();
  // The terminal observable: Q on the data register; the Z factors that
  // represent selected outcome bits are merged in at their measurement
  // points during the backward walk.
  Pauli obs(n, query.data_observable.x_mask, query.data_observable.z_mask, 0);

  double value = 1.0;
  const auto& ins = circuit.instructions();
  for (auto it = ins.rbegin(); it != ins.rend(); ++it) {
    switch (it->kind) {
      case Instruction::Kind::Gate:
        obs = conjugate_inverse(it->gate, obs);
        break;
      case Instruction::Kind::Noise:
        value *= eigenvalue(*it->channel, obs);
        if (value == 0.0) return 0.0;
        break;
      case Instruction::Kind::Measure:
        if ((query.bits >> it->bit) & 1) {
          // The outcome sign of a Z measurement is Z on the measured qubit.
          obs = multiply(obs, Pauli::single(n, it->qubit, 'Z'));
        }
        break;
      case Instruction::Kind::ClassicalFlip:
        if ((query.bits >> it->bit) & 1) {
          value *= 1.0 - 2.0 * it->flip_prob;
        }
        break;
      case Instruction::Kind::Reset: {
        // Errors before a reset cannot reach later observables through the
        // reset qubit; clear its components.
        const std::uint64_t bit = std::uint64_t{1} << it->qubit;
        obs = Pauli(n, obs.x_mask & ~bit, obs.z_mask & ~bit, 0);
        break;
      }
    }
  }
  return value;
}

f2::F2Function gamma_table(const NoisyCircuit& circuit) {
  f2::F2Function out(circuit.m());
  const Pauli id = Pauli::identity(circuit.n_data());
  for (f2::word a = 0; a < out.size(); ++a) {
    out[a] = spectral_coefficient(circuit, SpectralQuery(id, a));
  }
  return out;
}

f2::F2Function beta_table(const NoisyCircuit& circuit) {
  f2::F2Function out(circuit.m());
  for (f2::word a = 0; a < out.size(); ++a) {
    Pauli sa = stabilizer_element(circuit.code(), a);
    out[a] = spectral_coefficient(circuit, SpectralQuery(sa, 0));
  }
  return out;
}

std::vector<double> beta_au_spectral(const NoisyCircuit& circuit) {
  const int m = circuit.m();
  const f2::word words = f2::word{1} << m;
  std::vector<double> table(std::size_t{1} << (2 * m));
  for (f2::word a = 0; a < words; ++a) {
    Pauli sa = stabilizer_element(circuit.code(), a);
    f2::F2Function spectrum(m);
    for (f2::word b = 0; b < words; ++b) {
      spectrum[b] = spectral_coefficient(circuit, SpectralQuery(sa, b));
    }
    f2::F2Function row = f2::inverse_walsh(spectrum);
    for (f2::word u = 0; u < words; ++u) table[a | (u << m)] = row[u];
  }
  return table;
}

}  // namespace syndrocal
