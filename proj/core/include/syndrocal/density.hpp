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

#include <complex>
#include <vector>

#include "syndrocal/circuit.hpp"
#include "syndrocal/f2.hpp"
#include "syndrocal/spectral.hpp"
#include "syndrocal/states.hpp"

namespace syndrocal {

// Brute-force density matrix, the test-grade oracle behind every exact
// engine. Dimension 2^n with n <= 10.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits);

  static DensityMatrix from_state(const InputState& state, int n_total);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }
  std::complex<double>& at(std::size_t r, std::size_t c) {
    return data_[r * dim_ + c];
  }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  void apply_gate(const CliffordGate& g);
  void apply_pauli(const Pauli& p);  // rho -> P rho P^dagger
  void apply_channel(const PauliChannel& ch);
  // Unnormalized projection onto qubit q being |b>.
  void project_qubit(int q, int b);
  // Projection onto the pi_x eigenspace of the code generators (embedded
  // in the low qubits); unnormalized rho -> pi rho pi.
  void project_syndrome(const StabilizerCode& code, f2::word x);
  void reset_qubit(int q);

  double trace() const;
  double expectation(const Pauli& p) const;  // tr(P rho), real part
  void scale(double factor);
  void accumulate(const DensityMatrix& other, double weight);

 private:
  int n_;
  std::size_t dim_;
  std::vector<std::complex<double>> data_;
};

struct OracleResult {
  // ptilde(x | rho) over the syndrome words.
  f2::F2Function outcome_distribution;
  // expectations[x][a] = <S(a)> on the post-measurement state given x;
  // zero rows where the outcome has no mass.
  std::vector<std::vector<double>> post_expectations;
};

// Runs the noisy circuit exactly, branching over measurement outcomes.
OracleResult density_oracle(const NoisyCircuit& circuit, const InputState& state);

// Applies a faulty measurement given directly by its internal distribution
// (no circuit), per the defining Kraus decomposition.
OracleResult faulty_measurement_oracle(const JointErrorDistribution& dist,
                                       const InputState& state,
                                       const StabilizerCode& code);

// Exact joint coefficient sum_x ptilde(x) (-1)^(b.x) tr(Q rho_x) for the
// circuit; on the noiseless circuit this is the reference factor that
// links Lambda(Q, b) to observable statistics.
double density_joint_coefficient(const NoisyCircuit& circuit,
                                 const InputState& state,
                                 const SpectralQuery& query);

// One evaluated run of the circuit: the unnormalized leaf states of every
// measurement branch, for evaluating many observables cheaply.
struct DensityLeaf {
  f2::word bits = 0;
  double weight = 1.0;
  DensityMatrix state;
};

std::vector<DensityLeaf> density_leaves(const NoisyCircuit& circuit,
                                        const InputState& state);

// sum over leaves of (-1)^(b.bits) weight tr(Q state).
double joint_coefficient_from_leaves(const std::vector<DensityLeaf>& leaves,
                                     const SpectralQuery& query, int n_total);

// Two-round outcome joint over (x, y), running the circuit twice in
// sequence; indexed x | y << m.
f2::F2Function density_two_round(const NoisyCircuit& circuit,
                                 const InputState& state);

// Same for a faulty measurement applied twice via its Kraus realization.
f2::F2Function density_two_round_faulty(const JointErrorDistribution& dist,
                                        const InputState& state,
                                        const StabilizerCode& code);

// Unnormalized post-measurement states rho_x, one per outcome, of a
// faulty measurement applied to rho.
std::vector<DensityMatrix> faulty_branches(const JointErrorDistribution& dist,
                                           const DensityMatrix& rho,
                                           const StabilizerCode& code);

// Outcome joint over (x, y), indexed x | y << m_first, of two different
// faulty measurements applied in sequence.
f2::F2Function density_sequential_faulty(const JointErrorDistribution& first,
                                         const StabilizerCode& first_code,
                                         const JointErrorDistribution& second,
                                         const StabilizerCode& second_code,
                                         const InputState& state);

}  // namespace syndrocal
