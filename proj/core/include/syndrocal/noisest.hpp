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

#include <array>
#include <utility>
#include <vector>

#include "syndrocal/f2.hpp"
#include "syndrocal/pauli.hpp"

namespace syndrocal {

// Per-qubit Pauli error rates; p_id = 1 - px - py - pz is implicit.
struct SingleQubitRates {
  double px = 0.0, py = 0.0, pz = 0.0;
  bool degenerate = false;  // set when clamping wiped out all mass
};

// Product-form Pauli channel estimate: per qubit (p_id, px, py, pz).
struct ChannelEstimate {
  std::vector<std::array<double, 4>> qubits;
};

// The invertible 7x7 matrix whose rows are the supports of the seven
// X-type stabilizer elements, ordered S1, S2, S1S2, S3, S1S3, S2S3,
// S1S2S3; rows 1, 2 and 4 are the Hamming parity check matrix.
const std::array<std::array<double, 7>, 7>& d_matrix();
const std::array<std::array<double, 7>, 7>& d_matrix_inverse();
const std::array<std::array<double, 7>, 3>& hamming_matrix();

// Stabilizer element indices whose expectations feed the D system, per
// single-qubit basis ('X', 'Y' or 'Z'), in D row order.
std::array<f2::word, 7> element_indices(char basis);

struct BlochRecovery {
  std::array<double, 7> values{};
  std::array<bool, 7> clipped{};  // inputs outside (0, 1] were clipped
};

// exp(D^-1 log(.)) with inputs clipped into [1e-9, 1] before the log.
BlochRecovery bloch_from_stabilizers(const std::array<double, 7>& expectations);

// p_x = (1 + <X> - <Y> - <Z>)/4 and cyclic counterparts, then clamped and
// renormalized.
SingleQubitRates rates_from_bloch(double x, double y, double z);

// Clips the four components into [0, 1] and renormalizes; idempotent. A
// distribution that clips to zero falls back to the identity channel with
// the degenerate flag set.
SingleQubitRates clamp_renormalize(const SingleQubitRates& rates);

ChannelEstimate product_channel(const std::vector<SingleQubitRates>& rates);

// Product-form projection of a sparse error distribution: per qubit, the
// marginal over that qubit's letter.
ChannelEstimate product_projection(
    const std::vector<std::pair<Pauli, double>>& errors, int n_qubits);

// Bhattacharyya distance -ln sum sqrt(P1 P2); +infinity on disjoint
// supports. Additive over product factors.
double bhattacharyya(const std::vector<double>& p1, const std::vector<double>& p2);
double bhattacharyya(const ChannelEstimate& p1, const ChannelEstimate& p2);

// Readout error mitigation: invert the transition matrix assembled from
// per-basis-state calibration distributions (columns[true_state][observed])
// and re-project onto the simplex. Throws on an ill-conditioned matrix.
std::vector<double> rem_correct(const std::vector<double>& observed,
                                const std::vector<std::vector<double>>& columns);

// D-system channel estimation from per-basis element expectations (the 21
// eigenvalue estimates in D row order).
ChannelEstimate estimate_channel_pipeline(const std::array<double, 7>& x_eigs,
                                          const std::array<double, 7>& y_eigs,
                                          const std::array<double, 7>& z_eigs);

}  // namespace syndrocal
