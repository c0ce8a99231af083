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

#include "syndrocal/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace syndrocal {

ProductState::ProductState(std::vector<BlochVector> qubits)
    : qubits_(std::move(qubits)) {
  if (qubits_.empty()) {
    throw std::invalid_argument("product state needs at least one qubit");
  }
  for (const BlochVector& r : qubits_) {
    double norm2 = r.rx * r.rx + r.ry * r.ry + r.rz * r.rz;
    if (norm2 > 1.0 + 1e-12) {
      throw std::invalid_argument("Bloch vector outside the unit ball");
    }
  }
}

ProductState ProductState::zeros(int n) {
  return ProductState(std::vector<BlochVector>(n, BlochVector{0.0, 0.0, 1.0}));
}

ProductState calibration_state(int n) {
  const double c = 1.0 / std::sqrt(3.0);
  return ProductState(std::vector<BlochVector>(n, BlochVector{c, c, c}));
}

CodewordState::CodewordState(const StabilizerCode& code, f2::word logical_signs)
    : code_(std::make_shared<StabilizerCode>(code)), logical_signs_(logical_signs) {
  if (code.logical_z().empty() && logical_signs != 0) {
    throw std::invalid_argument("codeword signs given but code has no logicals");
  }
  if (static_cast<int>(code.logical_z().size()) != code.k()) {
    throw std::invalid_argument(
        "codeword state needs one logical Z per logical qubit");
  }
  if (logical_signs >= (f2::word{1} << code.k())) {
    throw std::invalid_argument("logical sign word out of range");
  }
}

namespace {

int require_real_phase(const Pauli& p) {
  int r = rendered_phase_exp(p);
  if (r == 1 || r == 3) {
    throw std::domain_error("expectation of a non-Hermitian Pauli: " +
                            to_string(p));
  }
  return r == 0 ? 1 : -1;
}

}  // namespace

double expectation(const ProductState& state, const Pauli& p) {
  if (p.n_qubits != state.n()) {
    throw std::invalid_argument("expectation: qubit count mismatch");
  }
  double value = require_real_phase(p);
  for (int q = 0; q < state.n(); ++q) {
    bool x = (p.x_mask >> q) & 1;
    bool z = (p.z_mask >> q) & 1;
    if (!x && !z) continue;
    const BlochVector& r = state.qubits()[q];
    value *= x ? (z ? r.ry : r.rx) : r.rz;
  }
  return value;
}

double expectation(const CodewordState& state, const Pauli& p) {
  const StabilizerCode& code = state.code();
  if (p.n_qubits != code.n()) {
    throw std::invalid_argument("expectation: qubit count mismatch");
  }
  // Full stabilizer group of the state: generators plus signed logical Zs.
  std::vector<Pauli> gens = code.generators();
  for (const Pauli& lz : code.logical_z()) gens.push_back(lz);

  for (const Pauli& g : gens) {
    if (pairing(p, g)) return 0.0;
  }

  // Decompose the mask pair of p over the span of the group generators.
  const int n = code.n();
  struct Row {
    __uint128_t bits;
    f2::word combo;
  };
  std::vector<Row> rows;
  auto pack = [n](const Pauli& q) {
    return (static_cast<__uint128_t>(q.z_mask) << n) |
           static_cast<__uint128_t>(q.x_mask);
  };
  auto top_bit = [](__uint128_t v) {
    __uint128_t lead = v;
    while (lead & (lead - 1)) lead &= lead - 1;
    return lead;
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    __uint128_t v = pack(gens[i]);
    f2::word combo = f2::word{1} << i;
    for (const Row& row : rows) {
      if (v & top_bit(row.bits)) {
        v ^= row.bits;
        combo ^= row.combo;
      }
    }
    if (v == 0) continue;  // cannot happen for a valid code
    rows.push_back({v, combo});
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.bits > b.bits; });
  }
  __uint128_t v = pack(p);
  f2::word combo = 0;
  for (const Row& row : rows) {
    if (v & top_bit(row.bits)) {
      v ^= row.bits;
      combo ^= row.combo;
    }
  }
  if (v != 0) return 0.0;  // commutes with the group but is not in it

  // Sign of p relative to the signed group element it equals.
  Pauli product = Pauli::identity(n);
  int logical_sign = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if ((combo >> i) & 1) {
      product = multiply(product, gens[i]);
      if (i >= static_cast<std::size_t>(code.m())) {
        int j = static_cast<int>(i) - code.m();
        logical_sign ^= (state.logical_signs() >> j) & 1;
      }
    }
  }
  int delta = ((p.phase_exp - product.phase_exp) % 4 + 4) % 4;
  if (delta == 1 || delta == 3) {
    throw std::domain_error("expectation of a non-Hermitian Pauli: " +
                            to_string(p));
  }
  double sign = delta == 0 ? 1.0 : -1.0;
  return logical_sign ? -sign : sign;
}

int InputState::n() const {
  return product_ ? product_->n() : codeword_->code().n();
}

double InputState::expect(const Pauli& p) const {
  return product_ ? expectation(*product_, p) : expectation(*codeword_, p);
}

}  // namespace syndrocal
