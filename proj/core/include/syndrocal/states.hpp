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
#include <memory>
#include <optional>
#include <vector>

#include "syndrocal/code.hpp"
#include "syndrocal/f2.hpp"
#include "syndrocal/pauli.hpp"

namespace syndrocal {

// Input states are carried through Pauli expectation values only, which
// keeps everything downstream polynomial in the circuit size.
struct BlochVector {
  double rx = 0.0, ry = 0.0, rz = 0.0;
};

class ProductState {
 public:
  explicit ProductState(std::vector<BlochVector> qubits);

  static ProductState zeros(int n);  // |0...0>, Bloch (0,0,1) per qubit

  int n() const { return static_cast<int>(qubits_.size()); }
  const std::vector<BlochVector>& qubits() const { return qubits_; }

 private:
  std::vector<BlochVector> qubits_;
};

// Per-qubit Bloch vector (1,1,1)/sqrt(3); every weight-w phase-free
// stabilizer element has expectation 3^(-w/2).
ProductState calibration_state(int n);

// Joint +1 eigenstate of the generators and of sign * logical Z operators;
// logical_signs bit j = 1 selects the -1 eigenvalue of the j-th logical Z.
class CodewordState {
 public:
  CodewordState(const StabilizerCode& code, f2::word logical_signs = 0);

  const StabilizerCode& code() const { return *code_; }
  f2::word logical_signs() const { return logical_signs_; }

 private:
  std::shared_ptr<const StabilizerCode> code_;
  f2::word logical_signs_;
};

double expectation(const ProductState& state, const Pauli& p);
double expectation(const CodewordState& state, const Pauli& p);

// Either kind of input state, for scenario plumbing.
class InputState {
 public:
  InputState(ProductState s) : product_(std::move(s)) {}  // NOLINT(implicit)
  InputState(CodewordState s) : codeword_(std::move(s)) {}  // NOLINT(implicit)

  int n() const;
  double expect(const Pauli& p) const;
  bool is_product() const { return product_.has_value(); }
  const ProductState& product() const { return *product_; }
  const CodewordState& codeword() const { return *codeword_; }

 private:
  std::optional<ProductState> product_;
  std::optional<CodewordState> codeword_;
};

inline double expectation(const InputState& state, const Pauli& p) {
  return state.expect(p);
}

// p(x) = tr(rho pi_x) over the 2^m syndromes, via the inverse Walsh
// transform of a -> <S(a)>.
template <typename State>
f2::F2Function ideal_syndrome_distribution(const State& state,
                                           const StabilizerCode& code) {
  f2::F2Function spectrum(code.m());
  for (f2::word a = 0; a < spectrum.size(); ++a) {
    spectrum[a] = expectation(state, stabilizer_element(code, a));
  }
  f2::F2Function p = f2::inverse_walsh(spectrum);
  p.require_distribution(1e-9);
  return p;
}

}  // namespace syndrocal
