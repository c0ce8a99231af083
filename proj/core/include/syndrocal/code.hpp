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
#include <map>
#include <string>
#include <vector>

#include "syndrocal/f2.hpp"
#include "syndrocal/pauli.hpp"

namespace syndrocal {

// An [[n, k, d]] stabilizer code given by m = n - k generators. Generators
// must commute pairwise and be independent; logical operators (when
// supplied) must commute with every generator.
class StabilizerCode {
 public:
  StabilizerCode(std::vector<Pauli> generators, std::vector<Pauli> logical_x,
                 std::vector<Pauli> logical_z);

  int n() const { return n_; }
  int m() const { return static_cast<int>(generators_.size()); }
  int k() const { return n_ - m(); }
  const std::vector<Pauli>& generators() const { return generators_; }
  const std::vector<Pauli>& logical_x() const { return logical_x_; }
  const std::vector<Pauli>& logical_z() const { return logical_z_; }

 private:
  int n_;
  std::vector<Pauli> generators_;
  std::vector<Pauli> logical_x_;
  std::vector<Pauli> logical_z_;
};

// The 7-qubit Steane code with the generator choice
//   S1=IIIXXXX S2=IXXIIXX S3=XIXIXIX S4=IIIZZZZ S5=IZZIIZZ S6=ZIZIZIZ
// and logicals X..X, Z..Z. Syndrome bit i belongs to S_{i+1}.
StabilizerCode steane();

// Syndrome word of p: bit i = pairing(p, S_{i+1}).
f2::word syndrome_of(const Pauli& p, const StabilizerCode& code);

// Ordered product S(a) = S1^a1 S2^a2 ... Sm^am with tracked phase.
Pauli stabilizer_element(const StabilizerCode& code, f2::word a);

// weight -> number of stabilizer elements of that weight ({0:1,4:21,6:42}
// for Steane).
std::map<int, int> weight_histogram(const StabilizerCode& code);

// Minimal weight correction per syndrome. Ties are broken by
// (weight, number of Y factors, x_mask, z_mask), which reproduces the
// X_i Z_j convention for the Steane code.
class DecodeTable {
 public:
  explicit DecodeTable(std::vector<Pauli> corrections);

  const Pauli& correction(f2::word syndrome) const;
  std::size_t size() const { return corrections_.size(); }

 private:
  std::vector<Pauli> corrections_;
};

DecodeTable decode_table(const StabilizerCode& code);

// Plain text code definition:
//   generators:
//   +IIIXXXX
//   ...
//   logical_x:
//   +XXXXXXX
//   logical_z:
//   +ZZZZZZZ
StabilizerCode read_code(std::istream& in);
StabilizerCode read_code_file(const std::string& path);
std::string write_code(const StabilizerCode& code);

}  // namespace syndrocal
