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
#include <vector>

namespace syndrocal::f2 {

// An element of F2^m, m <= 16. Addition is XOR, the inner product a.x is
// the parity of the AND.
using word = std::uint32_t;

constexpr int max_dim = 16;

inline int dot(word a, word b) {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_parity(a & b);
#else
  word v = a & b;
  v ^= v >> 16;
  v ^= v >> 8;
  v ^= v >> 4;
  v ^= v >> 2;
  v ^= v >> 1;
  return static_cast<int>(v & 1u);
#endif
}

// Real-valued function on F2^m, stored densely in index order.
class F2Function {
 public:
  F2Function(int m, double fill = 0.0);
  F2Function(int m, std::vector<double> values);

  int dim() const { return m_; }
  std::size_t size() const { return values_.size(); }
  double operator[](word x) const { return values_[x]; }
  double& operator[](word x) { return values_[x]; }
  const std::vector<double>& values() const { return values_; }

  double sum() const;
  // Throws std::domain_error unless all values are >= -tol and the total
  // mass is 1 within tol. Never renormalizes.
  void require_distribution(double tol = 1e-9) const;

  static F2Function delta(int m, word x, double mass = 1.0);
  static F2Function uniform(int m);

 private:
  int m_;
  std::vector<double> values_;
};

// Walsh-Hadamard transform: out(x) = sum_a (-1)^(a.x) f(a).
// In-place butterfly, O(m 2^m).
F2Function walsh(const F2Function& f);

// inverse_walsh(walsh(f)) == f; carries the 2^-m normalization.
F2Function inverse_walsh(const F2Function& f);

// Group convolution: out(a) = sum_b f(b) g(a ^ b).
F2Function convolve(const F2Function& f, const F2Function& g);

// F2-linear subspace of F2^m, held as a reduced basis.
class F2Subspace {
 public:
  // Basis words may be dependent or redundant; they are reduced by Gaussian
  // elimination. Throws std::invalid_argument on out-of-range words.
  F2Subspace(int m, const std::vector<word>& basis);

  static F2Subspace zero(int m);
  static F2Subspace full(int m);

  int ambient_dim() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<word>& basis() const { return basis_; }

  bool contains(word x) const;
  // All 2^k elements of the span, in increasing integer order.
  std::vector<word> elements() const;

 private:
  int m_;
  std::vector<word> basis_;  // row echelon, distinct leading bits
};

struct Coset {
  word representative;        // smallest member in integer order
  std::vector<word> members;  // increasing integer order
};

// The 2^(m-k) cosets of W, ordered by representative.
std::vector<Coset> cosets(const F2Subspace& w);

// Orthogonal complement under the dot product; dim(W) + dim(perp(W)) = m.
F2Subspace perp(const F2Subspace& w);

}  // namespace syndrocal::f2
