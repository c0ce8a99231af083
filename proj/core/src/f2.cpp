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

#include "syndrocal/f2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace syndrocal::f2 {

namespace {

void check_dim(int m) {
  if (m < 1 || m > max_dim) {
    throw std::invalid_argument("F2 dimension must be in [1, " +
                                std::to_string(max_dim) + "], got " +
                                std::to_string(m));
  }
}

}  // namespace

F2Function::F2Function(int m, double fill) : m_(m) {
  check_dim(m);
  values_.assign(std::size_t{1} << m, fill);
}

F2Function::F2Function(int m, std::vector<double> values)
    : m_(m), values_(std::move(values)) {
  check_dim(m);
  if (values_.size() != (std::size_t{1} << m)) {
    throw std::invalid_argument("F2Function needs 2^m values");
  }
}

double F2Function::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

void F2Function::require_distribution(double tol) const {
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] < -tol || std::isnan(values_[x])) {
      throw std::domain_error("not a distribution: value " +
                              std::to_string(values_[x]) + " at index " +
                              std::to_string(x));
    }
  }
  if (std::abs(sum() - 1.0) > tol) {
    throw std::domain_error("not a distribution: total mass " +
                            std::to_string(sum()));
  }
}

F2Function F2Function::delta(int m, word x, double mass) {
  F2Function f(m);
  f[x] = mass;
  return f;
}

F2Function F2Function::uniform(int m) {
  check_dim(m);
  return F2Function(m, 1.0 / static_cast<double>(std::size_t{1} << m));
}

F2Function walsh(const F2Function& f) {
  F2Function out = f;
  const std::size_t n = out.size();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t base = 0; base < n; base += half << 1) {
      for (std::size_t i = base; i < base + half; ++i) {
        double lo = out[static_cast<word>(i)];
        double hi = out[static_cast<word>(i + half)];
        out[static_cast<word>(i)] = lo + hi;
        out[static_cast<word>(i + half)] = lo - hi;
      }
    }
  }
  return out;
}

F2Function inverse_walsh(const F2Function& f) {
  F2Function out = walsh(f);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (word x = 0; x < out.size(); ++x) out[x] *= scale;
  return out;
}

F2Function convolve(const F2Function& f, const F2Function& g) {
  if (f.dim() != g.dim()) {
    throw std::invalid_argument("convolve: dimension mismatch");
  }
  F2Function out(f.dim());
  const std::size_t n = f.size();
  for (word b = 0; b < n; ++b) {
    const double fb = f[b];
    if (fb == 0.0) continue;
    for (word a = 0; a < n; ++a) {
      out[a] += fb * g[a ^ b];
    }
  }
  return out;
}

F2Subspace::F2Subspace(int m, const std::vector<word>& basis) : m_(m) {
  check_dim(m);
  // Gaussian elimination; rows keep distinct leading bits.
  for (word v : basis) {
    if (v >= (word{1} << m)) {
      throw std::invalid_argument("subspace basis word out of range");
    }
    word reduced = v;
    for (word row : basis_) {
      word high = word{1} << (31 - __builtin_clz(row));
      if (reduced & high) reduced ^= row;
    }
    if (reduced != 0) basis_.push_back(reduced);
    // Re-sort by leading bit descending so reduction stays triangular.
    std::sort(basis_.begin(), basis_.end(), std::greater<word>());
  }
}

F2Subspace F2Subspace::zero(int m) { return F2Subspace(m, {}); }

F2Subspace F2Subspace::full(int m) {
  std::vector<word> b;
  for (int i = 0; i < m; ++i) b.push_back(word{1} << i);
  return F2Subspace(m, b);
}

bool F2Subspace::contains(word x) const {
  word reduced = x;
  for (word row : basis_) {
    word high = word{1} << (31 - __builtin_clz(row));
    if (reduced & high) reduced ^= row;
  }
  return reduced == 0;
}

std::vector<word> F2Subspace::elements() const {
  std::vector<word> out;
  out.reserve(std::size_t{1} << basis_.size());
  const std::size_t count = std::size_t{1} << basis_.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    word v = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (mask & (std::size_t{1} << i)) v ^= basis_[i];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coset> cosets(const F2Subspace& w) {
  const std::size_t total = std::size_t{1} << w.ambient_dim();
  std::vector<bool> seen(total, false);
  std::vector<word> span = w.elements();
  std::vector<Coset> out;
  for (word x = 0; x < total; ++x) {
    if (seen[x]) continue;
    Coset c;
    c.representative = x;  // first unseen word is the smallest member
    for (word s : span) {
      c.members.push_back(x ^ s);
      seen[x ^ s] = true;
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

F2Subspace perp(const F2Subspace& w) {
  const int m = w.ambient_dim();
  std::vector<word> basis;
  // Kernel of the basis-matrix map x -> (dot(b_i, x))_i, by enumeration of
  // candidate pivots over a triangularized null space.
  // m <= 16 so brute force over all 2^m words is affordable and simple.
  F2Subspace acc = F2Subspace::zero(m);
  for (word x = 0; x < (word{1} << m); ++x) {
    bool orthogonal = true;
    for (word b : w.basis()) {
      if (dot(b, x)) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal && !acc.contains(x)) {
      basis.push_back(x);
      acc = F2Subspace(m, basis);
      if (acc.dim() == m - w.dim()) break;
    }
  }
  return acc;
}

}  // namespace syndrocal::f2
