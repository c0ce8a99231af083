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

#include "syndrocal/noisest.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace syndrocal {

namespace {

constexpr double kLogClip = 1e-9;

// Gauss-Jordan inversion with partial pivoting; throws when a pivot falls
// below the conditioning threshold.
std::vector<std::vector<double>> invert(std::vector<std::vector<double>> a,
                                        double pivot_threshold) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < pivot_threshold) {
      throw std::domain_error("matrix is singular or ill-conditioned");
    }
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const double scale = 1.0 / a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      const double f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

const std::array<std::array<double, 7>, 7>& d_matrix() {
  static const std::array<std::array<double, 7>, 7> d = {{
      {0, 0, 0, 1, 1, 1, 1},
      {0, 1, 1, 0, 0, 1, 1},
      {0, 1, 1, 1, 1, 0, 0},
      {1, 0, 1, 0, 1, 0, 1},
      {1, 0, 1, 1, 0, 1, 0},
      {1, 1, 0, 0, 1, 1, 0},
      {1, 1, 0, 1, 0, 0, 1},
  }};
  return d;
}

const std::array<std::array<double, 7>, 7>& d_matrix_inverse() {
  static const std::array<std::array<double, 7>, 7> inv = [] {
    std::vector<std::vector<double>> rows(7, std::vector<double>(7));
    for (int r = 0; r < 7; ++r) {
      for (int c = 0; c < 7; ++c) rows[r][c] = d_matrix()[r][c];
    }
    auto result = invert(std::move(rows), 1e-12);
    std::array<std::array<double, 7>, 7> out{};
    for (int r = 0; r < 7; ++r) {
      for (int c = 0; c < 7; ++c) out[r][c] = result[r][c];
    }
    return out;
  }();
  return inv;
}

const std::array<std::array<double, 7>, 3>& hamming_matrix() {
  static const std::array<std::array<double, 7>, 3> h = {{
      {0, 0, 0, 1, 1, 1, 1},
      {0, 1, 1, 0, 0, 1, 1},
      {1, 0, 1, 0, 1, 0, 1},
  }};
  return h;
}

std::array<f2::word, 7> element_indices(char basis) {
  // Row order S1, S2, S1S2, S3, S1S3, S2S3, S1S2S3. In syndrome bit order
  // (bit i belongs to S_{i+1}) the X-type generators occupy bits 0..2 and
  // the Z-type bits 3..5; Y-type elements pair both.
  std::array<f2::word, 7> out{};
  for (f2::word i = 1; i <= 7; ++i) {
    f2::word a;
    switch (basis) {
      case 'X':
        a = i;
        break;
      case 'Z':
        a = i << 3;
        break;
      case 'Y':
        a = i | (i << 3);
        break;
      default:
        throw std::invalid_argument("basis must be X, Y or Z");
    }
    out[i - 1] = a;
  }
  return out;
}

BlochRecovery bloch_from_stabilizers(const std::array<double, 7>& expectations) {
  BlochRecovery out;
  std::array<double, 7> logs{};
  for (int i = 0; i < 7; ++i) {
    double v = expectations[i];
    out.clipped[i] = !(v > 0.0 && v <= 1.0);
    v = std::min(std::max(v, kLogClip), 1.0);
    logs[i] = std::log(v);
  }
  const auto& dinv = d_matrix_inverse();
  for (int i = 0; i < 7; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 7; ++j) acc += dinv[i][j] * logs[j];
    out.values[i] = std::exp(acc);
  }
  return out;
}

SingleQubitRates clamp_renormalize(const SingleQubitRates& rates) {
  double pid = 1.0 - rates.px - rates.py - rates.pz;
  std::array<double, 4> p = {pid, rates.px, rates.py, rates.pz};
  double total = 0.0;
  for (double& v : p) {
    v = std::min(std::max(v, 0.0), 1.0);
    total += v;
  }
  SingleQubitRates out;
  if (total <= 0.0) {
    out.degenerate = true;  // identity channel fallback
    return out;
  }
  out.px = p[1] / total;
  out.py = p[2] / total;
  out.pz = p[3] / total;
  return out;
}

SingleQubitRates rates_from_bloch(double x, double y, double z) {
  SingleQubitRates r;
  r.px = 0.25 * (1.0 + x - y - z);
  r.py = 0.25 * (1.0 - x + y - z);
  r.pz = 0.25 * (1.0 - x - y + z);
  return clamp_renormalize(r);
}

ChannelEstimate product_channel(const std::vector<SingleQubitRates>& rates) {
  ChannelEstimate est;
  est.qubits.reserve(rates.size());
  for (const SingleQubitRates& r : rates) {
    est.qubits.push_back(
        {1.0 - r.px - r.py - r.pz, r.px, r.py, r.pz});
  }
  return est;
}

ChannelEstimate product_projection(
    const std::vector<std::pair<Pauli, double>>& errors, int n_qubits) {
  ChannelEstimate est;
  est.qubits.assign(n_qubits, {0.0, 0.0, 0.0, 0.0});
  for (const auto& [e, p] : errors) {
    for (int q = 0; q < n_qubits; ++q) {
      bool x = (e.x_mask >> q) & 1;
      bool z = (e.z_mask >> q) & 1;
      int letter = x ? (z ? 2 : 1) : (z ? 3 : 0);  // I, X, Y, Z
      est.qubits[q][letter] += p;
    }
  }
  return est;
}

double bhattacharyya(const std::vector<double>& p1, const std::vector<double>& p2) {
  if (p1.size() != p2.size()) {
    throw std::invalid_argument("bhattacharyya: size mismatch");
  }
  double coeff = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] > 0.0 && p2[i] > 0.0) coeff += std::sqrt(p1[i] * p2[i]);
  }
  if (coeff <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(std::min(coeff, 1.0));
}

double bhattacharyya(const ChannelEstimate& p1, const ChannelEstimate& p2) {
  if (p1.qubits.size() != p2.qubits.size()) {
    throw std::invalid_argument("bhattacharyya: qubit count mismatch");
  }
  double total = 0.0;
  for (std::size_t q = 0; q < p1.qubits.size(); ++q) {
    double coeff = 0.0;
    for (int i = 0; i < 4; ++i) {
      if (p1.qubits[q][i] > 0.0 && p2.qubits[q][i] > 0.0) {
        coeff += std::sqrt(p1.qubits[q][i] * p2.qubits[q][i]);
      }
    }
    if (coeff <= 0.0) return std::numeric_limits<double>::infinity();
    total += -std::log(std::min(coeff, 1.0));
  }
  return total;
}

std::vector<double> rem_correct(const std::vector<double>& observed,
                                const std::vector<std::vector<double>>& columns) {
  const std::size_t dim = observed.size();
  if (columns.size() != dim) {
    throw std::invalid_argument("rem_correct: one calibration column per state");
  }
  std::vector<std::vector<double>> transition(dim, std::vector<double>(dim));
  for (std::size_t truth = 0; truth < dim; ++truth) {
    if (columns[truth].size() != dim) {
      throw std::invalid_argument("rem_correct: calibration column size mismatch");
    }
    for (std::size_t obs = 0; obs < dim; ++obs) {
      transition[obs][truth] = columns[truth][obs];
    }
  }
  auto inv = invert(std::move(transition), 1e-9);
  std::vector<double> corrected(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      corrected[i] += inv[i][j] * observed[j];
    }
  }
  // Re-project onto the simplex: clip negatives, renormalize.
  double total = 0.0;
  for (double& v : corrected) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (total <= 0.0) {
    throw std::domain_error("rem_correct: corrected distribution vanished");
  }
  for (double& v : corrected) v /= total;
  return corrected;
}

ChannelEstimate estimate_channel_pipeline(const std::array<double, 7>& x_eigs,
                                          const std::array<double, 7>& y_eigs,
                                          const std::array<double, 7>& z_eigs) {
  BlochRecovery bx = bloch_from_stabilizers(x_eigs);
  BlochRecovery by = bloch_from_stabilizers(y_eigs);
  BlochRecovery bz = bloch_from_stabilizers(z_eigs);
  std::vector<SingleQubitRates> rates;
  rates.reserve(7);
  for (int q = 0; q < 7; ++q) {
    rates.push_back(rates_from_bloch(bx.values[q], by.values[q], bz.values[q]));
  }
  return product_channel(rates);
}

}  // namespace syndrocal
