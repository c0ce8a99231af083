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

#include "syndrocal/channel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace syndrocal {

PauliChannel::PauliChannel(std::vector<int> support, std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.empty() || support_.size() > 8) {
    throw std::invalid_argument("channel support must have 1..8 qubits");
  }
  for (std::size_t i = 0; i < support_.size(); ++i) {
    for (std::size_t j = i + 1; j < support_.size(); ++j) {
      if (support_[i] == support_[j]) {
        throw std::invalid_argument("channel support qubits must be distinct");
      }
    }
  }
  if (probs_.size() != (std::size_t{1} << (2 * support_.size()))) {
    throw std::invalid_argument("channel needs 4^s probabilities");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (p < -1e-12) throw std::invalid_argument("negative channel probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("channel probabilities must sum to 1");
  }
}

Pauli PauliChannel::error_at(std::size_t index, int n_qubits) const {
  const int s = support_size();
  std::uint64_t x = 0, z = 0;
  for (int i = 0; i < s; ++i) {
    if ((index >> i) & 1) x |= std::uint64_t{1} << support_[i];
    if ((index >> (s + i)) & 1) z |= std::uint64_t{1} << support_[i];
  }
  return Pauli(n_qubits, x, z, std::popcount(x & z));
}

PauliChannel depolarizing2(double lambda, int q0, int q1) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("depolarizing parameter must be in [0, 1]");
  }
  std::vector<double> probs(16, lambda / 16.0);
  probs[0] = 1.0 - 15.0 / 16.0 * lambda;
  return PauliChannel({q0, q1}, std::move(probs));
}

PauliChannel z_control(double lambda, int control, int other) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("z_control parameter must be in [0, 1]");
  }
  // Z on the control (first-listed) qubit: index z-bit 0 -> 1 << 2.
  std::vector<double> probs(16, 0.0);
  probs[0] = 1.0 - lambda;
  probs[1u << 2] = lambda;
  return PauliChannel({control, other}, std::move(probs));
}

PauliChannel bit_flip(double p, int qubit) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("bit flip probability must be in [0, 1]");
  }
  return PauliChannel({qubit}, {1.0 - p, p, 0.0, 0.0});
}

double eigenvalue(const PauliChannel& ch, const Pauli& r) {
  const int s = ch.support_size();
  // Restriction of r to the support, in support order.
  std::uint32_t rx = 0, rz = 0;
  for (int i = 0; i < s; ++i) {
    int q = ch.support()[i];
    if (q >= r.n_qubits) {
      throw std::invalid_argument("eigenvalue: observable too small for support");
    }
    rx |= static_cast<std::uint32_t>((r.x_mask >> q) & 1) << i;
    rz |= static_cast<std::uint32_t>((r.z_mask >> q) & 1) << i;
  }
  double value = 0.0;
  for (std::size_t idx = 0; idx < ch.probs().size(); ++idx) {
    double p = ch.probs()[idx];
    if (p == 0.0) continue;
    std::uint32_t ex = idx & ((1u << s) - 1);
    std::uint32_t ez = idx >> s;
    int anti = (std::popcount(ex & rz) + std::popcount(ez & rx)) & 1;
    value += anti ? -p : p;
  }
  return value;
}

JointErrorDistribution::JointErrorDistribution(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 0 || 2 * n + m > 64) {
    throw std::invalid_argument("joint distribution key does not fit 64 bits");
  }
}

JointErrorDistribution JointErrorDistribution::ideal(int n, int m) {
  JointErrorDistribution dist(n, m);
  dist.add(0, 0, 0, 1.0);
  return dist;
}

JointErrorDistribution::Key JointErrorDistribution::key(std::uint64_t x,
                                                        std::uint64_t z,
                                                        f2::word u) const {
  return x | (z << n_) | (static_cast<std::uint64_t>(u) << (2 * n_));
}

void JointErrorDistribution::unpack(Key k, std::uint64_t& x, std::uint64_t& z,
                                    f2::word& u) const {
  const std::uint64_t qmask = (std::uint64_t{1} << n_) - 1;
  x = k & qmask;
  z = (k >> n_) & qmask;
  u = static_cast<f2::word>(k >> (2 * n_));
}

Pauli JointErrorDistribution::error_of(Key k) const {
  std::uint64_t x, z;
  f2::word u;
  unpack(k, x, z, u);
  return Pauli(n_, x, z, std::popcount(x & z));
}

f2::word JointErrorDistribution::flips_of(Key k) const {
  return static_cast<f2::word>(k >> (2 * n_));
}

void JointErrorDistribution::add(std::uint64_t x, std::uint64_t z, f2::word u,
                                 double p) {
  map_[key(x, z, u)] += p;
}

double JointErrorDistribution::prob(std::uint64_t x, std::uint64_t z,
                                    f2::word u) const {
  auto it = map_.find(key(x, z, u));
  return it == map_.end() ? 0.0 : it->second;
}

double JointErrorDistribution::total() const {
  double t = 0.0;
  for (const auto& [k, p] : map_) t += p;
  return t;
}

void JointErrorDistribution::prune(double threshold) {
  for (auto it = map_.begin(); it != map_.end();) {
    if (std::abs(it->second) < threshold) {
      it = map_.erase(it);
    } else {
      ++it;
    }
  }
}

void JointErrorDistribution::check_normalized(double tol) const {
  for (const auto& [k, p] : map_) {
    if (p < -tol) {
      throw std::domain_error("joint distribution has a negative entry");
    }
  }
  if (std::abs(total() - 1.0) > tol) {
    throw std::domain_error("joint distribution mass " + std::to_string(total()));
  }
}

f2::F2Function bit_marginal(const JointErrorDistribution& dist) {
  f2::F2Function out(dist.m());
  for (const auto& [k, p] : dist.entries()) {
    out[dist.flips_of(k)] += p;
  }
  return out;
}

std::vector<std::pair<Pauli, double>> conditional(
    const JointErrorDistribution& dist, f2::word u) {
  std::unordered_map<std::uint64_t, double> acc;
  double mass = 0.0;
  const std::uint64_t emask = (std::uint64_t{1} << (2 * dist.n())) - 1;
  for (const auto& [k, p] : dist.entries()) {
    if (dist.flips_of(k) == u) {
      acc[k & emask] += p;
      mass += p;
    }
  }
  if (mass <= 0.0) {
    throw std::domain_error("conditional on a zero-probability outcome word");
  }
  std::vector<std::pair<Pauli, double>> out;
  out.reserve(acc.size());
  for (const auto& [ek, p] : acc) {
    out.emplace_back(dist.error_of(ek), p / mass);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.x_mask, a.first.z_mask) <
           std::make_pair(b.first.x_mask, b.first.z_mask);
  });
  return out;
}

std::vector<std::pair<Pauli, double>> error_marginal(
    const JointErrorDistribution& dist) {
  std::unordered_map<std::uint64_t, double> acc;
  const std::uint64_t emask = (std::uint64_t{1} << (2 * dist.n())) - 1;
  for (const auto& [k, p] : dist.entries()) acc[k & emask] += p;
  std::vector<std::pair<Pauli, double>> out;
  out.reserve(acc.size());
  for (const auto& [ek, p] : acc) out.emplace_back(dist.error_of(ek), p);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.x_mask, a.first.z_mask) <
           std::make_pair(b.first.x_mask, b.first.z_mask);
  });
  return out;
}

JointErrorDistribution compose_faulty(const JointErrorDistribution& second,
                                      const JointErrorDistribution& first,
                                      const std::vector<Pauli>& t_generators) {
  if (second.n() != first.n()) {
    throw std::invalid_argument("compose_faulty: data register mismatch");
  }
  if (static_cast<int>(t_generators.size()) != second.m()) {
    throw std::invalid_argument("compose_faulty: need one T generator per bit");
  }
  const int n = first.n();
  JointErrorDistribution out(n, first.m() + second.m());
  for (const auto& [kp, pp] : first.entries()) {
    std::uint64_t gx, gz;
    f2::word u;
    first.unpack(kp, gx, gz, u);
    // Syn_T of the first measurement's accumulated error g = f e.
    Pauli g(n, gx, gz, 0);
    f2::word syn = 0;
    for (std::size_t i = 0; i < t_generators.size(); ++i) {
      syn |= static_cast<f2::word>(pairing(g, t_generators[i])) << i;
    }
    for (const auto& [kq, pq] : second.entries()) {
      std::uint64_t fx, fz;
      f2::word vprime;
      second.unpack(kq, fx, fz, vprime);
      f2::word v = vprime ^ syn;
      f2::word uv = u | (v << first.m());
      out.add(gx ^ fx, gz ^ fz, uv, pp * pq);
    }
  }
  out.prune();
  return out;
}

std::string NoiseSpec::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::None:
      return "none";
    case Kind::Depolarizing2:
      out << "depolarizing2:lambda=" << param;
      break;
    case Kind::ZControl:
      out << "z-control:lambda=" << param;
      break;
    case Kind::BitFlip:
      out << "bitflip:p=" << param;
      break;
    case Kind::MeasFlip:
      out << "measflip:q=" << param;
      break;
  }
  return out.str();
}

NoiseSpec parse_noise_spec(const std::string& text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(c));
  if (lower.empty() || lower == "none") return {};

  std::size_t colon = lower.find(':');
  std::string name = colon == std::string::npos ? lower : lower.substr(0, colon);
  NoiseSpec spec;
  std::string expected_param;
  if (name == "depolarizing2") {
    spec.kind = NoiseSpec::Kind::Depolarizing2;
    expected_param = "lambda";
  } else if (name == "z-control" || name == "zcontrol" || name == "z_control") {
    spec.kind = NoiseSpec::Kind::ZControl;
    expected_param = "lambda";
  } else if (name == "bitflip") {
    spec.kind = NoiseSpec::Kind::BitFlip;
    expected_param = "p";
  } else if (name == "measflip") {
    spec.kind = NoiseSpec::Kind::MeasFlip;
    expected_param = "q";
  } else {
    throw std::invalid_argument("unknown noise model: \"" + text + "\"");
  }
  if (colon == std::string::npos) {
    throw std::invalid_argument("noise model needs a parameter: \"" + text + "\"");
  }
  std::string rest = lower.substr(colon + 1);
  std::size_t eq = rest.find('=');
  if (eq == std::string::npos || rest.substr(0, eq) != expected_param) {
    throw std::invalid_argument("expected " + expected_param + "=<value> in \"" +
                                text + "\"");
  }
  try {
    spec.param = std::stod(rest.substr(eq + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad noise parameter in \"" + text + "\"");
  }
  if (spec.param < 0.0 || spec.param > 1.0) {
    throw std::invalid_argument("noise parameter must be in [0, 1]");
  }
  return spec;
}

}  // namespace syndrocal
