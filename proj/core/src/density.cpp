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

#include "syndrocal/density.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace syndrocal {

namespace {

constexpr double kBranchCutoff = 1e-18;

const std::complex<double> kI{0.0, 1.0};

std::complex<double> ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

// P|i> = i^k (-1)^(z.i) |i ^ x> for P = i^k X^x Z^z.
std::complex<double> pauli_phase(const Pauli& p, std::size_t basis) {
  int sign = std::popcount(p.z_mask & static_cast<std::uint64_t>(basis)) & 1;
  return ipow(p.phase_exp + 2 * sign);
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits) : n_(n_qubits) {
  if (n_ < 1 || n_ > 10) {
    throw std::invalid_argument("density oracle supports 1..10 qubits");
  }
  dim_ = std::size_t{1} << n_;
  data_.assign(dim_ * dim_, {0.0, 0.0});
}

DensityMatrix DensityMatrix::from_state(const InputState& state, int n_total) {
  const int n_data = state.n();
  if (n_total < n_data) {
    throw std::invalid_argument("register smaller than the input state");
  }
  DensityMatrix rho(n_total);
  const std::size_t data_dim = std::size_t{1} << n_data;

  if (state.is_product()) {
    const auto& qs = state.product().qubits();
    // Per-qubit 2x2 blocks (I + r.sigma) / 2; ancillas stay |0><0|.
    for (std::size_t r = 0; r < rho.dim(); ++r) {
      if (r >> n_data) continue;
      for (std::size_t c = 0; c < rho.dim(); ++c) {
        if (c >> n_data) continue;
        std::complex<double> v{1.0, 0.0};
        for (int q = 0; q < n_data; ++q) {
          int rb = (r >> q) & 1, cb = (c >> q) & 1;
          const BlochVector& bl = qs[q];
          std::complex<double> cell;
          if (rb == 0 && cb == 0) cell = 0.5 * (1.0 + bl.rz);
          else if (rb == 0 && cb == 1) cell = 0.5 * std::complex<double>(bl.rx, -bl.ry);
          else if (rb == 1 && cb == 0) cell = 0.5 * std::complex<double>(bl.rx, bl.ry);
          else cell = 0.5 * (1.0 - bl.rz);
          v *= cell;
          if (v == 0.0) break;
        }
        rho.at(r, c) = v;
      }
    }
    return rho;
  }

  // Codeword: product of (I + g)/2 over the full stabilizer group
  // generators, a rank-one projector.
  const CodewordState& cw = state.codeword();
  const StabilizerCode& code = cw.code();
  std::vector<std::complex<double>> mat(data_dim * data_dim, {0.0, 0.0});
  for (std::size_t i = 0; i < data_dim; ++i) mat[i * data_dim + i] = 1.0;
  auto left_factor = [&](const Pauli& g, double sign) {
    // mat <- (I + sign g)/2 mat
    std::vector<std::complex<double>> next(data_dim * data_dim);
    for (std::size_t i = 0; i < data_dim; ++i) {
      const std::size_t gi = i ^ g.x_mask;
      const std::complex<double> ph = sign * pauli_phase(g, gi);
      for (std::size_t j = 0; j < data_dim; ++j) {
        next[i * data_dim + j] =
            0.5 * (mat[i * data_dim + j] + ph * mat[gi * data_dim + j]);
      }
    }
    mat = std::move(next);
  };
  for (const Pauli& g : code.generators()) left_factor(g, 1.0);
  for (int j = 0; j < code.k(); ++j) {
    double sign = ((cw.logical_signs() >> j) & 1) ? -1.0 : 1.0;
    left_factor(code.logical_z()[j], sign);
  }
  for (std::size_t r = 0; r < data_dim; ++r) {
    for (std::size_t c = 0; c < data_dim; ++c) {
      rho.at(r, c) = mat[r * data_dim + c];
    }
  }
  return rho;
}

void DensityMatrix::apply_gate(const CliffordGate& g) {
  using K = CliffordGate::Kind;
  if (g.kind == K::H) {
    const std::size_t bit = std::size_t{1} << g.q0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // Left: rows; right: columns (H is real symmetric).
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r & bit) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        auto a = data_[r * dim_ + c];
        auto b = data_[(r | bit) * dim_ + c];
        data_[r * dim_ + c] = inv_sqrt2 * (a + b);
        data_[(r | bit) * dim_ + c] = inv_sqrt2 * (a - b);
      }
    }
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & bit) continue;
      for (std::size_t r = 0; r < dim_; ++r) {
        auto a = data_[r * dim_ + c];
        auto b = data_[r * dim_ + (c | bit)];
        data_[r * dim_ + c] = inv_sqrt2 * (a + b);
        data_[r * dim_ + (c | bit)] = inv_sqrt2 * (a - b);
      }
    }
    return;
  }

  // Everything else is a phase permutation |i> -> phase(i) |perm(i)>.
  auto perm = [&](std::size_t i) -> std::size_t {
    const std::size_t b0 = std::size_t{1} << g.q0;
    const std::size_t b1 = g.q1 >= 0 ? std::size_t{1} << g.q1 : 0;
    switch (g.kind) {
      case K::X:
      case K::Y:
        return i ^ b0;
      case K::CNOT:
        return (i & b0) ? i ^ b1 : i;
      case K::SWAP: {
        bool v0 = i & b0, v1 = i & b1;
        std::size_t out = i & ~(b0 | b1);
        if (v0) out |= b1;
        if (v1) out |= b0;
        return out;
      }
      default:
        return i;
    }
  };
  auto phase = [&](std::size_t i) -> std::complex<double> {
    const std::size_t b0 = std::size_t{1} << g.q0;
    const std::size_t b1 = g.q1 >= 0 ? std::size_t{1} << g.q1 : 0;
    switch (g.kind) {
      case K::S:
        return (i & b0) ? kI : 1.0;
      case K::Z:
        return (i & b0) ? -1.0 : 1.0;
      case K::Y:
        return (i & b0) ? -kI : kI;  // Y|0> = i|1>, Y|1> = -i|0>
      case K::CZ:
        return ((i & b0) && (i & b1)) ? -1.0 : 1.0;
      default:
        return 1.0;
    }
  };
  std::vector<std::complex<double>> next(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    const std::size_t pr = perm(r);
    const std::complex<double> fr = phase(r);
    for (std::size_t c = 0; c < dim_; ++c) {
      next[pr * dim_ + perm(c)] = fr * std::conj(phase(c)) * data_[r * dim_ + c];
    }
  }
  data_ = std::move(next);
}

void DensityMatrix::apply_pauli(const Pauli& p) {
  std::vector<std::complex<double>> next(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    const std::size_t pr = r ^ p.x_mask;
    const std::complex<double> fr = pauli_phase(p, r);
    for (std::size_t c = 0; c < dim_; ++c) {
      next[pr * dim_ + (c ^ p.x_mask)] =
          fr * std::conj(pauli_phase(p, c)) * data_[r * dim_ + c];
    }
  }
  data_ = std::move(next);
}

void DensityMatrix::apply_channel(const PauliChannel& ch) {
  std::vector<std::complex<double>> acc(dim_ * dim_, {0.0, 0.0});
  for (std::size_t idx = 0; idx < ch.probs().size(); ++idx) {
    const double p = ch.probs()[idx];
    if (p == 0.0) continue;
    Pauli e = ch.error_at(idx, n_);
    for (std::size_t r = 0; r < dim_; ++r) {
      const std::size_t er = r ^ e.x_mask;
      const std::complex<double> fr = pauli_phase(e, r);
      for (std::size_t c = 0; c < dim_; ++c) {
        acc[er * dim_ + (c ^ e.x_mask)] +=
            p * fr * std::conj(pauli_phase(e, c)) * data_[r * dim_ + c];
      }
    }
  }
  data_ = std::move(acc);
}

void DensityMatrix::project_qubit(int q, int b) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t r = 0; r < dim_; ++r) {
    const bool keep_r = static_cast<int>((r & bit) != 0) == b;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!keep_r || static_cast<int>((c & bit) != 0) != b) {
        data_[r * dim_ + c] = 0.0;
      }
    }
  }
}

void DensityMatrix::project_syndrome(const StabilizerCode& code, f2::word x) {
  for (int i = 0; i < code.m(); ++i) {
    const Pauli& g0 = code.generators()[i];
    Pauli g(n_, g0.x_mask, g0.z_mask, g0.phase_exp);
    const double sign = ((x >> i) & 1) ? -1.0 : 1.0;
    // rho <- F rho F with F = (I + sign g)/2.
    std::vector<std::complex<double>> next(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      const std::size_t gr = r ^ g.x_mask;
      const std::complex<double> fr = sign * pauli_phase(g, gr);
      for (std::size_t c = 0; c < dim_; ++c) {
        next[r * dim_ + c] =
            0.5 * (data_[r * dim_ + c] + fr * data_[gr * dim_ + c]);
      }
    }
    data_ = std::move(next);
    std::vector<std::complex<double>> after(dim_ * dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      const std::complex<double> fc = sign * pauli_phase(g, c);
      const std::size_t gc = c ^ g.x_mask;
      for (std::size_t r = 0; r < dim_; ++r) {
        after[r * dim_ + c] =
            0.5 * (data_[r * dim_ + c] + fc * data_[r * dim_ + gc]);
      }
    }
    data_ = std::move(after);
  }
}

void DensityMatrix::reset_qubit(int q) {
  const std::size_t bit = std::size_t{1} << q;
  std::vector<std::complex<double>> next(dim_ * dim_, {0.0, 0.0});
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & bit) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & bit) continue;
      next[r * dim_ + c] =
          data_[r * dim_ + c] + data_[(r | bit) * dim_ + (c | bit)];
    }
  }
  data_ = std::move(next);
}

double DensityMatrix::trace() const {
  std::complex<double> t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t.real();
}

double DensityMatrix::expectation(const Pauli& p) const {
  if (p.n_qubits > n_) {
    throw std::invalid_argument("observable larger than the register");
  }
  // tr(P rho) = sum_k phi(k) rho[k][k ^ x].
  std::complex<double> t{0.0, 0.0};
  for (std::size_t k = 0; k < dim_; ++k) {
    t += pauli_phase(p, k) * data_[k * dim_ + (k ^ p.x_mask)];
  }
  return t.real();
}

void DensityMatrix::scale(double factor) {
  for (auto& v : data_) v *= factor;
}

void DensityMatrix::accumulate(const DensityMatrix& other, double weight) {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += weight * other.data_[i];
  }
}

namespace {

// Depth-first walk over measurement and classical-flip branches. The leaf
// callback receives the syndrome word, the classical branch weight and the
// unnormalized branch state (trace = quantum branch probability).
void walk_branches(
    DensityMatrix rho, const std::vector<Instruction>& ins, std::size_t idx,
    f2::word bits, double weight,
    const std::function<void(f2::word, double, DensityMatrix&)>& leaf) {
  for (; idx < ins.size(); ++idx) {
    const Instruction& step = ins[idx];
    switch (step.kind) {
      case Instruction::Kind::Gate:
        rho.apply_gate(step.gate);
        break;
      case Instruction::Kind::Noise:
        rho.apply_channel(*step.channel);
        break;
      case Instruction::Kind::Reset:
        rho.reset_qubit(step.qubit);
        break;
      case Instruction::Kind::Measure: {
        DensityMatrix zero_branch = rho;
        zero_branch.project_qubit(step.qubit, 0);
        if (weight * zero_branch.trace() > kBranchCutoff) {
          walk_branches(std::move(zero_branch), ins, idx + 1, bits, weight, leaf);
        }
        rho.project_qubit(step.qubit, 1);
        bits |= f2::word{1} << step.bit;
        if (weight * rho.trace() <= kBranchCutoff) return;
        break;  // continue in place on the one-branch
      }
      case Instruction::Kind::ClassicalFlip: {
        if (step.flip_prob > 0.0) {
          walk_branches(rho, ins, idx + 1, bits ^ (f2::word{1} << step.bit),
                        weight * step.flip_prob, leaf);
        }
        weight *= 1.0 - step.flip_prob;
        if (weight <= kBranchCutoff) return;
        break;
      }
    }
  }
  leaf(bits, weight, rho);
}

Pauli embed(const Pauli& p, int n_total) {
  return Pauli(n_total, p.x_mask, p.z_mask, p.phase_exp);
}

}  // namespace

OracleResult density_oracle(const NoisyCircuit& circuit, const InputState& state) {
  if (state.n() != circuit.n_data()) {
    throw std::invalid_argument("density_oracle: state size mismatch");
  }
  const int m = circuit.m();
  const f2::word words = f2::word{1} << m;
  OracleResult result{f2::F2Function(m),
                      std::vector<std::vector<double>>(
                          words, std::vector<double>(words, 0.0))};

  std::vector<Pauli> elements;
  for (f2::word a = 0; a < words; ++a) {
    elements.push_back(embed(stabilizer_element(circuit.code(), a),
                             circuit.n_total()));
  }

  DensityMatrix rho = DensityMatrix::from_state(state, circuit.n_total());
  walk_branches(std::move(rho), circuit.instructions(), 0, 0, 1.0,
                [&](f2::word bits, double weight, DensityMatrix& leaf) {
                  const double p = weight * leaf.trace();
                  result.outcome_distribution[bits] += p;
                  for (f2::word a = 0; a < words; ++a) {
                    result.post_expectations[bits][a] +=
                        weight * leaf.expectation(elements[a]);
                  }
                });
  for (f2::word x = 0; x < words; ++x) {
    const double p = result.outcome_distribution[x];
    for (f2::word a = 0; a < words; ++a) {
      result.post_expectations[x][a] = p > 0.0 ? result.post_expectations[x][a] / p : 0.0;
    }
  }
  return result;
}

double density_joint_coefficient(const NoisyCircuit& circuit,
                                 const InputState& state,
                                 const SpectralQuery& query) {
  if (query.data_observable.n_qubits != circuit.n_data()) {
    throw std::invalid_argument("query observable must live on the data register");
  }
  const Pauli q = embed(query.data_observable, circuit.n_total());
  double total = 0.0;
  DensityMatrix rho = DensityMatrix::from_state(state, circuit.n_total());
  walk_branches(std::move(rho), circuit.instructions(), 0, 0, 1.0,
                [&](f2::word bits, double weight, DensityMatrix& leaf) {
                  double sign = f2::dot(bits, query.bits) ? -1.0 : 1.0;
                  total += sign * weight * leaf.expectation(q);
                });
  return total;
}

std::vector<DensityLeaf> density_leaves(const NoisyCircuit& circuit,
                                        const InputState& state) {
  std::vector<DensityLeaf> leaves;
  DensityMatrix rho = DensityMatrix::from_state(state, circuit.n_total());
  walk_branches(std::move(rho), circuit.instructions(), 0, 0, 1.0,
                [&](f2::word bits, double weight, DensityMatrix& leaf) {
                  leaves.push_back(DensityLeaf{bits, weight, leaf});
                });
  return leaves;
}

double joint_coefficient_from_leaves(const std::vector<DensityLeaf>& leaves,
                                     const SpectralQuery& query, int n_total) {
  const Pauli q = embed(query.data_observable, n_total);
  double total = 0.0;
  for (const DensityLeaf& leaf : leaves) {
    double sign = f2::dot(leaf.bits, query.bits) ? -1.0 : 1.0;
    total += sign * leaf.weight * leaf.state.expectation(q);
  }
  return total;
}

// rho_x (unnormalized) for every outcome x of the faulty measurement
// described by `dist` acting on `rho`.
std::vector<DensityMatrix> faulty_branches(const JointErrorDistribution& dist,
                                           const DensityMatrix& rho,
                                           const StabilizerCode& code) {
  const int m = dist.m();
  const f2::word words = f2::word{1} << m;
  // pi_y rho pi_y for every y.
  std::vector<DensityMatrix> projected;
  projected.reserve(words);
  for (f2::word y = 0; y < words; ++y) {
    DensityMatrix p = rho;
    p.project_syndrome(code, y);
    projected.push_back(std::move(p));
  }
  std::vector<DensityMatrix> out(words, DensityMatrix(rho.n_qubits()));
  for (const auto& [k, prob] : dist.entries()) {
    const Pauli e = dist.error_of(k);
    const f2::word u = dist.flips_of(k);
    for (f2::word x = 0; x < words; ++x) {
      DensityMatrix term = projected[x ^ u];
      term.apply_pauli(embed(e, rho.n_qubits()));
      out[x].accumulate(term, prob);
    }
  }
  return out;
}

OracleResult faulty_measurement_oracle(const JointErrorDistribution& dist,
                                       const InputState& state,
                                       const StabilizerCode& code) {
  if (state.n() != code.n() || dist.n() != code.n() || dist.m() != code.m()) {
    throw std::invalid_argument("faulty_measurement_oracle: size mismatch");
  }
  const int m = code.m();
  const f2::word words = f2::word{1} << m;
  DensityMatrix rho = DensityMatrix::from_state(state, code.n());
  std::vector<DensityMatrix> post = faulty_branches(dist, rho, code);

  OracleResult result{f2::F2Function(m),
                      std::vector<std::vector<double>>(
                          words, std::vector<double>(words, 0.0))};
  for (f2::word x = 0; x < words; ++x) {
    const double p = post[x].trace();
    result.outcome_distribution[x] = p;
    for (f2::word a = 0; a < words; ++a) {
      result.post_expectations[x][a] =
          p > 0.0 ? post[x].expectation(stabilizer_element(code, a)) / p : 0.0;
    }
  }
  return result;
}

f2::F2Function density_two_round(const NoisyCircuit& circuit,
                                 const InputState& state) {
  const int m = circuit.m();
  if (2 * m > f2::max_dim) {
    throw std::invalid_argument("two-round word exceeds supported dimension");
  }
  f2::F2Function joint(2 * m);
  DensityMatrix rho = DensityMatrix::from_state(state, circuit.n_total());
  walk_branches(
      std::move(rho), circuit.instructions(), 0, 0, 1.0,
      [&](f2::word x, double w1, DensityMatrix& mid) {
        walk_branches(mid, circuit.instructions(), 0, 0, w1,
                      [&](f2::word y, double w2, DensityMatrix& leaf) {
                        joint[x | (y << m)] += w2 * leaf.trace();
                      });
      });
  return joint;
}

f2::F2Function density_sequential_faulty(const JointErrorDistribution& first,
                                         const StabilizerCode& first_code,
                                         const JointErrorDistribution& second,
                                         const StabilizerCode& second_code,
                                         const InputState& state) {
  const int m1 = first_code.m();
  const int m2 = second_code.m();
  if (m1 + m2 > f2::max_dim) {
    throw std::invalid_argument("sequential word exceeds supported dimension");
  }
  DensityMatrix rho = DensityMatrix::from_state(state, first_code.n());
  std::vector<DensityMatrix> r1 = faulty_branches(first, rho, first_code);
  f2::F2Function joint(m1 + m2);
  for (f2::word x = 0; x < (f2::word{1} << m1); ++x) {
    if (r1[x].trace() <= kBranchCutoff) continue;
    std::vector<DensityMatrix> r2 = faulty_branches(second, r1[x], second_code);
    for (f2::word y = 0; y < (f2::word{1} << m2); ++y) {
      joint[x | (y << m1)] += r2[y].trace();
    }
  }
  return joint;
}

f2::F2Function density_two_round_faulty(const JointErrorDistribution& dist,
                                        const InputState& state,
                                        const StabilizerCode& code) {
  const int m = code.m();
  if (2 * m > f2::max_dim) {
    throw std::invalid_argument("two-round word exceeds supported dimension");
  }
  const f2::word words = f2::word{1} << m;
  DensityMatrix rho = DensityMatrix::from_state(state, code.n());
  std::vector<DensityMatrix> first = faulty_branches(dist, rho, code);
  f2::F2Function joint(2 * m);
  for (f2::word x = 0; x < words; ++x) {
    if (first[x].trace() <= kBranchCutoff) continue;
    std::vector<DensityMatrix> second = faulty_branches(dist, first[x], code);
    for (f2::word y = 0; y < words; ++y) {
      joint[x | (y << m)] += second[y].trace();
    }
  }
  return joint;
}

}  // namespace syndrocal
