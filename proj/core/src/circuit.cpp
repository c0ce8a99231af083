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

#include "syndrocal/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace syndrocal {

Instruction Instruction::make_gate(CliffordGate g) {
  Instruction ins;
  ins.kind = Kind::Gate;
  ins.gate = g;
  return ins;
}

Instruction Instruction::make_noise(PauliChannel ch,
                                    std::optional<NoiseSpec> spec) {
  Instruction ins;
  ins.kind = Kind::Noise;
  ins.channel = std::move(ch);
  ins.channel_spec = spec;
  return ins;
}

Instruction Instruction::make_measure(int qubit, int bit) {
  Instruction ins;
  ins.kind = Kind::Measure;
  ins.qubit = qubit;
  ins.bit = bit;
  return ins;
}

Instruction Instruction::make_flip(int bit, double q) {
  Instruction ins;
  ins.kind = Kind::ClassicalFlip;
  ins.bit = bit;
  ins.flip_prob = q;
  return ins;
}

Instruction Instruction::make_reset(int qubit) {
  Instruction ins;
  ins.kind = Kind::Reset;
  ins.qubit = qubit;
  return ins;
}

NoisyCircuit::NoisyCircuit(StabilizerCode code, int n_total,
                           std::vector<Instruction> instructions)
    : code_(std::make_shared<StabilizerCode>(std::move(code))),
      n_total_(n_total),
      instructions_(std::move(instructions)) {
  if (n_total_ < code_->n()) {
    throw std::invalid_argument("circuit smaller than its code");
  }
  if (n_total_ > 64) {
    throw std::invalid_argument("circuits support at most 64 qubits");
  }
  std::vector<int> writes(code_->m(), 0);
  for (const Instruction& ins : instructions_) {
    switch (ins.kind) {
      case Instruction::Kind::Gate:
        if (ins.gate.q0 >= n_total_ || (ins.gate.two_qubit() && ins.gate.q1 >= n_total_)) {
          throw std::invalid_argument("gate qubit out of range");
        }
        break;
      case Instruction::Kind::Noise:
        for (int q : ins.channel->support()) {
          if (q >= n_total_) throw std::invalid_argument("noise qubit out of range");
        }
        break;
      case Instruction::Kind::Measure:
        if (ins.qubit < 0 || ins.qubit >= n_total_) {
          throw std::invalid_argument("measured qubit out of range");
        }
        if (ins.bit < 0 || ins.bit >= code_->m()) {
          throw std::invalid_argument("syndrome bit out of range");
        }
        ++writes[ins.bit];
        break;
      case Instruction::Kind::ClassicalFlip:
        if (ins.bit < 0 || ins.bit >= code_->m()) {
          throw std::invalid_argument("flipped bit out of range");
        }
        break;
      case Instruction::Kind::Reset:
        if (ins.qubit < 0 || ins.qubit >= n_total_) {
          throw std::invalid_argument("reset qubit out of range");
        }
        break;
    }
  }
  for (int i = 0; i < code_->m(); ++i) {
    if (writes[i] != 1) {
      throw std::invalid_argument("syndrome bit " + std::to_string(i) +
                                  " written " + std::to_string(writes[i]) +
                                  " times");
    }
  }
}

namespace {

// Emits H, controlled Paulis onto the support, H, measure, reset, using
// `ancilla` as the probe and writing syndrome bit `bit`.
void emit_gadget(std::vector<Instruction>& out, const Pauli& generator,
                 int ancilla, int bit) {
  out.push_back(Instruction::make_gate(CliffordGate::h(ancilla)));
  for (int q = 0; q < generator.n_qubits; ++q) {
    bool x = (generator.x_mask >> q) & 1;
    bool z = (generator.z_mask >> q) & 1;
    if (!x && !z) continue;
    if (x && !z) {
      out.push_back(Instruction::make_gate(CliffordGate::cnot(ancilla, q)));
    } else if (!x && z) {
      out.push_back(Instruction::make_gate(CliffordGate::cz(ancilla, q)));
    } else {
      // Controlled-Y as Sdg(q), CNOT, S(q); Sdg realized as Z then S.
      out.push_back(Instruction::make_gate(CliffordGate::z(q)));
      out.push_back(Instruction::make_gate(CliffordGate::s(q)));
      out.push_back(Instruction::make_gate(CliffordGate::cnot(ancilla, q)));
      out.push_back(Instruction::make_gate(CliffordGate::s(q)));
    }
  }
  out.push_back(Instruction::make_gate(CliffordGate::h(ancilla)));
  out.push_back(Instruction::make_measure(ancilla, bit));
  out.push_back(Instruction::make_reset(ancilla));
}

}  // namespace

NoisyCircuit build_sequential_extraction(const StabilizerCode& code) {
  const int ancilla = code.n();
  std::vector<Instruction> ins;
  for (int i = 0; i < code.m(); ++i) {
    emit_gadget(ins, code.generators()[i], ancilla, i);
  }
  return NoisyCircuit(code, code.n() + 1, std::move(ins));
}

NoisyCircuit build_single_generator_extraction(const StabilizerCode& code,
                                               int generator_index) {
  if (generator_index < 0 || generator_index >= code.m()) {
    throw std::invalid_argument("generator index out of range");
  }
  StabilizerCode sub({code.generators()[generator_index]}, {}, {});
  const int ancilla = sub.n();
  std::vector<Instruction> ins;
  emit_gadget(ins, sub.generators()[0], ancilla, 0);
  return NoisyCircuit(std::move(sub), ancilla + 1, std::move(ins));
}

namespace {

// Gate table for the parallel Steane extraction. Data qubits are 0..6 for
// circuit qubits 1..7, ancillas 7, 8, 9 top to bottom. Per half and column:
// which ancilla acts, and on what. `kind` A means an ancilla-ancilla CZ
// (the compensation gates); D means an ancilla-data coupling whose type
// (CNOT or CZ) follows the measured generator: X-type generators couple by
// CNOT, Z-type by CZ.
struct ParallelStep {
  int ancilla;  // 0..2
  int target;   // data qubit 0..6, or ancilla 0..2 for kind A
  char kind;    // 'D' data coupling, 'A' ancilla-ancilla CZ
};

// Column order transcribed from the extraction figure; identical layout in
// both halves.
constexpr ParallelStep kParallelSteps[] = {
    {0, 4, 'D'},  // a1 - q5
    {1, 6, 'D'},  // a2 - q7
    {2, 5, 'D'},  // a3 - q6
    {2, 0, 'A'},  // a3 - a1 compensation
    {0, 0, 'D'},  // a1 - q1
    {1, 4, 'D'},  // a2 - q5
    {2, 1, 'D'},  // a3 - q2
    {0, 2, 'D'},  // a1 - q3
    {1, 3, 'D'},  // a2 - q4
    {2, 6, 'D'},  // a3 - q7
    {1, 0, 'A'},  // a2 - a1 compensation
    {0, 6, 'D'},  // a1 - q7
    {1, 5, 'D'},  // a2 - q6
    {2, 2, 'D'},  // a3 - q3
};

// Generators measured by ancillas (a1, a2, a3) in each half, as syndrome
// bit indices (bit i belongs to S_{i+1}).
constexpr int kParallelBits[2][3] = {{2, 3, 4}, {5, 0, 1}};

}  // namespace

NoisyCircuit build_parallel_extraction_steane() {
  StabilizerCode code = steane();
  const int anc_base = code.n();
  std::vector<Instruction> ins;
  for (int half = 0; half < 2; ++half) {
    for (int a = 0; a < 3; ++a) {
      ins.push_back(Instruction::make_gate(CliffordGate::h(anc_base + a)));
    }
    for (const ParallelStep& step : kParallelSteps) {
      const int anc = anc_base + step.ancilla;
      if (step.kind == 'A') {
        ins.push_back(
            Instruction::make_gate(CliffordGate::cz(anc, anc_base + step.target)));
        continue;
      }
      const Pauli& gen = code.generators()[kParallelBits[half][step.ancilla]];
      const bool x_type = gen.x_mask != 0;
      ins.push_back(Instruction::make_gate(
          x_type ? CliffordGate::cnot(anc, step.target)
                 : CliffordGate::cz(anc, step.target)));
    }
    for (int a = 0; a < 3; ++a) {
      ins.push_back(Instruction::make_gate(CliffordGate::h(anc_base + a)));
    }
    for (int a = 0; a < 3; ++a) {
      ins.push_back(
          Instruction::make_measure(anc_base + a, kParallelBits[half][a]));
      ins.push_back(Instruction::make_reset(anc_base + a));
    }
  }
  return NoisyCircuit(std::move(code), 10, std::move(ins));
}

NoisyCircuit attach_noise(const NoisyCircuit& circuit, const NoiseSpec& spec) {
  using Kind = NoiseSpec::Kind;
  std::vector<Instruction> out;
  for (const Instruction& ins : circuit.instructions()) {
    out.push_back(ins);
    switch (spec.kind) {
      case Kind::None:
        break;
      case Kind::Depolarizing2:
      case Kind::ZControl:
        if (ins.kind == Instruction::Kind::Gate && ins.gate.two_qubit()) {
          PauliChannel ch = spec.kind == Kind::Depolarizing2
                                ? depolarizing2(spec.param, ins.gate.q0, ins.gate.q1)
                                : z_control(spec.param, ins.gate.q0, ins.gate.q1);
          out.push_back(Instruction::make_noise(std::move(ch), spec));
        }
        break;
      case Kind::BitFlip:
        if (ins.kind == Instruction::Kind::Gate) {
          out.push_back(Instruction::make_noise(
              bit_flip(spec.param, ins.gate.q0), spec));
          if (ins.gate.two_qubit()) {
            out.push_back(Instruction::make_noise(
                bit_flip(spec.param, ins.gate.q1), spec));
          }
        } else if (ins.kind == Instruction::Kind::Reset) {
          out.push_back(Instruction::make_noise(bit_flip(spec.param, ins.qubit), spec));
        } else if (ins.kind == Instruction::Kind::Measure) {
          out.push_back(Instruction::make_flip(ins.bit, spec.param));
        }
        break;
      case Kind::MeasFlip:
        if (ins.kind == Instruction::Kind::Measure) {
          out.push_back(Instruction::make_flip(ins.bit, spec.param));
        }
        break;
    }
  }
  return NoisyCircuit(circuit.code(), circuit.n_total(), std::move(out));
}

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

const char* noise_name(NoiseSpec::Kind kind) {
  switch (kind) {
    case NoiseSpec::Kind::Depolarizing2:
      return "depolarizing2 lambda=";
    case NoiseSpec::Kind::ZControl:
      return "z-control lambda=";
    case NoiseSpec::Kind::BitFlip:
      return "bitflip p=";
    case NoiseSpec::Kind::MeasFlip:
      return "measflip q=";
    default:
      return nullptr;
  }
}

}  // namespace

std::string dump_circuit(const NoisyCircuit& circuit) {
  std::ostringstream out;
  for (const Instruction& ins : circuit.instructions()) {
    switch (ins.kind) {
      case Instruction::Kind::Gate:
        out << gate_name(ins.gate.kind) << ' ' << ins.gate.q0;
        if (ins.gate.two_qubit()) out << ' ' << ins.gate.q1;
        out << '\n';
        break;
      case Instruction::Kind::Noise: {
        if (!ins.channel_spec) {
          throw std::invalid_argument(
              "only circuits with named noise models can be dumped");
        }
        out << "NOISE " << noise_name(ins.channel_spec->kind)
            << format_double(ins.channel_spec->param);
        for (int q : ins.channel->support()) out << ' ' << q;
        out << '\n';
        break;
      }
      case Instruction::Kind::Measure:
        out << "MEASURE " << ins.qubit << " -> s" << ins.bit << '\n';
        break;
      case Instruction::Kind::ClassicalFlip:
        out << "FLIP s" << ins.bit << ' ' << format_double(ins.flip_prob) << '\n';
        break;
      case Instruction::Kind::Reset:
        out << "RESET " << ins.qubit << '\n';
        break;
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer \"" + s + "\" in circuit");
  }
  return v;
}

int parse_bit_token(const std::string& s) {
  if (s.size() < 2 || s[0] != 's') {
    throw std::invalid_argument("bad syndrome bit token \"" + s + "\"");
  }
  return parse_int(s.substr(1));
}

}  // namespace

NoisyCircuit parse_circuit(std::istream& in, const StabilizerCode& code) {
  std::vector<Instruction> ins;
  int max_qubit = code.n() - 1;
  std::string line;
  while (std::getline(in, line)) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    const std::string& op = tok[0];
    if (op == "NOISE") {
      if (tok.size() < 4) throw std::invalid_argument("bad NOISE line: " + line);
      std::size_t eq = tok[2].find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("bad NOISE parameter: " + line);
      }
      NoiseSpec spec = parse_noise_spec(tok[1] + ":" + tok[2]);
      std::vector<int> qubits;
      for (std::size_t i = 3; i < tok.size(); ++i) qubits.push_back(parse_int(tok[i]));
      PauliChannel ch = [&]() -> PauliChannel {
        switch (spec.kind) {
          case NoiseSpec::Kind::Depolarizing2:
            if (qubits.size() != 2) break;
            return depolarizing2(spec.param, qubits[0], qubits[1]);
          case NoiseSpec::Kind::ZControl:
            if (qubits.size() != 2) break;
            return z_control(spec.param, qubits[0], qubits[1]);
          case NoiseSpec::Kind::BitFlip:
            if (qubits.size() != 1) break;
            return bit_flip(spec.param, qubits[0]);
          default:
            break;
        }
        throw std::invalid_argument("bad NOISE line: " + line);
      }();
      for (int q : qubits) max_qubit = std::max(max_qubit, q);
      ins.push_back(Instruction::make_noise(std::move(ch), spec));
    } else if (op == "MEASURE") {
      if (tok.size() != 4 || tok[2] != "->") {
        throw std::invalid_argument("bad MEASURE line: " + line);
      }
      int q = parse_int(tok[1]);
      max_qubit = std::max(max_qubit, q);
      ins.push_back(Instruction::make_measure(q, parse_bit_token(tok[3])));
    } else if (op == "FLIP") {
      if (tok.size() != 3) throw std::invalid_argument("bad FLIP line: " + line);
      ins.push_back(
          Instruction::make_flip(parse_bit_token(tok[1]), std::stod(tok[2])));
    } else if (op == "RESET") {
      if (tok.size() != 2) throw std::invalid_argument("bad RESET line: " + line);
      int q = parse_int(tok[1]);
      max_qubit = std::max(max_qubit, q);
      ins.push_back(Instruction::make_reset(q));
    } else {
      // Gate line.
      CliffordGate::Kind kind;
      if (op == "H") kind = CliffordGate::Kind::H;
      else if (op == "S") kind = CliffordGate::Kind::S;
      else if (op == "X") kind = CliffordGate::Kind::X;
      else if (op == "Y") kind = CliffordGate::Kind::Y;
      else if (op == "Z") kind = CliffordGate::Kind::Z;
      else if (op == "CNOT") kind = CliffordGate::Kind::CNOT;
      else if (op == "CZ") kind = CliffordGate::Kind::CZ;
      else if (op == "SWAP") kind = CliffordGate::Kind::SWAP;
      else throw std::invalid_argument("unknown instruction: " + line);
      if (tok.size() < 2 || tok.size() > 3) {
        throw std::invalid_argument("bad gate line: " + line);
      }
      int q0 = parse_int(tok[1]);
      int q1 = tok.size() == 3 ? parse_int(tok[2]) : -1;
      max_qubit = std::max({max_qubit, q0, q1});
      ins.push_back(Instruction::make_gate(CliffordGate{kind, q0, q1}));
    }
  }
  return NoisyCircuit(code, max_qubit + 1, std::move(ins));
}

NoisyCircuit parse_circuit(const std::string& text, const StabilizerCode& code) {
  std::istringstream in(text);
  return parse_circuit(in, code);
}

}  // namespace syndrocal
