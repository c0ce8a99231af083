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

#include "syndrocal/code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace syndrocal {

namespace {

// Linear independence of the symplectic (x|z) rows over F2.
bool independent(const std::vector<Pauli>& paulis, int n) {
  std::vector<__uint128_t> rows;
  for (const Pauli& p : paulis) {
    __uint128_t v =
        (static_cast<__uint128_t>(p.z_mask) << n) | static_cast<__uint128_t>(p.x_mask);
    // Reduce against stored rows (kept with distinct leading bits).
    for (__uint128_t row : rows) {
      __uint128_t lead = row;
      while (lead & (lead - 1)) lead ^= lead & (~lead + 1);
      if (v & lead) v ^= row;
    }
    if (v == 0) return false;
    rows.push_back(v);
    // Keep rows sorted descending so leading bits stay usable.
    for (std::size_t i = rows.size(); i-- > 1;) {
      if (rows[i] > rows[i - 1]) std::swap(rows[i], rows[i - 1]);
    }
  }
  return true;
}

}  // namespace

StabilizerCode::StabilizerCode(std::vector<Pauli> generators,
                               std::vector<Pauli> logical_x,
                               std::vector<Pauli> logical_z)
    : generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
  if (generators_.empty()) {
    throw std::invalid_argument("stabilizer code needs at least one generator");
  }
  n_ = generators_.front().n_qubits;
  for (const Pauli& g : generators_) {
    if (g.n_qubits != n_) {
      throw std::invalid_argument("generator qubit counts differ");
    }
    Pauli sq = multiply(g, g);
    if (!sq.is_identity_mask() || sq.phase_exp != 0) {
      throw std::invalid_argument("generator does not square to +identity: " +
                                  to_string(g));
    }
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (pairing(generators_[i], generators_[j])) {
        throw std::invalid_argument("generators do not commute: " +
                                    to_string(generators_[i]) + " vs " +
                                    to_string(generators_[j]));
      }
    }
  }
  if (!independent(generators_, n_)) {
    throw std::invalid_argument("generators are dependent");
  }
  if (static_cast<int>(generators_.size()) > n_) {
    throw std::invalid_argument("more generators than qubits");
  }
  for (const auto* logicals : {&logical_x_, &logical_z_}) {
    for (const Pauli& l : *logicals) {
      if (l.n_qubits != n_) {
        throw std::invalid_argument("logical operator size mismatch");
      }
      for (const Pauli& g : generators_) {
        if (pairing(l, g)) {
          throw std::invalid_argument(
              "logical operator anticommutes with a generator: " + to_string(l));
        }
      }
    }
  }
  if (m() > f2::max_dim) {
    throw std::invalid_argument("syndrome length exceeds supported dimension");
  }
}

StabilizerCode steane() {
  auto p = [](const char* s) { return pauli_from_string(s); };
  return StabilizerCode(
      {p("+IIIXXXX"), p("+IXXIIXX"), p("+XIXIXIX"), p("+IIIZZZZ"),
       p("+IZZIIZZ"), p("+ZIZIZIZ")},
      {p("+XXXXXXX")}, {p("+ZZZZZZZ")});
}

f2::word syndrome_of(const Pauli& p, const StabilizerCode& code) {
  if (p.n_qubits != code.n()) {
    throw std::invalid_argument("syndrome_of: qubit count mismatch");
  }
  f2::word out = 0;
  for (int i = 0; i < code.m(); ++i) {
    out |= static_cast<f2::word>(pairing(p, code.generators()[i])) << i;
  }
  return out;
}

Pauli stabilizer_element(const StabilizerCode& code, f2::word a) {
  if (a >= (f2::word{1} << code.m())) {
    throw std::invalid_argument("stabilizer element index out of range");
  }
  Pauli out = Pauli::identity(code.n());
  for (int i = 0; i < code.m(); ++i) {
    if ((a >> i) & 1) out = multiply(out, code.generators()[i]);
  }
  return out;
}

std::map<int, int> weight_histogram(const StabilizerCode& code) {
  std::map<int, int> hist;
  for (f2::word a = 0; a < (f2::word{1} << code.m()); ++a) {
    ++hist[weight(stabilizer_element(code, a))];
  }
  return hist;
}

DecodeTable::DecodeTable(std::vector<Pauli> corrections)
    : corrections_(std::move(corrections)) {
  if (corrections_.empty() || (corrections_.size() & (corrections_.size() - 1))) {
    throw std::invalid_argument("decode table size must be a power of two");
  }
}

const Pauli& DecodeTable::correction(f2::word syndrome) const {
  if (syndrome >= corrections_.size()) {
    throw std::out_of_range("syndrome out of range");
  }
  return corrections_[syndrome];
}

DecodeTable decode_table(const StabilizerCode& code) {
  const int n = code.n();
  const std::size_t n_syndromes = std::size_t{1} << code.m();
  std::vector<Pauli> table(n_syndromes, Pauli::identity(n));
  std::vector<bool> found(n_syndromes, false);
  std::size_t remaining = n_syndromes;

  table[0] = Pauli::identity(n);
  found[0] = true;
  --remaining;

  // Enumerate error candidates by increasing weight; within a weight by
  // increasing Y count, then (x_mask, z_mask). The first hit per syndrome
  // wins, which makes the table deterministic and matches the X_i Z_j
  // representative convention.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates;
  for (int w = 1; w <= n && remaining > 0; ++w) {
    candidates.clear();
    // Enumerate support sets of size w, then letters on the support.
    std::vector<int> support(w);
    for (int i = 0; i < w; ++i) support[i] = i;
    while (true) {
      // 3^w letter assignments: 1 = X, 2 = Z, 3 = Y per support qubit.
      std::vector<int> assign(w, 1);
      while (true) {
        std::uint64_t x = 0, z = 0;
        for (int i = 0; i < w; ++i) {
          if (assign[i] & 1) x |= std::uint64_t{1} << support[i];
          if (assign[i] & 2) z |= std::uint64_t{1} << support[i];
        }
        candidates.emplace_back(x, z);
        int pos = w - 1;
        while (pos >= 0 && assign[pos] == 3) assign[pos--] = 1;
        if (pos < 0) break;
        ++assign[pos];
      }
      int pos = w - 1;
      while (pos >= 0 && support[pos] == n - w + pos) --pos;
      if (pos < 0) break;
      ++support[pos];
      for (int i = pos + 1; i < w; ++i) support[i] = support[i - 1] + 1;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                int ya = std::popcount(a.first & a.second);
                int yb = std::popcount(b.first & b.second);
                if (ya != yb) return ya < yb;
                return a < b;
              });
    for (const auto& [x, z] : candidates) {
      Pauli e(n, x, z, std::popcount(x & z));  // phase +1 rendering
      f2::word s = syndrome_of(e, code);
      if (!found[s]) {
        table[s] = e;
        found[s] = true;
        if (--remaining == 0) break;
      }
    }
  }
  if (remaining > 0) {
    throw std::runtime_error("decode table: some syndromes unreachable");
  }
  return DecodeTable(std::move(table));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

StabilizerCode read_code(std::istream& in) {
  std::vector<Pauli> generators, logical_x, logical_z;
  std::vector<Pauli>* current = nullptr;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "generators:") {
      current = &generators;
    } else if (t == "logical_x:") {
      current = &logical_x;
    } else if (t == "logical_z:") {
      current = &logical_z;
    } else {
      if (current == nullptr) {
        throw std::invalid_argument("code file: operator before section header");
      }
      current->push_back(pauli_from_string(t));
    }
  }
  return StabilizerCode(std::move(generators), std::move(logical_x),
                        std::move(logical_z));
}

StabilizerCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open code file: " + path);
  }
  return read_code(in);
}

std::string write_code(const StabilizerCode& code) {
  std::ostringstream out;
  out << "generators:\n";
  for (const Pauli& g : code.generators()) out << to_string(g) << "\n";
  out << "logical_x:\n";
  for (const Pauli& l : code.logical_x()) out << to_string(l) << "\n";
  out << "logical_z:\n";
  for (const Pauli& l : code.logical_z()) out << to_string(l) << "\n";
  return out.str();
}

}  // namespace syndrocal
