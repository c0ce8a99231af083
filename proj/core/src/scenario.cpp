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

#include "syndrocal/scenario.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "syndrocal/decode.hpp"
#include "syndrocal/density.hpp"
#include "syndrocal/forward.hpp"
#include "syndrocal/noisest.hpp"
#include "syndrocal/random_instances.hpp"
#include "syndrocal/spectral.hpp"
#include "syndrocal/two_round.hpp"

namespace syndrocal {

std::string format_number(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_lambda_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::string csv_header(const std::string& command) {
  return "# syndrocal-csv v1 " + command + "\n";
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_number(*v) : "undefined";
}

}  // namespace

void apply_config_entry(ScenarioConfig& config, const std::string& key,
                        const std::string& value) {
  if (key == "code") {
    config.code = value;
  } else if (key == "circuit") {
    config.circuit = value;
  } else if (key == "noise") {
    config.noise = value;
  } else if (key == "state") {
    config.state = value;
  } else if (key == "lambdas") {
    config.lambdas = parse_lambda_list(value);
  } else if (key == "shots") {
    config.shots = std::stoull(value);
  } else if (key == "seed") {
    config.seed = std::stoull(value);
  } else if (key == "rounds") {
    config.rounds = std::stoi(value);
  } else if (key == "analytic") {
    config.analytic = value == "true" || value == "1" || value == "yes";
  } else if (key == "out") {
    config.out_dir = value;
  } else {
    throw std::invalid_argument("unknown configuration key: " + key);
  }
}

ScenarioConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  ScenarioConfig config;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line is not key=value: " + line);
    }
    apply_config_entry(config, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return config;
}

Scenario build_scenario(const ScenarioConfig& config, double param) {
  StabilizerCode code =
      config.code == "steane" ? steane() : read_code_file(config.code);

  NoisyCircuit base = [&]() {
    if (config.circuit == "parallel") {
      if (config.code != "steane") {
        throw std::invalid_argument(
            "the parallel circuit is defined for the steane code only");
      }
      return build_parallel_extraction_steane();
    }
    if (config.circuit == "sequential") return build_sequential_extraction(code);
    throw std::invalid_argument("unknown circuit kind: " + config.circuit);
  }();

  NoiseSpec spec = parse_noise_spec(config.noise);
  spec.param = spec.kind == NoiseSpec::Kind::None ? 0.0 : param;

  InputState state = [&]() -> InputState {
    if (config.state == "calibration") {
      return InputState(calibration_state(code.n()));
    }
    if (config.state == "codeword") {
      return InputState(CodewordState(base.code()));
    }
    if (config.state == "zeros") {
      return InputState(ProductState::zeros(code.n()));
    }
    throw std::invalid_argument("unknown input state: " + config.state);
  }();

  return Scenario{attach_noise(base, spec), std::move(state), spec};
}

CalibrationReport analytic_calibration(const NoisyCircuit& circuit) {
  CalibrationReport report = CalibrationReport::make(
      circuit.m(), CalibrationReport::Provenance::Analytic);
  f2::F2Function gamma = gamma_table(circuit);
  f2::F2Function beta = beta_table(circuit);
  for (f2::word a = 0; a < gamma.size(); ++a) {
    report.gamma[a] = gamma[a];
    report.beta[a] = beta[a];
    if (std::abs(gamma[a]) >= report.division_guard()) {
      report.alpha[a] = beta[a] / gamma[a];
    }
  }
  return report;
}

CalibrationReport empirical_calibration(const NoisyCircuit& circuit,
                                        const InputState& state,
                                        std::uint64_t shots, std::uint64_t seed,
                                        int rounds) {
  JointErrorDistribution joint = exact_joint_distribution(circuit);
  f2::F2Function ideal(circuit.m());
  for (f2::word a = 0; a < ideal.size(); ++a) {
    ideal[a] = state.expect(stabilizer_element(circuit.code(), a));
  }
  if (rounds == 1) {
    // A single round pins gamma; beta and alpha stay undefined.
    auto records = sample_shots(joint, state, circuit.code(), shots, seed, 1);
    CalibrationReport report = CalibrationReport::make(
        circuit.m(), CalibrationReport::Provenance::Empirical);
    report.shots = records.size();
    const double n = static_cast<double>(records.size());
    for (f2::word a = 0; a < ideal.size(); ++a) {
      if (std::abs(ideal[a]) < report.division_guard()) continue;
      double e1 = 0.0;
      for (const ShotRecord& rec : records) {
        e1 += f2::dot(a, rec.x) ? -1.0 : 1.0;
      }
      e1 /= n;
      report.gamma[a] = e1 / ideal[a];
      report.gamma_se[a] =
          std::sqrt(std::max(0.0, (1.0 - e1 * e1) / n)) / std::abs(ideal[a]);
    }
    return report;
  }
  auto records = sample_shots(joint, state, circuit.code(), shots, seed, rounds);
  return estimate_factors(records, ideal, circuit.m());
}

std::string calibration_csv(const CalibrationReport& report) {
  std::ostringstream out;
  out << csv_header("calibrate");
  out << "a,gamma,beta,alpha,gamma_se,beta_se,alpha_se,provenance\n";
  const char* provenance =
      report.provenance == CalibrationReport::Provenance::Analytic ? "analytic"
                                                                   : "empirical";
  for (f2::word a = 0; a < report.gamma.size(); ++a) {
    out << a << ',' << opt_cell(report.gamma[a]) << ',' << opt_cell(report.beta[a])
        << ',' << opt_cell(report.alpha[a]) << ',' << format_number(report.gamma_se[a])
        << ',' << format_number(report.beta_se[a]) << ','
        << format_number(report.alpha_se[a]) << ',' << provenance << '\n';
  }
  return out.str();
}

std::string beta_au_csv(const BetaAuTable& table) {
  std::ostringstream out;
  out << csv_header("beta-au");
  out << "a,u,value,se\n";
  const f2::word words = f2::word{1} << table.m;
  for (f2::word a = 0; a < words; ++a) {
    for (f2::word u = 0; u < words; ++u) {
      out << a << ',' << u << ',' << format_number(table.at(a, u)) << ','
          << format_number(table.se.empty() ? 0.0 : table.se[a | (u << table.m)])
          << '\n';
    }
  }
  return out.str();
}

namespace {

std::vector<double> effective_grid(const ScenarioConfig& config) {
  if (!config.lambdas.empty()) return config.lambdas;
  NoiseSpec spec = parse_noise_spec(config.noise);
  return {spec.param};
}

}  // namespace

CsvFiles cmd_calibrate(const ScenarioConfig& config) {
  if (config.rounds != 1 && config.rounds != 2) {
    throw std::invalid_argument("calibrate needs rounds = 1 or 2");
  }
  if (config.emit_beta_au && config.rounds != 2) {
    throw std::invalid_argument("beta_au needs two calibration rounds");
  }
  const std::vector<double> grid = effective_grid(config);
  std::vector<std::string> reports =
      parallel_map<std::string>(grid.size(), [&](std::size_t i) {
        Scenario sc = build_scenario(config, grid[i]);
        CalibrationReport report =
            config.analytic
                ? analytic_calibration(sc.circuit)
                : empirical_calibration(sc.circuit, sc.state, config.shots,
                                        config.seed, config.rounds);
        std::string out = calibration_csv(report);
        if (config.emit_beta_au) {
          BetaAuTable table;
          table.m = sc.circuit.m();
          if (config.analytic) {
            table.value = beta_au_spectral(sc.circuit);
          } else {
            JointErrorDistribution joint = exact_joint_distribution(sc.circuit);
            f2::F2Function ideal(sc.circuit.m());
            for (f2::word a = 0; a < ideal.size(); ++a) {
              ideal[a] = sc.state.expect(stabilizer_element(sc.circuit.code(), a));
            }
            auto records = sample_shots(joint, sc.state, sc.circuit.code(),
                                        config.shots, config.seed, 2);
            table = beta_au_empirical(records, report, ideal);
          }
          out += '\0';  // file separator marker replaced below
          out += beta_au_csv(table);
        }
        return out;
      });
  CsvFiles files;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::string& blob = reports[i];
    std::size_t split = blob.find('\0');
    files.emplace_back("calibrate-lambda=" + format_number(grid[i]) + ".csv",
                       blob.substr(0, split));
    if (split != std::string::npos) {
      files.emplace_back("beta-au-lambda=" + format_number(grid[i]) + ".csv",
                         blob.substr(split + 1));
    }
  }
  return files;
}

namespace {

// Per-qubit product projection of the accumulated data error, from the
// spectral engine: the per-qubit marginal is the one-qubit Walsh inversion
// of (Lambda(X_q,0), Lambda(Y_q,0), Lambda(Z_q,0)).
ChannelEstimate reference_channel(const NoisyCircuit& circuit) {
  const int n = circuit.n_data();
  ChannelEstimate ref;
  ref.qubits.reserve(n);
  for (int q = 0; q < n; ++q) {
    double cx = spectral_coefficient(
        circuit, SpectralQuery(Pauli::single(n, q, 'X'), 0));
    double cy = spectral_coefficient(
        circuit, SpectralQuery(Pauli::single(n, q, 'Y'), 0));
    double cz = spectral_coefficient(
        circuit, SpectralQuery(Pauli::single(n, q, 'Z'), 0));
    std::array<double, 4> p = {0.25 * (1 + cx + cy + cz),
                               0.25 * (1 + cx - cy - cz),
                               0.25 * (1 - cx + cy - cz),
                               0.25 * (1 - cx - cy + cz)};
    for (double& v : p) v = std::max(v, 0.0);
    ref.qubits.push_back(p);
  }
  return ref;
}

ChannelEstimate estimate_from_eigenvalues(const CalibrationReport& report,
                                          bool calibrated) {
  std::array<std::array<double, 7>, 3> eigs{};
  const char bases[3] = {'X', 'Y', 'Z'};
  for (int b = 0; b < 3; ++b) {
    auto indices = element_indices(bases[b]);
    for (int i = 0; i < 7; ++i) {
      const f2::word a = indices[i];
      std::optional<double> value;
      if (calibrated) {
        // alpha-corrected measured expectation over the known ideal one,
        // i.e. the beta factor.
        if (report.gamma[a] && report.alpha[a]) {
          value = *report.alpha[a] * *report.gamma[a];
        }
      } else {
        value = report.gamma[a];
      }
      if (!value) {
        throw std::domain_error("calibration entry undefined for element " +
                                std::to_string(a));
      }
      eigs[b][i] = *value;
    }
  }
  return estimate_channel_pipeline(eigs[0], eigs[1], eigs[2]);
}

}  // namespace

CsvFiles cmd_estimate_channel(const ScenarioConfig& config) {
  const std::vector<double> grid = effective_grid(config);
  std::vector<std::string> rows =
      parallel_map<std::string>(grid.size(), [&](std::size_t i) {
        Scenario sc = build_scenario(config, grid[i]);
        CalibrationReport report =
            config.analytic
                ? analytic_calibration(sc.circuit)
                : empirical_calibration(sc.circuit, sc.state, config.shots,
                                        config.seed);
        ChannelEstimate raw = estimate_from_eigenvalues(report, false);
        ChannelEstimate calibrated = estimate_from_eigenvalues(report, true);
        ChannelEstimate reference = reference_channel(sc.circuit);
        return format_number(grid[i]) + ',' +
               format_number(bhattacharyya(raw, reference)) + ',' +
               format_number(bhattacharyya(calibrated, reference)) + '\n';
      });
  std::ostringstream out;
  out << csv_header("estimate-channel");
  out << "lambda,db_raw,db_calibrated\n";
  for (const std::string& row : rows) out << row;
  return {{"estimate-channel.csv", out.str()}};
}

CsvFiles cmd_decode_compare(const ScenarioConfig& config) {
  NoiseSpec spec = parse_noise_spec(config.noise);
  if (spec.kind != NoiseSpec::Kind::ZControl) {
    throw std::invalid_argument(
        "decode-compare runs the z-control scenario; pass --noise z-control:lambda=...");
  }
  std::ostringstream out;
  out << csv_header("decode-compare");
  out << "lambda,standard_wrong_rate,standard_wrong_rate_se,calibrated_wrong_rate,"
         "closed_form_target\n";
  auto points =
      disagreement_experiment(effective_grid(config), config.shots, config.seed);
  for (const DisagreementPoint& p : points) {
    out << format_number(p.lambda) << ',' << format_number(p.standard_wrong_rate)
        << ',' << format_number(p.standard_wrong_rate_se) << ','
        << format_number(p.calibrated_wrong_rate) << ','
        << format_number(p.closed_form_target) << '\n';
  }
  return {{"decode-compare.csv", out.str()}};
}

namespace {

double empirical_mean_sign(const std::vector<f2::word>& words, f2::word mask) {
  double acc = 0.0;
  for (f2::word w : words) acc += f2::dot(w, mask) ? -1.0 : 1.0;
  return acc / static_cast<double>(words.size());
}

}  // namespace

CsvFiles cmd_recover_generators(const ScenarioConfig& config) {
  NoiseSpec spec = parse_noise_spec(config.noise);
  if (spec.kind != NoiseSpec::Kind::BitFlip &&
      spec.kind != NoiseSpec::Kind::MeasFlip) {
    throw std::invalid_argument(
        "recover-generators expects bitflip or measflip noise");
  }
  StabilizerCode code = steane();
  InputState zeros{ProductState::zeros(code.n())};

  std::ostringstream out;
  out << csv_header("recover-generators");
  out << "generator,measured,corrected,truth,rem\n";

  for (int gen_index : {3, 4, 5}) {  // S4, S5, S6
    NoisyCircuit base = build_single_generator_extraction(code, gen_index);
    NoisyCircuit noisy = attach_noise(base, spec);
    const StabilizerCode& sub = noisy.code();

    CalibrationReport analytic = analytic_calibration(noisy);
    const double gamma = *analytic.gamma[1];
    const double beta = *analytic.beta[1];
    const double truth = beta;  // E0 = 1 on |0...0>

    double measured, corrected;
    if (config.analytic) {
      measured = gamma;
      corrected = corrected_expectation(1, measured, analytic);
    } else {
      JointErrorDistribution joint = exact_joint_distribution(noisy);
      std::uint64_t cal_seed = CounterRng::derive_key(config.seed, 2 * gen_index);
      std::uint64_t est_seed = CounterRng::derive_key(config.seed, 2 * gen_index + 1);
      auto records = sample_shots(joint, zeros, sub, config.shots, cal_seed, 2);
      f2::F2Function ideal(1);
      ideal[0] = 1.0;
      ideal[1] = 1.0;
      CalibrationReport report = estimate_factors(records, ideal, 1);
      f2::F2Function pt = noisy_outcome_distribution(joint, zeros, sub);
      auto est = sample_words(pt, config.shots, est_seed);
      measured = empirical_mean_sign(est, 1);
      corrected = corrected_expectation(1, measured, report);
    }

    // Readout-error-mitigation baseline: single-qubit Z readouts on the
    // generator support after the stabilizer measurement, corrected by the
    // inverse transition matrix of the readout flips.
    JointErrorDistribution joint = exact_joint_distribution(noisy);
    auto errors = error_marginal(joint);
    const Pauli& g = sub.generators()[0];
    std::vector<int> support;
    for (int q = 0; q < sub.n(); ++q) {
      if (((g.x_mask | g.z_mask) >> q) & 1) support.push_back(q);
    }
    const int k = static_cast<int>(support.size());
    // Propagated-error flips of the final readouts.
    f2::F2Function flip_dist(k);
    for (const auto& [e, p] : errors) {
      f2::word w = 0;
      for (int i = 0; i < k; ++i) {
        if ((e.x_mask >> support[i]) & 1) w |= f2::word{1} << i;
      }
      flip_dist[w] += p;
    }
    // Readout flip per final measurement (both noise models flip readouts).
    const double q_flip = spec.param;
    f2::F2Function readout(k);
    for (f2::word w = 0; w < readout.size(); ++w) {
      double p = 1.0;
      for (int i = 0; i < k; ++i) {
        p *= ((w >> i) & 1) ? q_flip : 1.0 - q_flip;
      }
      readout[w] = p;
    }
    f2::F2Function observed = f2::convolve(flip_dist, readout);
    // Transition matrix from per-basis-state calibration runs; sampled in
    // the empirical mode, exact otherwise.
    std::vector<std::vector<double>> columns(readout.size());
    for (f2::word truth_word = 0; truth_word < readout.size(); ++truth_word) {
      columns[truth_word].resize(readout.size());
      if (config.analytic) {
        for (f2::word obs = 0; obs < readout.size(); ++obs) {
          columns[truth_word][obs] = readout[obs ^ truth_word];
        }
      } else {
        f2::F2Function column(k);
        for (f2::word obs = 0; obs < readout.size(); ++obs) {
          column[obs] = readout[obs ^ truth_word];
        }
        std::uint64_t col_seed = CounterRng::derive_key(
            config.seed, 1000 + 64 * gen_index + truth_word);
        for (f2::word w : sample_words(column, config.shots, col_seed)) {
          columns[truth_word][w] += 1.0 / static_cast<double>(config.shots);
        }
      }
    }
    std::vector<double> observed_vec(observed.values());
    if (!config.analytic) {
      std::uint64_t rem_seed = CounterRng::derive_key(config.seed, 100 + gen_index);
      auto rem_samples = sample_words(observed, config.shots, rem_seed);
      std::fill(observed_vec.begin(), observed_vec.end(), 0.0);
      for (f2::word w : rem_samples) {
        observed_vec[w] += 1.0 / static_cast<double>(config.shots);
      }
    }
    std::vector<double> mitigated = rem_correct(observed_vec, columns);
    double rem_value = 0.0;
    for (f2::word w = 0; w < readout.size(); ++w) {
      rem_value += (std::popcount(w) & 1) ? -mitigated[w] : mitigated[w];
    }

    out << 'S' << (gen_index + 1) << ',' << format_number(measured) << ','
        << format_number(corrected) << ',' << format_number(truth) << ','
        << format_number(rem_value) << '\n';
  }
  return {{"recover-generators.csv", out.str()}};
}

namespace {

bool check(std::ostream& log, const std::string& name, bool ok,
           const std::string& detail = "") {
  log << (ok ? "PASS " : "FAIL ") << name;
  if (!ok && !detail.empty()) log << " (" << detail << ")";
  log << '\n';
  return ok;
}

NoisyCircuit corrupt_parallel_circuit(const NoisyCircuit& circuit) {
  // Retarget the first ancilla-data CZ to the wrong data qubit.
  std::vector<Instruction> ins = circuit.instructions();
  for (Instruction& step : ins) {
    if (step.kind == Instruction::Kind::Gate &&
        step.gate.kind == CliffordGate::Kind::CZ &&
        step.gate.q1 < circuit.n_data()) {
      step.gate.q1 = (step.gate.q1 + 1) % circuit.n_data();
      break;
    }
  }
  return NoisyCircuit(circuit.code(), circuit.n_total(), std::move(ins));
}

}  // namespace

bool run_selftest(std::ostream& log, bool inject_fault) {
  bool ok = true;

  // Golden Steane combinatorics.
  StabilizerCode code = steane();
  auto hist = weight_histogram(code);
  ok &= check(log, "steane-weight-histogram",
              hist == std::map<int, int>{{0, 1}, {4, 21}, {6, 42}});
  DecodeTable table = decode_table(code);
  bool decode_ok = true;
  for (f2::word x = 0; x < 64; ++x) {
    decode_ok &= syndrome_of(table.correction(x), code) == x;
  }
  ok &= check(log, "steane-decode-table", decode_ok);

  // The parallel circuit implements the ideal measurement when noiseless.
  NoisyCircuit parallel = build_parallel_extraction_steane();
  if (inject_fault) parallel = corrupt_parallel_circuit(parallel);
  InputState cal_state{calibration_state(code.n())};
  OracleResult oracle = density_oracle(parallel, cal_state);
  f2::F2Function ideal = ideal_syndrome_distribution(cal_state, code);
  double worst = 0.0;
  for (f2::word x = 0; x < 64; ++x) {
    worst = std::max(worst, std::abs(oracle.outcome_distribution[x] - ideal[x]));
  }
  ok &= check(log, "parallel-ideal-measurement", worst < 1e-9,
              "max deviation " + format_number(worst));

  // Z-on-control closed form.
  {
    NoiseSpec spec{NoiseSpec::Kind::ZControl, 0.1};
    NoisyCircuit noisy = attach_noise(build_parallel_extraction_steane(), spec);
    JointErrorDistribution joint = exact_joint_distribution(noisy);
    double p0 = bit_marginal(joint)[0];
    double diff = std::abs(p0 - no_flip_probability(0.1));
    ok &= check(log, "z-control-closed-form", diff < 1e-12,
                "difference " + format_number(diff));
  }

  // Engine triangle on random circuits.
  {
    CounterRng rng(CounterRng::derive_key(20260808, 0));
    double worst_pair = 0.0, worst_oracle = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      NoisyCircuit circuit = random_circuit(rng, 3, 2);
      JointErrorDistribution joint = exact_joint_distribution(circuit);
      ProductState state = random_product_state(rng, 3);
      NoisyCircuit noiseless = [&]() {
        std::vector<Instruction> kept;
        for (const Instruction& step : circuit.instructions()) {
          if (step.kind != Instruction::Kind::Noise &&
              step.kind != Instruction::Kind::ClassicalFlip) {
            kept.push_back(step);
          }
        }
        return NoisyCircuit(circuit.code(), circuit.n_total(), std::move(kept));
      }();
      for (int qidx = 0; qidx < 8; ++qidx) {
        std::uint64_t bits = rng.next_u64();
        Pauli q(3, bits & 7, (bits >> 3) & 7, 0);
        f2::word b = static_cast<f2::word>((bits >> 6) & 3);
        SpectralQuery query(q, b);
        double lambda_spec = spectral_coefficient(circuit, query);
        double lambda_fwd = 0.0;
        for (const auto& [k, p] : joint.entries()) {
          int sign = pairing(joint.error_of(k), q) ^
                     f2::dot(joint.flips_of(k), b);
          lambda_fwd += sign ? -p : p;
        }
        worst_pair = std::max(worst_pair, std::abs(lambda_spec - lambda_fwd));
        double m_noisy =
            density_joint_coefficient(circuit, InputState(state), query);
        double c_ref =
            density_joint_coefficient(noiseless, InputState(state), query);
        worst_oracle =
            std::max(worst_oracle, std::abs(m_noisy - lambda_spec * c_ref));
      }
    }
    ok &= check(log, "engine-triangle", worst_pair < 1e-9 && worst_oracle < 1e-9,
                "spectral vs forward " + format_number(worst_pair) +
                    ", vs oracle " + format_number(worst_oracle));
  }

  // Appendix theorem on random faulty measurements.
  {
    CounterRng rng(CounterRng::derive_key(20260808, 1));
    double worst_res = 0.0, worst_beta = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
      StabilizerCode rc = random_code(rng, 3, 2);
      JointErrorDistribution dist = random_faulty(rng, 3, 2, 5);
      ProductState state = random_product_state(rng, 3);
      InputState input(state);
      OracleResult oracle = faulty_measurement_oracle(dist, input, rc);
      BetaAuTable definitional = beta_au_definitional(dist, rc);
      for (f2::word a = 0; a < 4; ++a) {
        f2::F2Function f_a(2), g_a(2), h_a(2);
        for (f2::word x = 0; x < 4; ++x) {
          f_a[x] = oracle.post_expectations[x][a] * oracle.outcome_distribution[x];
          g_a[x] = definitional.at(a, x);
          h_a[x] = input.expect(stabilizer_element(rc, a ^ x));
        }
        worst_res = std::max(worst_res, verify_theorem(f_a, g_a, h_a));
        f2::F2Function recovered = theorem_g(f_a, h_a);
        for (f2::word u = 0; u < 4; ++u) {
          worst_beta = std::max(worst_beta, std::abs(recovered[u] - g_a[u]));
        }
      }
    }
    ok &= check(log, "appendix-theorem", worst_res < 1e-9 && worst_beta < 1e-9,
                "residual " + format_number(worst_res) + ", beta_au " +
                    format_number(worst_beta));
  }

  return ok;
}

}  // namespace syndrocal
