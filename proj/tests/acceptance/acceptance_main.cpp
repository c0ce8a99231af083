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

// Acceptance suite: one scenario per criterion, each printed as a single
// pass/fail line with its measured worst deviation and runtime.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "../steane_fixtures.hpp"
#include "syndrocal/calib.hpp"
#include "syndrocal/circuit.hpp"
#include "syndrocal/decode.hpp"
#include "syndrocal/density.hpp"
#include "syndrocal/forward.hpp"
#include "syndrocal/noisest.hpp"
#include "syndrocal/random_instances.hpp"
#include "syndrocal/rng.hpp"
#include "syndrocal/scenario.hpp"
#include "syndrocal/spectral.hpp"
#include "syndrocal/two_round.hpp"

using namespace syndrocal;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& detail) {
    ok_ = false;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += detail;
  }

  void note(const std::string& text) {
    if (!note_.empty()) note_ += ", ";
    note_ += text;
  }

  ~Criterion() {
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
    std::printf("%s criterion %2d: %s", ok_ ? "PASS" : "FAIL", number_,
                title_.c_str());
    if (!note_.empty()) std::printf(" [%s]", note_.c_str());
    if (!ok_) std::printf(" -- %s", detail_.c_str());
    std::printf(" (%.2fs)\n", seconds);
    std::fflush(stdout);
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string detail_;
  std::string note_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) { return format_number(v); }

void criterion_1_calibration_distribution() {
  Criterion c(1, "calibration-state syndrome distribution (1/108, 1/36)");
  StabilizerCode code = steane();
  f2::F2Function p = ideal_syndrome_distribution(calibration_state(7), code);
  int heavy = 0, light = 0;
  double worst = 0.0;
  for (f2::word x = 0; x < 64; ++x) {
    bool w6 = weight(stabilizer_element(code, x)) == 6;
    (w6 ? heavy : light) += 1;
    double expected = w6 ? 1.0 / 108.0 : 1.0 / 36.0;
    worst = std::max(worst, std::abs(p[x] - expected));
  }
  if (heavy != 42 || light != 22) {
    c.fail("split " + std::to_string(heavy) + "/" + std::to_string(light));
  }
  if (worst > 1e-12) c.fail("max deviation " + fmt(worst));
  c.note("max dev " + fmt(worst));
}

void criterion_2_expectation_law() {
  Criterion c(2, "calibration-state expectations 3^(-w/2)");
  StabilizerCode code = steane();
  ProductState psi = calibration_state(7);
  double worst = 0.0;
  for (f2::word a = 0; a < 64; ++a) {
    Pauli sa = stabilizer_element(code, a);
    // Magnitude 3^(-w/2); the sign is the Pauli-product sign of the
    // ordered product, +1 for every element of weight 0 or 4 and -1 for
    // the weight-6 elements (pinned by the criterion-1 distribution).
    double sign = rendered_phase_exp(sa) == 2 ? -1.0 : 1.0;
    if (weight(sa) != 6 && sign < 0) c.fail("unexpected sign at " + fmt(a));
    if (weight(sa) == 6 && sign > 0) c.fail("unexpected sign at " + fmt(a));
    double expected = sign * std::pow(3.0, -0.5 * weight(sa));
    worst = std::max(worst, std::abs(expectation(psi, sa) - expected));
  }
  if (worst > 1e-12) c.fail("max deviation " + fmt(worst));
  c.note("max dev " + fmt(worst) + ", signed on weight-6 elements");
}

void criterion_3_zcontrol_closed_form() {
  Criterion c(3, "z-on-control P(u=0) closed form");
  double worst = 0.0;
  for (double lambda : {0.01, 0.05, 0.1, 0.2, 0.3}) {
    NoiseSpec spec{NoiseSpec::Kind::ZControl, lambda};
    NoisyCircuit noisy = attach_noise(build_parallel_extraction_steane(), spec);
    JointErrorDistribution joint = exact_joint_distribution(noisy);
    worst = std::max(worst,
                     std::abs(bit_marginal(joint)[0] - no_flip_probability(lambda)));
  }
  if (worst > 1e-9) c.fail("max deviation " + fmt(worst));
  c.note("exact max dev " + fmt(worst));

  // Monte Carlo cross-check at lambda = 0.1 with one million shots.
  const double lambda = 0.1;
  NoiseSpec spec{NoiseSpec::Kind::ZControl, lambda};
  NoisyCircuit noisy = attach_noise(build_parallel_extraction_steane(), spec);
  JointErrorDistribution joint = exact_joint_distribution(noisy);
  InputState cw{CodewordState(noisy.code())};
  const std::uint64_t shots = 1000000;
  auto records = sample_shots(joint, cw, noisy.code(), shots, 2026, 1);
  std::uint64_t zeros = 0;
  for (const ShotRecord& rec : records) zeros += rec.x == 0;
  double target = no_flip_probability(lambda);
  double se = std::sqrt(target * (1.0 - target) / static_cast<double>(shots));
  double empirical = static_cast<double>(zeros) / static_cast<double>(shots);
  if (std::abs(empirical - target) > 3.0 * se) {
    c.fail("monte carlo " + fmt(empirical) + " vs " + fmt(target) +
           " (3 sigma = " + fmt(3.0 * se) + ")");
  }
}

void criterion_4_decoder_separation() {
  Criterion c(4, "decoder separation under z-on-control");
  const std::vector<double> grid = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
  const std::uint64_t shots = 100000;
  auto points = disagreement_experiment(grid, shots, 404);
  for (const DisagreementPoint& p : points) {
    if (p.calibrated_wrong_rate != 0.0) {
      c.fail("calibrated decoding corrected at lambda " + fmt(p.lambda));
    }
    double target = p.closed_form_target;
    double se = std::sqrt(target * (1.0 - target) / static_cast<double>(shots));
    if (std::abs(p.standard_wrong_rate - target) > 3.0 * se + 1e-12) {
      c.fail("standard rate " + fmt(p.standard_wrong_rate) + " vs " +
             fmt(target) + " at lambda " + fmt(p.lambda));
    }
  }
  c.note(std::to_string(grid.size()) + " lambda points, 1e5 shots each");
}

void criterion_5_depolarizing_exponents() {
  Criterion c(5, "depolarizing gamma/beta are integer powers of 1-lambda");
  NoisyCircuit base = build_parallel_extraction_steane();
  const std::vector<double> grid = {0.01, 0.05, 0.1, 0.15, 0.2};
  std::vector<int> gamma_fit(64, -1), beta_fit(64, -1);
  double worst = 0.0;
  for (double lambda : grid) {
    NoiseSpec spec{NoiseSpec::Kind::Depolarizing2, lambda};
    NoisyCircuit noisy = attach_noise(base, spec);
    f2::F2Function g = gamma_table(noisy);
    f2::F2Function b = beta_table(noisy);
    for (f2::word a = 0; a < 64; ++a) {
      for (auto [table, fit] : {std::pair{&g, &gamma_fit}, {&b, &beta_fit}}) {
        double value = (*table)[a];
        int k = a == 0 ? 0
                       : static_cast<int>(std::lround(std::log(value) /
                                                      std::log1p(-lambda)));
        if (k < 0) c.fail("negative exponent at a=" + fmt(a));
        double residual = std::abs(value - std::pow(1.0 - lambda, k));
        worst = std::max(worst, residual);
        if (residual > 1e-9) {
          c.fail("fit residual " + fmt(residual) + " at a=" + fmt(a));
        }
        if ((*fit)[a] < 0) {
          (*fit)[a] = k;
        } else if ((*fit)[a] != k) {
          c.fail("exponent not constant over lambda at a=" + fmt(a));
        }
      }
    }
  }
  int match_gamma = 0, match_beta = 0;
  for (f2::word a = 0; a < 64; ++a) {
    int idx = fixtures::word_to_list_index(a);
    match_gamma += gamma_fit[a] == fixtures::kGammaExponents[idx];
    match_beta += beta_fit[a] == fixtures::kBetaExponents[idx];
  }
  c.note("residual " + fmt(worst) + ", published-list matches gamma " +
         std::to_string(match_gamma) + "/64, beta " +
         std::to_string(match_beta) + "/64");
}

void criterion_6_appendix_theorem() {
  Criterion c(6, "appendix theorem, Eq.-(12) beta_au and coset corollary");
  CounterRng rng(CounterRng::derive_key(606, 0));
  double worst_theorem = 0.0, worst_beta = 0.0, worst_coset = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng.next_u64() % 3);
    const int n = m + static_cast<int>(rng.next_u64() % (4 - m));
    const f2::word words = f2::word{1} << m;
    StabilizerCode code = random_code(rng, n, m);
    JointErrorDistribution dist = random_faulty(rng, n, m, 3 + m);
    InputState state(random_product_state(rng, n));
    OracleResult oracle = faulty_measurement_oracle(dist, state, code);
    BetaAuTable definitional = beta_au_definitional(dist, code);
    for (f2::word a = 0; a < words; ++a) {
      f2::F2Function f_a(m), g_a(m), h_a(m);
      for (f2::word x = 0; x < words; ++x) {
        f_a[x] = oracle.post_expectations[x][a] * oracle.outcome_distribution[x];
        g_a[x] = definitional.at(a, x);
        h_a[x] = state.expect(stabilizer_element(code, a ^ x));
      }
      worst_theorem = std::max(worst_theorem, verify_theorem(f_a, g_a, h_a));
      f2::F2Function recovered = theorem_g(f_a, h_a);
      for (f2::word u = 0; u < words; ++u) {
        worst_beta = std::max(worst_beta, std::abs(recovered[u] - g_a[u]));
      }
      auto fine = coset_coarsened_beta(f2::F2Subspace::zero(m), f_a, h_a);
      auto coarse = coset_coarsened_beta(f2::F2Subspace::full(m), f_a, h_a);
      double marginal = 0.0;
      for (f2::word u = 0; u < words; ++u) {
        marginal += g_a[u];
        worst_coset = std::max(worst_coset, std::abs(fine[u] - g_a[u]));
      }
      worst_coset = std::max(worst_coset, std::abs(coarse[0] - marginal));
    }
  }
  if (worst_theorem > 1e-9) c.fail("theorem residual " + fmt(worst_theorem));
  if (worst_beta > 1e-9) c.fail("beta_au deviation " + fmt(worst_beta));
  if (worst_coset > 1e-9) c.fail("coset deviation " + fmt(worst_coset));
  c.note("100 instances, residual " + fmt(worst_theorem) + ", beta_au " +
         fmt(worst_beta) + ", coset " + fmt(worst_coset));
}

void criterion_7_composition_law() {
  Criterion c(7, "twisted convolution matches sequential measurements");
  CounterRng rng(CounterRng::derive_key(707, 0));
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    StabilizerCode both = random_code(rng, 2, 2);
    StabilizerCode first_code({both.generators()[0]}, {}, {});
    StabilizerCode second_code({both.generators()[1]}, {}, {});
    JointErrorDistribution p = random_faulty(rng, 2, 1, 4);
    JointErrorDistribution q = random_faulty(rng, 2, 1, 4);
    InputState state(random_product_state(rng, 2));
    JointErrorDistribution composed =
        compose_faulty(q, p, second_code.generators());
    OracleResult combined = faulty_measurement_oracle(composed, state, both);
    f2::F2Function sequential =
        density_sequential_faulty(p, first_code, q, second_code, state);
    for (f2::word xy = 0; xy < 4; ++xy) {
      worst = std::max(worst, std::abs(combined.outcome_distribution[xy] -
                                       sequential[xy]));
    }
  }
  if (worst > 1e-9) c.fail("max deviation " + fmt(worst));
  c.note("50 instances, max dev " + fmt(worst));
}

void criterion_8_engine_triangle() {
  Criterion c(8, "spectral, forward and density engines agree");
  CounterRng rng(CounterRng::derive_key(808, 0));
  double worst_pair = 0.0, worst_oracle = 0.0;
  int queries = 0;
  while (queries < 100) {
    const int n_data = 2 + static_cast<int>(rng.next_u64() % 3);
    const int max_m = std::min(n_data, 8 - n_data);
    const int m = 1 + static_cast<int>(rng.next_u64() %
                                       static_cast<std::uint64_t>(std::min(3, max_m)));
    NoisyCircuit circuit = random_circuit(rng, n_data, m);
    JointErrorDistribution joint = exact_joint_distribution(circuit);
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
    InputState state(random_product_state(rng, n_data));
    auto noisy_leaves = density_leaves(circuit, state);
    auto clean_leaves = density_leaves(noiseless, state);
    const std::uint64_t qmask = (1ull << n_data) - 1;
    for (int k = 0; k < 10 && queries < 100; ++k, ++queries) {
      Pauli q(n_data, rng.next_u64() & qmask, rng.next_u64() & qmask, 0);
      f2::word b = static_cast<f2::word>(rng.next_u64()) & ((1u << m) - 1);
      SpectralQuery query(q, b);
      double lam = spectral_coefficient(circuit, query);
      double fwd = 0.0;
      for (const auto& [key, prob] : joint.entries()) {
        int sign =
            pairing(joint.error_of(key), q) ^ f2::dot(joint.flips_of(key), b);
        fwd += sign ? -prob : prob;
      }
      worst_pair = std::max(worst_pair, std::abs(lam - fwd));
      double m_noisy =
          joint_coefficient_from_leaves(noisy_leaves, query, circuit.n_total());
      double c_ref =
          joint_coefficient_from_leaves(clean_leaves, query, circuit.n_total());
      worst_oracle = std::max(worst_oracle, std::abs(m_noisy - lam * c_ref));
    }
  }
  if (worst_pair > 1e-9) c.fail("spectral vs forward " + fmt(worst_pair));
  if (worst_oracle > 1e-9) c.fail("engines vs oracle " + fmt(worst_oracle));
  c.note("100 queries, spectral/forward dev " + fmt(worst_pair) +
         ", oracle dev " + fmt(worst_oracle));
}

void criterion_9_measurement_noise_recovery() {
  Criterion c(9, "5% measurement-flip correction recovers 1");
  StabilizerCode code = steane();
  NoiseSpec mf{NoiseSpec::Kind::MeasFlip, 0.05};
  const std::uint64_t shots = 10000;
  double worst_analytic = 0.0;
  for (int gen : {3, 4, 5}) {
    NoisyCircuit noisy = attach_noise(build_single_generator_extraction(code, gen), mf);
    CalibrationReport analytic = analytic_calibration(noisy);
    double corrected = corrected_expectation(1, *analytic.gamma[1], analytic);
    worst_analytic = std::max(worst_analytic, std::abs(corrected - 1.0));

    // Empirical path: calibrate on two-round shots, estimate on fresh ones.
    InputState zeros{ProductState::zeros(7)};
    JointErrorDistribution joint = exact_joint_distribution(noisy);
    f2::F2Function e0(1, 1.0);
    auto records = sample_shots(joint, zeros, noisy.code(), shots,
                                CounterRng::derive_key(909, 2 * gen), 2);
    CalibrationReport report = estimate_factors(records, e0, 1);
    f2::F2Function pt = noisy_outcome_distribution(joint, zeros, noisy.code());
    auto estimation = sample_words(pt, shots, CounterRng::derive_key(909, 2 * gen + 1));
    double measured = 0.0;
    for (f2::word w : estimation) measured += w ? -1.0 : 1.0;
    measured /= static_cast<double>(shots);
    double corrected_emp = corrected_expectation(1, measured, report);
    double se_meas =
        std::sqrt(std::max(0.0, (1.0 - measured * measured) /
                                    static_cast<double>(shots)));
    double se = std::sqrt(std::pow(*report.alpha[1] * se_meas, 2) +
                          std::pow(measured * report.alpha_se[1], 2));
    if (std::abs(corrected_emp - 1.0) > 3.0 * se) {
      c.fail("empirical corrected " + fmt(corrected_emp) + " for S" +
             std::to_string(gen + 1) + " (3 sigma = " + fmt(3.0 * se) + ")");
    }
  }
  if (worst_analytic > 1e-12) {
    c.fail("analytic deviation " + fmt(worst_analytic));
  }
  c.note("analytic dev " + fmt(worst_analytic) + ", 1e4 shots empirically");
}

void criterion_10_channel_estimation_ordering() {
  Criterion c(10, "calibrated channel estimate at least as close as raw");
  ScenarioConfig config;
  config.noise = "depolarizing2:lambda=0.1";
  config.state = "calibration";
  config.lambdas = {0.02, 0.05, 0.1, 0.15, 0.2};
  double worst_gap = 0.0;
  for (double lambda : config.lambdas) {
    Scenario sc = build_scenario(config, lambda);
    CalibrationReport report = analytic_calibration(sc.circuit);
    ChannelEstimate raw = [&]() {
      std::array<std::array<double, 7>, 3> eigs{};
      const char bases[3] = {'X', 'Y', 'Z'};
      for (int bi = 0; bi < 3; ++bi) {
        auto idx = element_indices(bases[bi]);
        for (int i = 0; i < 7; ++i) eigs[bi][i] = *report.gamma[idx[i]];
      }
      return estimate_channel_pipeline(eigs[0], eigs[1], eigs[2]);
    }();
    ChannelEstimate calibrated = [&]() {
      std::array<std::array<double, 7>, 3> eigs{};
      const char bases[3] = {'X', 'Y', 'Z'};
      for (int bi = 0; bi < 3; ++bi) {
        auto idx = element_indices(bases[bi]);
        for (int i = 0; i < 7; ++i) eigs[bi][i] = *report.beta[idx[i]];
      }
      return estimate_channel_pipeline(eigs[0], eigs[1], eigs[2]);
    }();
    ChannelEstimate reference = [&]() {
      const int n = 7;
      ChannelEstimate ref;
      for (int q = 0; q < n; ++q) {
        double cx = spectral_coefficient(
            sc.circuit, SpectralQuery(Pauli::single(n, q, 'X'), 0));
        double cy = spectral_coefficient(
            sc.circuit, SpectralQuery(Pauli::single(n, q, 'Y'), 0));
        double cz = spectral_coefficient(
            sc.circuit, SpectralQuery(Pauli::single(n, q, 'Z'), 0));
        ref.qubits.push_back({std::max(0.25 * (1 + cx + cy + cz), 0.0),
                              std::max(0.25 * (1 + cx - cy - cz), 0.0),
                              std::max(0.25 * (1 - cx + cy - cz), 0.0),
                              std::max(0.25 * (1 - cx - cy + cz), 0.0)});
      }
      return ref;
    }();
    double db_raw = bhattacharyya(raw, reference);
    double db_cal = bhattacharyya(calibrated, reference);
    if (db_cal > db_raw + 1e-12) {
      c.fail("ordering violated at lambda " + fmt(lambda) + ": " + fmt(db_cal) +
             " > " + fmt(db_raw));
    }
    worst_gap = std::max(worst_gap, db_raw - db_cal);
  }
  // Small-lambda limit: db_calibrated decays linearly to zero (the
  // product-form fit differs from the product-projected reference at first
  // order while the channel is correlated).
  {
    std::vector<double> decay;
    for (double lambda : {1e-3, 1e-4, 1e-5}) {
      ScenarioConfig tiny = config;
      tiny.lambdas = {lambda};
      std::string csv = cmd_estimate_channel(tiny)[0].second;
      decay.push_back(std::stod(csv.substr(csv.rfind(',') + 1)));
    }
    if (!(decay[0] > decay[1] && decay[1] > decay[2])) {
      c.fail("db_calibrated does not decrease toward zero");
    }
    if (decay[2] > 1e-4) c.fail("db_calibrated(1e-5) = " + fmt(decay[2]));
    if (decay[2] > 0.05 * decay[0]) {
      c.fail("db_calibrated decays too slowly: " + fmt(decay[2]) + " vs " +
             fmt(decay[0]));
    }
    c.note("ordering gap up to " + fmt(worst_gap) + ", db_cal decay " +
           fmt(decay[0]) + " -> " + fmt(decay[2]));
  }
}

void criterion_11_golden_tables() {
  Criterion c(11, "golden generator, decode and D/H tables");
  StabilizerCode code = steane();
  for (int i = 0; i < 6; ++i) {
    if (to_string(code.generators()[i]) != fixtures::kSteaneGenerators[i]) {
      c.fail("generator " + std::to_string(i + 1));
    }
  }
  if (to_string(code.logical_x()[0]) != fixtures::kSteaneLogicalX ||
      to_string(code.logical_z()[0]) != fixtures::kSteaneLogicalZ) {
    c.fail("logical operators");
  }
  std::string rendered = fixtures::render_representative_table(decode_table(code));
  if (rendered != fixtures::kRepresentativeTable) c.fail("decode table");

  const double expected_d[7][7] = {
      {0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 1, 1, 1, 1, 0, 0},
      {1, 0, 1, 0, 1, 0, 1}, {1, 0, 1, 1, 0, 1, 0}, {1, 1, 0, 0, 1, 1, 0},
      {1, 1, 0, 1, 0, 0, 1}};
  const double expected_h[3][7] = {
      {0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}};
  for (int r = 0; r < 7; ++r) {
    for (int col = 0; col < 7; ++col) {
      if (d_matrix()[r][col] != expected_d[r][col]) c.fail("D matrix");
    }
  }
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 7; ++col) {
      if (hamming_matrix()[r][col] != expected_h[r][col]) c.fail("H matrix");
    }
  }
  double worst = 0.0;
  for (int r = 0; r < 7; ++r) {
    for (int col = 0; col < 7; ++col) {
      double acc = 0.0;
      for (int k = 0; k < 7; ++k) acc += d_matrix()[r][k] * d_matrix_inverse()[k][col];
      worst = std::max(worst, std::abs(acc - (r == col ? 1.0 : 0.0)));
    }
  }
  if (worst > 1e-12) c.fail("D inverse residual " + fmt(worst));
}

}  // namespace

int main() {
  std::printf("syndrocal acceptance suite\n");
  criterion_1_calibration_distribution();
  criterion_2_expectation_law();
  criterion_3_zcontrol_closed_form();
  criterion_4_decoder_separation();
  criterion_5_depolarizing_exponents();
  criterion_6_appendix_theorem();
  criterion_7_composition_law();
  criterion_8_engine_triangle();
  criterion_9_measurement_noise_recovery();
  criterion_10_channel_estimation_ordering();
  criterion_11_golden_tables();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
