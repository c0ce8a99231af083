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

#include "syndrocal/decode.hpp"

#include <cmath>
#include <stdexcept>

#include "syndrocal/calib.hpp"
#include "syndrocal/circuit.hpp"
#include "syndrocal/forward.hpp"
#include "syndrocal/scenario.hpp"
#include "syndrocal/states.hpp"
#include "syndrocal/two_round.hpp"

namespace syndrocal {

DecodeDecision standard_decode(f2::word x, const DecodeTable& table) {
  DecodeDecision d;
  d.mode = DecodeDecision::Mode::Standard;
  d.observed = x;
  d.chosen_syndrome = x;
  d.correction = table.correction(x);
  int m = 0;
  while ((std::size_t{1} << m) < table.size()) ++m;
  d.posterior = f2::F2Function::delta(m, x);
  return d;
}

DecodeDecision calibrated_decode(f2::word x, const f2::F2Function& cond,
                                 const DecodeTable& table) {
  if (table.size() != cond.size()) {
    throw std::invalid_argument("calibrated_decode: table/conditional mismatch");
  }
  if (std::abs(cond[0] - 1.0) > 1e-6) {
    throw std::invalid_argument("conditional expectations must have cond(0) = 1");
  }
  DecodeDecision d;
  d.mode = DecodeDecision::Mode::Calibrated;
  d.observed = x;
  d.posterior = f2::inverse_walsh(cond);

  double clipped = 0.0, total = 0.0;
  for (f2::word y = 0; y < d.posterior.size(); ++y) {
    if (d.posterior[y] < 0.0) {
      clipped -= d.posterior[y];
      d.posterior[y] = 0.0;
    }
    total += d.posterior[y];
  }
  if (total <= 0.0) {
    throw std::domain_error("calibrated_decode: posterior has no mass");
  }
  for (f2::word y = 0; y < d.posterior.size(); ++y) d.posterior[y] /= total;
  d.clipped_mass = clipped;

  f2::word best = 0;
  for (f2::word y = 1; y < d.posterior.size(); ++y) {
    if (d.posterior[y] > d.posterior[best]) best = y;
  }
  d.chosen_syndrome = best;
  d.correction = table.correction(best);
  return d;
}

double no_flip_probability(double lambda) {
  const double l = lambda;
  const double f1 = l - 1.0;
  const double f2 = 8.0 * l * l * l * l - 16.0 * l * l * l + 12.0 * l * l -
                    4.0 * l + 1.0;
  const double f3 = 16.0 * l * l * l * l - 24.0 * l * l * l + 16.0 * l * l -
                    4.0 * l + 1.0;
  return f1 * f1 * f1 * f1 * (f2 * f2) * (f3 * f3 * f3 * f3);
}

std::vector<DisagreementPoint> disagreement_experiment(
    const std::vector<double>& lambdas, std::uint64_t shots, std::uint64_t seed) {
  const NoisyCircuit base = build_parallel_extraction_steane();
  const DecodeTable table = decode_table(base.code());
  const InputState codeword{CodewordState(base.code())};
  const f2::word words = f2::word{1} << base.code().m();

  auto run_point = [&](double lambda) {
    NoiseSpec spec;
    spec.kind = NoiseSpec::Kind::ZControl;
    spec.param = lambda;
    NoisyCircuit noisy = attach_noise(base, spec);
    JointErrorDistribution joint = exact_joint_distribution(noisy);

    // Analytic calibration feeding the conditional expectations.
    f2::F2Function ideal_exp(base.code().m());
    for (f2::word a = 0; a < words; ++a) {
      ideal_exp[a] =
          expectation(codeword.codeword(), stabilizer_element(base.code(), a));
    }
    f2::F2Function q2 = two_round_joint(joint, codeword, base.code());
    CalibrationReport report = estimate_factors(q2, ideal_exp);
    BetaAuTable beta = beta_au_from_two_round(q2, report, ideal_exp);
    f2::F2Function ptilde = noisy_outcome_distribution(joint, codeword, base.code());
    f2::F2Function e1 = f2::walsh(ptilde);
    f2::F2Function recovered = recover_ideal_distribution(e1, report);

    // Pre-decide all 64 observable words.
    std::vector<bool> standard_wrong(words, false), calibrated_wrong(words, false);
    for (f2::word x = 0; x < words; ++x) {
      if (ptilde[x] <= 0.0) continue;
      standard_wrong[x] = !standard_decode(x, table).correction.is_identity_mask();
      f2::F2Function cond(base.code().m());
      for (f2::word a = 0; a < words; ++a) {
        cond[a] = conditional_expectation(a, x, recovered, beta, ptilde);
      }
      calibrated_wrong[x] =
          !calibrated_decode(x, cond, table).correction.is_identity_mask();
    }

    DisagreementPoint point;
    point.lambda = lambda;
    point.closed_form_target = 1.0 - no_flip_probability(lambda);
    std::uint64_t std_wrong = 0, cal_wrong = 0;
    auto samples = sample_words(ptilde, shots, seed);
    for (f2::word x : samples) {
      if (standard_wrong[x]) ++std_wrong;
      if (calibrated_wrong[x]) ++cal_wrong;
    }
    point.standard_wrong_rate = static_cast<double>(std_wrong) / shots;
    point.calibrated_wrong_rate = static_cast<double>(cal_wrong) / shots;
    point.standard_wrong_rate_se =
        std::sqrt(std::max(0.0, point.standard_wrong_rate *
                                    (1.0 - point.standard_wrong_rate) /
                                    static_cast<double>(shots)));
    return point;
  };

  return parallel_map<DisagreementPoint>(
      lambdas.size(), [&](std::size_t i) { return run_point(lambdas[i]); });
}

}  // namespace syndrocal
