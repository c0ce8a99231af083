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

#include "syndrocal/calib.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace syndrocal {

CalibrationReport CalibrationReport::make(int m, Provenance provenance) {
  CalibrationReport r;
  r.m = m;
  r.provenance = provenance;
  const std::size_t size = std::size_t{1} << m;
  r.gamma.assign(size, std::nullopt);
  r.beta.assign(size, std::nullopt);
  r.alpha.assign(size, std::nullopt);
  r.gamma_se.assign(size, 0.0);
  r.beta_se.assign(size, 0.0);
  r.alpha_se.assign(size, 0.0);
  return r;
}

namespace {

void fill_ratios(CalibrationReport& report, const f2::F2Function& e1,
                 const f2::F2Function& e2, const f2::F2Function& e0) {
  const double guard = report.division_guard();
  for (f2::word a = 0; a < e1.size(); ++a) {
    if (std::abs(e0[a]) >= guard) {
      report.gamma[a] = e1[a] / e0[a];
    }
    if (std::abs(e1[a]) >= guard) {
      report.beta[a] = e2[a] / e1[a];
    }
    if (report.gamma[a] && report.beta[a] &&
        std::abs(*report.gamma[a]) >= guard) {
      report.alpha[a] = *report.beta[a] / *report.gamma[a];
    }
  }
}

}  // namespace

CalibrationReport estimate_factors(const f2::F2Function& two_round_joint,
                                   const f2::F2Function& ideal_expectations) {
  if (two_round_joint.dim() % 2 != 0) {
    throw std::invalid_argument("two-round joint must have an even dimension");
  }
  const int m = two_round_joint.dim() / 2;
  if (ideal_expectations.dim() != m) {
    throw std::invalid_argument("ideal expectation table has wrong dimension");
  }
  two_round_joint.require_distribution(1e-9);
  CalibrationReport report =
      CalibrationReport::make(m, CalibrationReport::Provenance::Analytic);
  f2::F2Function e1 = f2::walsh(round_marginal(two_round_joint, m, 1));
  f2::F2Function e2 = f2::walsh(round_marginal(two_round_joint, m, 2));
  fill_ratios(report, e1, e2, ideal_expectations);
  return report;
}

CalibrationReport estimate_factors(const std::vector<ShotRecord>& records,
                                   const f2::F2Function& ideal_expectations,
                                   int m) {
  if (records.empty()) {
    throw std::invalid_argument("no shot records");
  }
  if (ideal_expectations.dim() != m) {
    throw std::invalid_argument("ideal expectation table has wrong dimension");
  }
  const double shots = static_cast<double>(records.size());
  CalibrationReport report =
      CalibrationReport::make(m, CalibrationReport::Provenance::Empirical);
  report.shots = records.size();

  f2::F2Function e1(m), e2(m), e12(m);
  for (const ShotRecord& rec : records) {
    if (!rec.has_y) {
      throw std::invalid_argument("calibration needs two-round records");
    }
    for (f2::word a = 0; a < e1.size(); ++a) {
      double s1 = f2::dot(a, rec.x) ? -1.0 : 1.0;
      double s2 = f2::dot(a, rec.y) ? -1.0 : 1.0;
      e1[a] += s1;
      e2[a] += s2;
      e12[a] += s1 * s2;
    }
  }
  for (f2::word a = 0; a < e1.size(); ++a) {
    e1[a] /= shots;
    e2[a] /= shots;
    e12[a] /= shots;
  }
  fill_ratios(report, e1, e2, ideal_expectations);

  for (f2::word a = 0; a < e1.size(); ++a) {
    const double v1 = std::max(0.0, (1.0 - e1[a] * e1[a]) / shots);
    const double v2 = std::max(0.0, (1.0 - e2[a] * e2[a]) / shots);
    const double cov = (e12[a] - e1[a] * e2[a]) / shots;
    if (report.gamma[a]) {
      report.gamma_se[a] = std::sqrt(v1) / std::abs(ideal_expectations[a]);
    }
    if (report.beta[a]) {
      // beta = m2/m1, first order in (dm1, dm2).
      const double b = *report.beta[a];
      double var = (v2 + b * b * v1 - 2.0 * b * cov) / (e1[a] * e1[a]);
      report.beta_se[a] = std::sqrt(std::max(0.0, var));
    }
    if (report.alpha[a]) {
      // alpha = E0 m2 / m1^2.
      const double e0 = ideal_expectations[a];
      const double d2 = e0 / (e1[a] * e1[a]);
      const double d1 = -2.0 * e0 * e2[a] / (e1[a] * e1[a] * e1[a]);
      double var = d2 * d2 * v2 + d1 * d1 * v1 + 2.0 * d1 * d2 * cov;
      report.alpha_se[a] = std::sqrt(std::max(0.0, var));
    }
  }
  return report;
}

double corrected_expectation(f2::word a, double measured,
                             const CalibrationReport& report) {
  if (a >= report.alpha.size() || !report.alpha[a]) {
    throw std::domain_error("correction factor undefined for element " +
                            std::to_string(a));
  }
  return *report.alpha[a] * measured;
}

f2::F2Function recover_ideal_distribution(
    const f2::F2Function& measured_expectations, const CalibrationReport& report) {
  if (measured_expectations.dim() != report.m) {
    throw std::invalid_argument("expectation table has wrong dimension");
  }
  f2::F2Function scaled(report.m);
  for (f2::word a = 0; a < scaled.size(); ++a) {
    if (!report.gamma[a] || std::abs(*report.gamma[a]) < report.division_guard()) {
      throw std::domain_error("gamma undefined or below guard at element " +
                              std::to_string(a));
    }
    scaled[a] = measured_expectations[a] / *report.gamma[a];
  }
  return f2::inverse_walsh(scaled);
}

BetaAuTable beta_au_definitional(const JointErrorDistribution& dist,
                                 const StabilizerCode& code) {
  if (dist.n() != code.n() || dist.m() != code.m()) {
    throw std::invalid_argument("beta_au: distribution does not match code");
  }
  const int m = dist.m();
  const f2::word words = f2::word{1} << m;
  BetaAuTable table;
  table.m = m;
  table.value.assign(std::size_t{1} << (2 * m), 0.0);
  for (const auto& [k, p] : dist.entries()) {
    const Pauli e = dist.error_of(k);
    const f2::word u = dist.flips_of(k);
    // (S(a), e) = Syn(e) . a by adjointness.
    const f2::word syn = syndrome_of(e, code);
    for (f2::word a = 0; a < words; ++a) {
      table.value[a | (u << m)] += f2::dot(syn, a) ? -p : p;
    }
  }
  return table;
}

f2::F2Function theorem_g(const f2::F2Function& f_a, const f2::F2Function& h_a,
                         double guard) {
  if (f_a.dim() != h_a.dim()) {
    throw std::invalid_argument("theorem_g: dimension mismatch");
  }
  f2::F2Function spectrum = f2::walsh(f_a);
  for (f2::word b = 0; b < h_a.size(); ++b) {
    if (std::abs(h_a[b]) < guard) {
      throw std::domain_error("h_a vanishes at " + std::to_string(b));
    }
    spectrum[b] /= h_a[b];
  }
  return f2::inverse_walsh(spectrum);
}

f2::F2Function conditional_f(const f2::F2Function& two_round_joint,
                             const CalibrationReport& report, f2::word a) {
  const int m = report.m;
  if (two_round_joint.dim() != 2 * m) {
    throw std::invalid_argument("conditional_f: joint has wrong dimension");
  }
  if (!report.gamma[a] || std::abs(*report.gamma[a]) < report.division_guard()) {
    throw std::domain_error("gamma undefined or below guard at element " +
                            std::to_string(a));
  }
  const f2::word words = f2::word{1} << m;
  f2::F2Function f(m);
  for (f2::word x = 0; x < words; ++x) {
    double acc = 0.0;
    for (f2::word y = 0; y < words; ++y) {
      double v = two_round_joint[x | (y << m)];
      acc += f2::dot(a, y) ? -v : v;
    }
    f[x] = acc / *report.gamma[a];
  }
  return f;
}

BetaAuTable beta_au_from_two_round(const f2::F2Function& two_round_joint,
                                   const CalibrationReport& report,
                                   const f2::F2Function& ideal_expectations) {
  const int m = report.m;
  const f2::word words = f2::word{1} << m;
  BetaAuTable table;
  table.m = m;
  table.value.assign(std::size_t{1} << (2 * m), 0.0);
  for (f2::word a = 0; a < words; ++a) {
    f2::F2Function f_a = conditional_f(two_round_joint, report, a);
    f2::F2Function h_a(m);
    for (f2::word b = 0; b < words; ++b) h_a[b] = ideal_expectations[a ^ b];
    f2::F2Function g_a = theorem_g(f_a, h_a, report.division_guard());
    for (f2::word u = 0; u < words; ++u) table.value[a | (u << m)] = g_a[u];
  }
  return table;
}

BetaAuTable beta_au_empirical(const std::vector<ShotRecord>& records,
                              const CalibrationReport& report,
                              const f2::F2Function& ideal_expectations) {
  const int m = report.m;
  const f2::word words = f2::word{1} << m;
  if (records.empty()) throw std::invalid_argument("no shot records");
  const double shots = static_cast<double>(records.size());

  BetaAuTable table;
  table.m = m;
  table.value.assign(std::size_t{1} << (2 * m), 0.0);
  table.se.assign(std::size_t{1} << (2 * m), 0.0);

  for (f2::word a = 0; a < words; ++a) {
    if (!report.gamma[a] ||
        std::abs(*report.gamma[a]) < report.division_guard()) {
      throw std::domain_error("gamma undefined or below guard at element " +
                              std::to_string(a));
    }
    const double gamma = *report.gamma[a];
    // Kernel K(x, u) = 2^-m sum_b (-1)^((u^x).b) / h_a(b); each shot
    // contributes sign(a.y) K(x, u) / gamma to entry (a, u).
    f2::F2Function inv_h(m);
    for (f2::word b = 0; b < words; ++b) {
      const double h = ideal_expectations[a ^ b];
      if (std::abs(h) < kEmpiricalGuard) {
        throw std::domain_error("h_a vanishes at " + std::to_string(b));
      }
      inv_h[b] = 1.0 / h;
    }
    // K as a function of (u ^ x) is the inverse Walsh transform of 1/h.
    f2::F2Function kernel = f2::inverse_walsh(inv_h);
    for (f2::word u = 0; u < words; ++u) {
      double mean = 0.0, mean_sq = 0.0;
      for (const ShotRecord& rec : records) {
        if (!rec.has_y) {
          throw std::invalid_argument("beta_au needs two-round records");
        }
        double w = (f2::dot(a, rec.y) ? -1.0 : 1.0) * kernel[u ^ rec.x] / gamma;
        mean += w;
        mean_sq += w * w;
      }
      mean /= shots;
      mean_sq /= shots;
      table.value[a | (u << m)] = mean;
      table.se[a | (u << m)] =
          std::sqrt(std::max(0.0, (mean_sq - mean * mean) / shots));
    }
  }
  return table;
}

double conditional_expectation(f2::word a, f2::word x,
                               const f2::F2Function& ideal_distribution,
                               const BetaAuTable& beta,
                               const f2::F2Function& noisy_distribution) {
  const int m = beta.m;
  if (ideal_distribution.dim() != m || noisy_distribution.dim() != m) {
    throw std::invalid_argument("conditional_expectation: dimension mismatch");
  }
  const double pt = noisy_distribution[x];
  if (pt <= 0.0) {
    throw std::domain_error("conditional expectation on outcome with no mass");
  }
  double acc = 0.0;
  const f2::word words = f2::word{1} << m;
  for (f2::word u = 0; u < words; ++u) {
    double term = ideal_distribution[x ^ u] * beta.at(a, u);
    acc += f2::dot(a, x ^ u) ? -term : term;
  }
  return acc / pt;
}

std::vector<double> coset_coarsened_beta(const f2::F2Subspace& w,
                                         const f2::F2Function& f_a,
                                         const f2::F2Function& h_a) {
  const int m = f_a.dim();
  if (w.ambient_dim() != m || h_a.dim() != m) {
    throw std::invalid_argument("coset_coarsened_beta: dimension mismatch");
  }
  const f2::F2Subspace wp = f2::perp(w);
  const std::vector<f2::Coset> cs = f2::cosets(w);
  const double scale =
      std::ldexp(1.0, w.dim() - m);  // 2^(k - m)

  // Coset sums of f_a.
  std::vector<double> coset_f(cs.size(), 0.0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (f2::word x : cs[i].members) coset_f[i] += f_a[x];
  }
  std::vector<f2::word> wp_elements = wp.elements();
  std::vector<double> out(cs.size(), 0.0);
  for (std::size_t ui = 0; ui < cs.size(); ++ui) {
    const f2::word u = cs[ui].representative;
    double acc = 0.0;
    for (f2::word b : wp_elements) {
      if (std::abs(h_a[b]) < kEmpiricalGuard) {
        throw std::domain_error("h_a vanishes at " + std::to_string(b));
      }
      double inner = 0.0;
      for (std::size_t xi = 0; xi < cs.size(); ++xi) {
        const f2::word x = cs[xi].representative;
        inner += f2::dot(u ^ x, b) ? -coset_f[xi] : coset_f[xi];
      }
      acc += inner / h_a[b];
    }
    out[ui] = scale * acc;
  }
  return out;
}

double verify_theorem(const f2::F2Function& f_a, const f2::F2Function& g_a,
                      const f2::F2Function& h_a) {
  f2::F2Function rhs = f2::convolve(g_a, f2::inverse_walsh(h_a));
  double residual = 0.0;
  for (f2::word x = 0; x < f_a.size(); ++x) {
    residual = std::max(residual, std::abs(f_a[x] - rhs[x]));
  }
  return residual;
}

}  // namespace syndrocal
