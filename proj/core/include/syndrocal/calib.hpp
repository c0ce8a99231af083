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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syndrocal/channel.hpp"
#include "syndrocal/f2.hpp"
#include "syndrocal/two_round.hpp"

namespace syndrocal {

// Denominators whose magnitude falls below the guard make the dependent
// table entry undefined instead of exploding. Finite-shot estimates guard
// at 1e-6; exact-engine values are trustworthy down to 1e-13, which the
// strongly attenuated high-weight words of the z-control scenario need.
constexpr double kEmpiricalGuard = 1e-6;
constexpr double kAnalyticGuard = 1e-13;

// Calibration factors per stabilizer element index a:
//   gamma = E1~ / E0   (outcome-flip attenuation)
//   beta  = E2~ / E1~  (propagated-error attenuation)
//   alpha = beta / gamma
// Entries are nullopt where a division guard tripped.
struct CalibrationReport {
  enum class Provenance { Analytic, Empirical };

  int m = 0;
  Provenance provenance = Provenance::Analytic;
  std::uint64_t shots = 0;

  std::vector<std::optional<double>> gamma, beta, alpha;
  std::vector<double> gamma_se, beta_se, alpha_se;

  double division_guard() const {
    return provenance == Provenance::Analytic ? kAnalyticGuard : kEmpiricalGuard;
  }

  static CalibrationReport make(int m, Provenance provenance);
};

// Analytic estimate from the exact two-round joint distribution q(x, y).
// ideal_expectations[a] must hold E0(a) of the known input state.
CalibrationReport estimate_factors(const f2::F2Function& two_round_joint,
                                   const f2::F2Function& ideal_expectations);

// Empirical estimate from two-round shot records; standard errors follow
// first-order ratio propagation with the round covariance included.
CalibrationReport estimate_factors(const std::vector<ShotRecord>& records,
                                   const f2::F2Function& ideal_expectations,
                                   int m);

// alpha(a) * measured; the corrected expectation of Eq.-style calibration.
double corrected_expectation(f2::word a, double measured,
                             const CalibrationReport& report);

// p(x|rho) = 2^-m sum_a (-1)^(a.x) gamma(a)^-1 Etilde(a). Throws on any
// |gamma| below the division guard, naming the offending index.
f2::F2Function recover_ideal_distribution(const f2::F2Function& measured_expectations,
                                          const CalibrationReport& report);

// Table of beta_{S(a), u} = sum_e P(e,u) (-1)^((S(a), e)).
struct BetaAuTable {
  int m = 0;
  std::vector<double> value;  // indexed a | u << m
  std::vector<double> se;     // empty in the analytic path

  double at(f2::word a, f2::word u) const { return value[a | (u << m)]; }
};

// Definitional evaluation from the internal distribution.
BetaAuTable beta_au_definitional(const JointErrorDistribution& dist,
                                 const StabilizerCode& code);

// g_a = F^-1[ F[f_a] / h_a ], the statistics-side evaluation. f_a(x) is
// E(a|rho_x) ptilde(x|rho) and h_a(b) = E(a^b|rho). Throws when some
// |h_a(b)| falls below the guard.
f2::F2Function theorem_g(const f2::F2Function& f_a, const f2::F2Function& h_a,
                         double guard = kEmpiricalGuard);

// f_a for every a from the exact two-round joint: f_a(x) =
// (1/gamma(a)) sum_y q(x,y) (-1)^(a.y). Rows with undefined gamma throw.
f2::F2Function conditional_f(const f2::F2Function& two_round_joint,
                             const CalibrationReport& report, f2::word a);

// Full beta_{a,u} table recovered from two-round statistics.
BetaAuTable beta_au_from_two_round(const f2::F2Function& two_round_joint,
                                   const CalibrationReport& report,
                                   const f2::F2Function& ideal_expectations);

// Empirical beta_{a,u} from shot records, with first-order standard
// errors (gamma and the ideal expectations treated as fixed).
BetaAuTable beta_au_empirical(const std::vector<ShotRecord>& records,
                              const CalibrationReport& report,
                              const f2::F2Function& ideal_expectations);

// Conditional expectation <S(a)>_{rho_x} from noisy data:
// (1/ptilde(x)) sum_u (-1)^(a.(x^u)) p(x^u|rho) beta_{a,u}.
double conditional_expectation(f2::word a, f2::word x,
                               const f2::F2Function& ideal_distribution,
                               const BetaAuTable& beta,
                               const f2::F2Function& noisy_distribution);

// Coset-coarsened beta values E(a; P_[u]) P([u]) for the cosets of W,
// ordered as f2::cosets(W); the element index a is baked into f_a and h_a.
// W = {0} reproduces the beta_au row of a; W = F2^m the single marginal
// beta(a).
std::vector<double> coset_coarsened_beta(const f2::F2Subspace& w,
                                         const f2::F2Function& f_a,
                                         const f2::F2Function& h_a);

// Max-norm residual of f_a = g_a * F^-1[h_a]; a property-test primitive.
double verify_theorem(const f2::F2Function& f_a, const f2::F2Function& g_a,
                      const f2::F2Function& h_a);

}  // namespace syndrocal
