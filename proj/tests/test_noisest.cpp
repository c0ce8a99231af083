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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "syndrocal/code.hpp"
#include "syndrocal/density.hpp"
#include "syndrocal/noisest.hpp"
#include "syndrocal/random_instances.hpp"
#include "syndrocal/rng.hpp"
#include "syndrocal/states.hpp"

using namespace syndrocal;

TEST_CASE("the D matrix rows are stabilizer element supports") {
  const auto& d = d_matrix();
  const double row1[7] = {0, 0, 0, 1, 1, 1, 1};
  for (int c = 0; c < 7; ++c) CHECK(d[0][c] == row1[c]);

  // Rows 1, 2 and 4 form the Hamming parity check matrix.
  const auto& h = hamming_matrix();
  const int picks[3] = {0, 1, 3};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 7; ++c) CHECK(d[picks[r]][c] == h[r][c]);
  }

  // D D^-1 = identity.
  const auto& inv = d_matrix_inverse();
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 7; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 7; ++k) acc += d[r][k] * inv[k][c];
      CHECK(acc == doctest::Approx(r == c ? 1.0 : 0.0).epsilon(1e-12));
    }
  }

  // Each row is the support of its stabilizer element, in all three bases.
  StabilizerCode code = steane();
  for (char basis : {'X', 'Y', 'Z'}) {
    auto indices = element_indices(basis);
    for (int r = 0; r < 7; ++r) {
      Pauli s = stabilizer_element(code, indices[r]);
      for (int c = 0; c < 7; ++c) {
        bool in_support = ((s.x_mask | s.z_mask) >> c) & 1;
        CHECK(d[r][c] == (in_support ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("log-linear recovery inverts synthetic products") {
  // All ones in, all ones out.
  std::array<double, 7> ones;
  ones.fill(1.0);
  BlochRecovery rec = bloch_from_stabilizers(ones);
  for (int q = 0; q < 7; ++q) {
    CHECK(rec.values[q] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(rec.clipped[q]);
  }

  // Uniform per-qubit damping c: element expectations c^wt recover c.
  const double c = 0.93;
  std::array<double, 7> uniform;
  for (int r = 0; r < 7; ++r) uniform[r] = std::pow(c, 4.0);
  rec = bloch_from_stabilizers(uniform);
  for (int q = 0; q < 7; ++q) {
    CHECK(rec.values[q] == doctest::Approx(c).epsilon(1e-10));
  }

  // Arbitrary per-qubit values: synthesize products over the supports and
  // recover them.
  CounterRng rng(71);
  const auto& d = d_matrix();
  for (int trial = 0; trial < 20; ++trial) {
    std::array<double, 7> per_qubit;
    for (double& v : per_qubit) v = 0.7 + 0.3 * rng.next_double();
    std::array<double, 7> elements;
    for (int r = 0; r < 7; ++r) {
      elements[r] = 1.0;
      for (int q = 0; q < 7; ++q) {
        if (d[r][q] != 0.0) elements[r] *= per_qubit[q];
      }
    }
    rec = bloch_from_stabilizers(elements);
    for (int q = 0; q < 7; ++q) {
      CHECK(rec.values[q] == doctest::Approx(per_qubit[q]).epsilon(1e-10));
    }
  }

  // Nonpositive inputs are clipped and flagged.
  std::array<double, 7> bad = ones;
  bad[3] = -0.2;
  rec = bloch_from_stabilizers(bad);
  CHECK(rec.clipped[3]);
}

TEST_CASE("per-qubit damping recovered against the density oracle") {
  // Independent known channels on each qubit of the calibration state; the
  // element expectations divided by the input ones feed the recovery.
  StabilizerCode code = steane();
  InputState cal(calibration_state(7));
  DensityMatrix rho = DensityMatrix::from_state(cal, 7);
  std::array<double, 7> damping{};
  CounterRng rng(72);
  for (int q = 0; q < 7; ++q) {
    double py = 0.05 * rng.next_double();
    double pz = 0.05 * rng.next_double();
    // X expectation is damped by the Y and Z error weights.
    damping[q] = 1.0 - 2.0 * py - 2.0 * pz;
    PauliChannel ch({q}, {1.0 - py - pz, 0.0, py, pz});
    rho.apply_channel(ch);
  }
  auto indices = element_indices('X');
  std::array<double, 7> eigs{};
  for (int r = 0; r < 7; ++r) {
    Pauli s = stabilizer_element(code, indices[r]);
    eigs[r] = rho.expectation(s) / cal.expect(s);
  }
  BlochRecovery rec = bloch_from_stabilizers(eigs);
  for (int q = 0; q < 7; ++q) {
    CHECK(rec.values[q] == doctest::Approx(damping[q]).epsilon(1e-6));
  }
}

TEST_CASE("rates_from_bloch on the stated examples") {
  SingleQubitRates none = rates_from_bloch(1.0, 1.0, 1.0);
  CHECK(none.px == doctest::Approx(0.0));
  CHECK(none.py == doctest::Approx(0.0));
  CHECK(none.pz == doctest::Approx(0.0));

  const double q = 0.07;
  SingleQubitRates xflip = rates_from_bloch(1.0, 1.0 - 2.0 * q, 1.0 - 2.0 * q);
  CHECK(xflip.px == doctest::Approx(q).epsilon(1e-12));
  CHECK(xflip.py == doctest::Approx(0.0));
  CHECK(xflip.pz == doctest::Approx(0.0));

  const double lambda = 0.12, t = lambda / 2.0;
  SingleQubitRates dep = rates_from_bloch(1.0 - 2.0 * t, 1.0 - 2.0 * t, 1.0 - 2.0 * t);
  CHECK(dep.px == doctest::Approx(lambda / 4.0).epsilon(1e-12));
  CHECK(dep.py == doctest::Approx(lambda / 4.0).epsilon(1e-12));
  CHECK(dep.pz == doctest::Approx(lambda / 4.0).epsilon(1e-12));
}

TEST_CASE("clamp_renormalize clips and renormalizes") {
  SingleQubitRates valid{0.1, 0.2, 0.3, false};
  SingleQubitRates same = clamp_renormalize(valid);
  CHECK(same.px == doctest::Approx(0.1));
  CHECK(same.py == doctest::Approx(0.2));
  CHECK(same.pz == doctest::Approx(0.3));

  // (-0.01, 0.5, 0.2): p_id = 0.31, negative clipped, total 1.01.
  SingleQubitRates fixed = clamp_renormalize({-0.01, 0.5, 0.2, false});
  CHECK(fixed.px == doctest::Approx(0.0));
  CHECK(fixed.py == doctest::Approx(0.5 / 1.01).epsilon(1e-12));
  CHECK(fixed.pz == doctest::Approx(0.2 / 1.01).epsilon(1e-12));

  CounterRng rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    SingleQubitRates r{2.0 * rng.next_double() - 0.5,
                       2.0 * rng.next_double() - 0.5,
                       2.0 * rng.next_double() - 0.5, false};
    SingleQubitRates once = clamp_renormalize(r);
    SingleQubitRates twice = clamp_renormalize(once);
    CHECK(once.px == doctest::Approx(twice.px).epsilon(1e-12));
    CHECK(once.py == doctest::Approx(twice.py).epsilon(1e-12));
    CHECK(once.pz == doctest::Approx(twice.pz).epsilon(1e-12));
    double pid = 1.0 - once.px - once.py - once.pz;
    CHECK(pid >= -1e-12);
    CHECK(once.px >= 0.0);
  }
}

TEST_CASE("product channel marginals reproduce the inputs") {
  std::vector<SingleQubitRates> rates(3);
  rates[1] = {0.05, 0.02, 0.01, false};
  ChannelEstimate est = product_channel(rates);
  CHECK(est.qubits[0][0] == doctest::Approx(1.0));
  CHECK(est.qubits[1][1] == doctest::Approx(0.05));
  CHECK(est.qubits[1][0] == doctest::Approx(0.92));
  CHECK(est.qubits[2][0] == doctest::Approx(1.0));

  // Explicit 2-qubit expansion equals elementwise products.
  std::vector<SingleQubitRates> two = {{0.1, 0.0, 0.05, false},
                                       {0.0, 0.2, 0.0, false}};
  ChannelEstimate e2 = product_channel(two);
  double joint_xx = e2.qubits[0][1] * e2.qubits[1][1];
  CHECK(joint_xx == doctest::Approx(0.0));
  CHECK(e2.qubits[0][1] * e2.qubits[1][2] == doctest::Approx(0.1 * 0.2));
}

TEST_CASE("bhattacharyya distances") {
  CHECK(bhattacharyya(std::vector<double>{0.3, 0.7},
                      std::vector<double>{0.3, 0.7}) == doctest::Approx(0.0));
  CHECK(std::isinf(bhattacharyya(std::vector<double>{1.0, 0.0},
                                 std::vector<double>{0.0, 1.0})));
  CHECK(bhattacharyya(std::vector<double>{0.5, 0.5},
                      std::vector<double>{0.9, 0.1}) ==
        doctest::Approx(-std::log(std::sqrt(0.45) + std::sqrt(0.05)))
            .epsilon(1e-12));

  // Additivity over product factors.
  CounterRng rng(74);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.next_u64() % 6);
    ChannelEstimate p1, p2;
    double expected = 0.0;
    std::vector<double> flat1{1.0}, flat2{1.0};
    for (int q = 0; q < n; ++q) {
      std::array<double, 4> a{}, b{};
      double ta = 0.0, tb = 0.0;
      for (int i = 0; i < 4; ++i) {
        a[i] = 0.05 + rng.next_double();
        b[i] = 0.05 + rng.next_double();
        ta += a[i];
        tb += b[i];
      }
      for (int i = 0; i < 4; ++i) {
        a[i] /= ta;
        b[i] /= tb;
      }
      p1.qubits.push_back(a);
      p2.qubits.push_back(b);
      expected += bhattacharyya(std::vector<double>(a.begin(), a.end()),
                                std::vector<double>(b.begin(), b.end()));
    }
    CHECK(bhattacharyya(p1, p2) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("readout error mitigation inverts the transition matrix") {
  // Identity transition: unchanged.
  std::vector<std::vector<double>> id_cols = {{1.0, 0.0}, {0.0, 1.0}};
  std::vector<double> obs = {0.3, 0.7};
  auto out = rem_correct(obs, id_cols);
  CHECK(out[0] == doctest::Approx(0.3));
  CHECK(out[1] == doctest::Approx(0.7));

  // Symmetric flip q: exact recovery in the analytic path.
  const double q = 0.06;
  std::vector<std::vector<double>> flip_cols = {{1.0 - q, q}, {q, 1.0 - q}};
  std::vector<double> truth = {0.85, 0.15};
  std::vector<double> observed = {
      (1.0 - q) * truth[0] + q * truth[1],
      q * truth[0] + (1.0 - q) * truth[1]};
  out = rem_correct(observed, flip_cols);
  CHECK(out[0] == doctest::Approx(truth[0]).epsilon(1e-12));
  CHECK(out[1] == doctest::Approx(truth[1]).epsilon(1e-12));

  // k = 3 diagonally dominant random matrix: correction undoes application.
  CounterRng rng(75);
  const int dim = 8;
  std::vector<std::vector<double>> cols(dim, std::vector<double>(dim));
  for (int t = 0; t < dim; ++t) {
    double total = 0.0;
    for (int o = 0; o < dim; ++o) {
      cols[t][o] = (o == t ? 5.0 : 0.1) + 0.1 * rng.next_double();
      total += cols[t][o];
    }
    for (int o = 0; o < dim; ++o) cols[t][o] /= total;
  }
  std::vector<double> p(dim);
  double total = 0.0;
  for (double& v : p) {
    v = rng.next_double();
    total += v;
  }
  for (double& v : p) v /= total;
  std::vector<double> applied(dim, 0.0);
  for (int o = 0; o < dim; ++o) {
    for (int t = 0; t < dim; ++t) applied[o] += cols[t][o] * p[t];
  }
  auto recovered = rem_correct(applied, cols);
  for (int t = 0; t < dim; ++t) {
    CHECK(recovered[t] == doctest::Approx(p[t]).epsilon(1e-9));
  }

  // Singular matrix rejected.
  std::vector<std::vector<double>> singular = {{0.5, 0.5}, {0.5, 0.5}};
  CHECK_THROWS_AS(rem_correct(obs, singular), std::domain_error);
}

TEST_CASE("pipeline round trip at small rates") {
  CounterRng rng(76);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SingleQubitRates> truth(7);
    for (auto& r : truth) {
      r.px = 0.05 * rng.next_double();
      r.py = 0.05 * rng.next_double();
      r.pz = 0.05 * rng.next_double();
    }
    // Synthetic eigenvalues: products of per-qubit damping over supports.
    auto damping = [&](int q, char basis) {
      switch (basis) {
        case 'X':
          return 1.0 - 2.0 * (truth[q].py + truth[q].pz);
        case 'Y':
          return 1.0 - 2.0 * (truth[q].px + truth[q].pz);
        default:
          return 1.0 - 2.0 * (truth[q].px + truth[q].py);
      }
    };
    const auto& d = d_matrix();
    std::array<double, 7> ex{}, ey{}, ez{};
    for (int r = 0; r < 7; ++r) {
      ex[r] = ey[r] = ez[r] = 1.0;
      for (int q = 0; q < 7; ++q) {
        if (d[r][q] == 0.0) continue;
        ex[r] *= damping(q, 'X');
        ey[r] *= damping(q, 'Y');
        ez[r] *= damping(q, 'Z');
      }
    }
    ChannelEstimate est = estimate_channel_pipeline(ex, ey, ez);
    for (int q = 0; q < 7; ++q) {
      CHECK(est.qubits[q][1] == doctest::Approx(truth[q].px).epsilon(1e-6));
      CHECK(est.qubits[q][2] == doctest::Approx(truth[q].py).epsilon(1e-6));
      CHECK(est.qubits[q][3] == doctest::Approx(truth[q].pz).epsilon(1e-6));
    }
  }
}

TEST_CASE("product projection of a sparse error distribution") {
  std::vector<std::pair<Pauli, double>> errors;
  errors.emplace_back(Pauli::identity(2), 0.8);
  errors.emplace_back(pauli_from_string("XI"), 0.1);
  errors.emplace_back(pauli_from_string("XY"), 0.1);
  ChannelEstimate proj = product_projection(errors, 2);
  CHECK(proj.qubits[0][0] == doctest::Approx(0.8));
  CHECK(proj.qubits[0][1] == doctest::Approx(0.2));
  CHECK(proj.qubits[1][0] == doctest::Approx(0.9));
  CHECK(proj.qubits[1][2] == doctest::Approx(0.1));
}
