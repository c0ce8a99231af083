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
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "syndrocal/f2.hpp"
#include "syndrocal/rng.hpp"

using namespace syndrocal;
using f2::F2Function;
using f2::F2Subspace;
using f2::word;

namespace {

F2Function random_function(CounterRng& rng, int m) {
  F2Function f(m);
  for (word x = 0; x < f.size(); ++x) f[x] = 2.0 * rng.next_double() - 1.0;
  return f;
}

// O(4^m) double-sum Walsh transform, the test oracle for the butterfly.
F2Function walsh_slow(const F2Function& f) {
  F2Function out(f.dim());
  for (word x = 0; x < f.size(); ++x) {
    for (word a = 0; a < f.size(); ++a) {
      out[x] += f2::dot(a, x) ? -f[a] : f[a];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("walsh on m=1 deltas and uniform") {
  F2Function delta = F2Function::delta(1, 0);
  F2Function wd = f2::walsh(delta);
  CHECK(wd[0] == doctest::Approx(1.0));
  CHECK(wd[1] == doctest::Approx(1.0));

  F2Function uniform(1, 0.5);
  F2Function wu = f2::walsh(uniform);
  CHECK(wu[0] == doctest::Approx(1.0));
  CHECK(wu[1] == doctest::Approx(0.0));
}

TEST_CASE("walsh twice is 2^m times the identity") {
  CounterRng rng(1);
  for (int m : {1, 2, 3, 7, 10}) {
    F2Function f = random_function(rng, m);
    F2Function ff = f2::walsh(f2::walsh(f));
    double scale = std::pow(2.0, m);
    for (word x = 0; x < f.size(); ++x) {
      CHECK(ff[x] == doctest::Approx(scale * f[x]).epsilon(1e-12));
    }
  }
}

TEST_CASE("walsh matches the double-sum oracle") {
  CounterRng rng(2);
  for (int m : {1, 3, 5}) {
    F2Function f = random_function(rng, m);
    F2Function fast = f2::walsh(f);
    F2Function slow = walsh_slow(f);
    for (word x = 0; x < f.size(); ++x) {
      CHECK(fast[x] == doctest::Approx(slow[x]).epsilon(1e-12));
    }
  }
}

TEST_CASE("walsh is linear") {
  CounterRng rng(3);
  F2Function f = random_function(rng, 4), g = random_function(rng, 4);
  const double a = 0.37, b = -1.25;
  F2Function combo(4);
  for (word x = 0; x < combo.size(); ++x) combo[x] = a * f[x] + b * g[x];
  F2Function lhs = f2::walsh(combo);
  F2Function wf = f2::walsh(f), wg = f2::walsh(g);
  for (word x = 0; x < combo.size(); ++x) {
    CHECK(lhs[x] == doctest::Approx(a * wf[x] + b * wg[x]).epsilon(1e-12));
  }
}

TEST_CASE("inverse_walsh examples") {
  // All-ones spectrum is the delta at zero.
  F2Function ones(2, 1.0);
  F2Function d = f2::inverse_walsh(ones);
  CHECK(d[0] == doctest::Approx(1.0));
  for (word x = 1; x < 4; ++x) CHECK(d[x] == doctest::Approx(0.0));

  // Spectrum (1, 1-2q) belongs to the distribution (1-q, q).
  const double q = 0.17;
  F2Function spectrum(1);
  spectrum[0] = 1.0;
  spectrum[1] = 1.0 - 2.0 * q;
  F2Function dist = f2::inverse_walsh(spectrum);
  CHECK(dist[0] == doctest::Approx(1.0 - q).epsilon(1e-14));
  CHECK(dist[1] == doctest::Approx(q).epsilon(1e-14));

  CounterRng rng(4);
  F2Function f = random_function(rng, 4);
  F2Function round = f2::inverse_walsh(f2::walsh(f));
  for (word x = 0; x < f.size(); ++x) {
    CHECK(round[x] == doctest::Approx(f[x]).epsilon(1e-12));
  }
}

TEST_CASE("convolution unit, uniform and spectral identity") {
  CounterRng rng(5);
  F2Function f = random_function(rng, 3);
  F2Function delta = F2Function::delta(3, 0);
  F2Function conv = f2::convolve(f, delta);
  for (word x = 0; x < f.size(); ++x) CHECK(conv[x] == doctest::Approx(f[x]));

  F2Function u = F2Function::uniform(2);
  F2Function uu = f2::convolve(u, u);
  for (word x = 0; x < 4; ++x) CHECK(uu[x] == doctest::Approx(0.25));

  F2Function g = random_function(rng, 3);
  F2Function lhs = f2::walsh(f2::convolve(f, g));
  F2Function wf = f2::walsh(f), wg = f2::walsh(g);
  for (word x = 0; x < f.size(); ++x) {
    CHECK(lhs[x] == doctest::Approx(wf[x] * wg[x]).epsilon(1e-10));
  }
}

TEST_CASE("convolution is commutative and associative") {
  CounterRng rng(6);
  for (int m : {2, 4}) {
    F2Function f = random_function(rng, m), g = random_function(rng, m),
               h = random_function(rng, m);
    F2Function fg = f2::convolve(f, g), gf = f2::convolve(g, f);
    for (word x = 0; x < f.size(); ++x) {
      CHECK(fg[x] == doctest::Approx(gf[x]).epsilon(1e-10));
    }
    F2Function left = f2::convolve(f2::convolve(f, g), h);
    F2Function right = f2::convolve(f, f2::convolve(g, h));
    for (word x = 0; x < f.size(); ++x) {
      CHECK(left[x] == doctest::Approx(right[x]).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(f2::convolve(F2Function(2), F2Function(3)),
                  std::invalid_argument);
}

TEST_CASE("distribution tagging validates instead of renormalizing") {
  F2Function ok(2);
  ok[0] = 0.25;
  ok[1] = 0.75;
  CHECK_NOTHROW(ok.require_distribution());
  F2Function negative(1);
  negative[0] = 1.5;
  negative[1] = -0.5;
  CHECK_THROWS_AS(negative.require_distribution(), std::domain_error);
  F2Function short_mass(1, 0.4);
  CHECK_THROWS_AS(short_mass.require_distribution(), std::domain_error);
}

TEST_CASE("cosets of the full and zero subspaces") {
  auto full = f2::cosets(F2Subspace::full(3));
  REQUIRE(full.size() == 1);
  CHECK(full[0].representative == 0);
  CHECK(full[0].members.size() == 8);

  auto zero = f2::cosets(F2Subspace::zero(3));
  REQUIRE(zero.size() == 8);
  for (word x = 0; x < 8; ++x) {
    CHECK(zero[x].representative == x);
    CHECK(zero[x].members == std::vector<word>{x});
  }
}

TEST_CASE("cosets of span{001,010} in F2^3") {
  F2Subspace w(3, {0b001, 0b010});
  auto cs = f2::cosets(w);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].representative == 0);
  CHECK(cs[0].members == std::vector<word>{0, 1, 2, 3});
  CHECK(cs[1].representative == 4);
  CHECK(cs[1].members == std::vector<word>{4, 5, 6, 7});
}

TEST_CASE("cosets partition the space") {
  CounterRng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int m = 2 + static_cast<int>(rng.next_u64() % 4);
    std::vector<word> basis;
    for (int i = 0; i < 3; ++i) {
      basis.push_back(static_cast<word>(rng.next_u64()) & ((word{1} << m) - 1));
    }
    F2Subspace w(m, basis);
    auto cs = f2::cosets(w);
    CHECK(cs.size() == (std::size_t{1} << (m - w.dim())));
    std::set<word> seen;
    for (const auto& c : cs) {
      CHECK(c.members.size() == (std::size_t{1} << w.dim()));
      CHECK(c.representative == c.members.front());
      for (word x : c.members) CHECK(seen.insert(x).second);
    }
    CHECK(seen.size() == (std::size_t{1} << m));
  }
}

TEST_CASE("perp basics and rank-nullity") {
  F2Subspace zero = F2Subspace::zero(3);
  CHECK(f2::perp(zero).dim() == 3);

  // span{11} is self-orthogonal in F2^2.
  F2Subspace diag(2, {0b11});
  F2Subspace p = f2::perp(diag);
  CHECK(p.dim() == 1);
  CHECK(p.contains(0b11));

  CounterRng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<word> basis;
    for (int i = 0; i < 4; ++i) {
      basis.push_back(static_cast<word>(rng.next_u64()) & 63);
    }
    F2Subspace w(6, basis);
    F2Subspace wp = f2::perp(w);
    CHECK(w.dim() + wp.dim() == 6);
    for (word b : w.basis()) {
      for (word c : wp.basis()) CHECK(f2::dot(b, c) == 0);
    }
  }
}

TEST_CASE("constructors validate their sizes") {
  CHECK_THROWS_AS(F2Function(0), std::invalid_argument);
  CHECK_THROWS_AS(F2Function(17), std::invalid_argument);
  CHECK_THROWS_AS(F2Function(2, std::vector<double>{1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(F2Subspace(3, {0b1000}), std::invalid_argument);
}
