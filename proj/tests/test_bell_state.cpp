// Copyright 2026 Hashrep Contributors
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

#include "hashrep/bell_state.hpp"

#include <cmath>

#include <doctest.h>

#include "hashrep/rng.hpp"
#include "oracles.hpp"

using namespace hashrep;

namespace {

BellDiagonal random_state(Rng& rng) {
  double p[4];
  double sum = 0.0;
  for (auto& v : p) {
    v = -std::log(1.0 - rng.next_double());  // exponential, so the simplex is covered
    sum += v;
  }
  return BellDiagonal(p[0] / sum, p[1] / sum, p[2] / sum, p[3] / sum);
}

void check_close(const BellDiagonal& got, const std::array<double, 4>& want, double tol) {
  for (int i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(got.probs()[i] == doctest::Approx(want[i]).epsilon(0).scale(0).epsilon(tol));
  }
}

}  // namespace

TEST_CASE("entropy of pure and uniform states") {
  CHECK(entropy_bits(BellDiagonal::werner(1.0)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(entropy_bits(BellDiagonal(0.25, 0.25, 0.25, 0.25)) == doctest::Approx(2.0));
}

TEST_CASE("werner entropy closed form matches the high-precision golden value") {
  // Evaluated with 50-digit arithmetic and frozen to 15 digits.
  CHECK(werner_entropy(0.95) == doctest::Approx(0.365645082152014).epsilon(1e-13));
  CHECK(entropy_bits(BellDiagonal::werner(0.95)) ==
        doctest::Approx(0.365645082152014).epsilon(1e-13));
}

TEST_CASE("single-qubit depolarizing noise matches the density-matrix oracle") {
  const NoiseParams noise{0.9};
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const BellDiagonal s = random_state(rng);
    const auto direct = apply_ldn_one_qubit(s, noise);
    const auto want =
        oracle::bell_coefficients(oracle::depolarize(oracle::bell_density(s), 1, 2, 0.9));
    check_close(direct, want, 1e-12);
  }
}

TEST_CASE("identity channel leaves states unchanged") {
  Rng rng(5);
  const BellDiagonal s = random_state(rng);
  CHECK(apply_ldn_one_qubit(s, NoiseParams{1.0}) == s);
  CHECK(effective_input(s, NoiseParams{1.0}) == s);
}

TEST_CASE("perfect pair through one noisy qubit becomes Werner (1+3p)/4") {
  const auto out = apply_ldn_one_qubit(BellDiagonal::perfect(), NoiseParams{0.99});
  CHECK(out.fidelity() == doctest::Approx((1.0 + 3.0 * 0.99) / 4.0).epsilon(1e-14));
  // Error components equal: Werner form.
  CHECK(out.probs()[1] == doctest::Approx(out.probs()[2]).epsilon(1e-14));
  CHECK(out.probs()[2] == doctest::Approx(out.probs()[3]).epsilon(1e-14));
}

TEST_CASE("noise on both qubits of a perfect pair gives F = 0.985075") {
  const auto out = effective_input(BellDiagonal::perfect(), NoiseParams{0.99});
  CHECK(out.fidelity() == doctest::Approx(0.985075).epsilon(1e-12));
  CHECK(out.fidelity() == doctest::Approx((1.0 + 3.0 * 0.99 * 0.99) / 4.0).epsilon(1e-14));
}

TEST_CASE("effective input of Werner 0.95 under 1% noise") {
  const auto out = effective_input(BellDiagonal::werner(0.95), NoiseParams{0.99});
  const double q = (4.0 * 0.95 - 1.0) / 3.0 * 0.99 * 0.99;
  CHECK(twirl_to_werner(out).weight() == doctest::Approx(q).epsilon(1e-13));
  const auto want = oracle::bell_coefficients(oracle::depolarize(
      oracle::depolarize(oracle::bell_density(BellDiagonal::werner(0.95)), 0, 2, 0.99), 1, 2,
      0.99));
  check_close(out, want, 1e-12);
}

TEST_CASE("Werner weight is multiplicative under composed noise") {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const BellDiagonal s = random_state(rng);
    const double p1 = 0.5 + 0.5 * rng.next_double();
    const double p2 = 0.5 + 0.5 * rng.next_double();
    const auto twice = apply_ldn_one_qubit(apply_ldn_one_qubit(s, NoiseParams{p1}), NoiseParams{p2});
    const auto once = apply_ldn_one_qubit(s, NoiseParams{p1 * p2});
    check_close(twice, once.probs(), 1e-12);
  }
}

TEST_CASE("twirl preserves fidelity and fixes Werner states") {
  CHECK(twirl_to_werner(BellDiagonal(0.9, 0.05, 0.03, 0.02)).fidelity() == doctest::Approx(0.9));
  CHECK(twirl_to_werner(BellDiagonal(0.25, 0.25, 0.25, 0.25)).fidelity() ==
        doctest::Approx(0.25));
  const BellDiagonal w = BellDiagonal::werner(0.87);
  CHECK(twirl_to_werner(w).as_bell_diagonal() == w);
}

TEST_CASE("swap with a perfect pair is the identity") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const BellDiagonal s = random_state(rng);
    check_close(swap_pairs(BellDiagonal::perfect(), s), s.probs(), 1e-14);
    check_close(swap_pairs(s, BellDiagonal::perfect()), s.probs(), 1e-14);
  }
}

TEST_CASE("swap multiplies Werner weights and matches the projection oracle") {
  const BellDiagonal a = BellDiagonal::werner(0.93);
  const BellDiagonal b = BellDiagonal::werner(0.89);
  const auto out = swap_pairs(a, b);
  const double qa = (4.0 * 0.93 - 1.0) / 3.0;
  const double qb = (4.0 * 0.89 - 1.0) / 3.0;
  CHECK(twirl_to_werner(out).weight() == doctest::Approx(qa * qb).epsilon(1e-13));

  Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    const BellDiagonal x = random_state(rng);
    const BellDiagonal y = random_state(rng);
    const auto want = oracle::bell_coefficients(
        oracle::swap_via_projection(oracle::bell_density(x), oracle::bell_density(y)));
    check_close(swap_pairs(x, y), want, 1e-11);
  }
}

TEST_CASE("swap is commutative and associative") {
  Rng rng(99);
  for (int i = 0; i < 60; ++i) {
    const BellDiagonal a = random_state(rng);
    const BellDiagonal b = random_state(rng);
    const BellDiagonal c = random_state(rng);
    check_close(swap_pairs(a, b), swap_pairs(b, a).probs(), 1e-14);
    check_close(swap_pairs(swap_pairs(a, b), c), swap_pairs(a, swap_pairs(b, c)).probs(), 1e-13);
  }
}

TEST_CASE("iterated swap of perfect pairs stays perfect") {
  BellDiagonal s = BellDiagonal::perfect();
  for (int i = 0; i < 8; ++i) s = swap_pairs(s, BellDiagonal::perfect());
  CHECK(s.fidelity() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("every operation returns a normalized state") {
  Rng rng(1234);
  for (int i = 0; i < 200; ++i) {
    const BellDiagonal a = random_state(rng);
    const BellDiagonal b = random_state(rng);
    const NoiseParams noise{0.5 + 0.5 * rng.next_double()};
    for (const BellDiagonal& out :
         {apply_ldn_one_qubit(a, noise), effective_input(a, noise), swap_pairs(a, b),
          twirl_to_werner(a).as_bell_diagonal()}) {
      double sum = 0.0;
      for (double p : out.probs()) {
        CHECK(p >= 0.0);
        sum += p;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("constructor rejects invalid vectors") {
  CHECK_THROWS_AS(BellDiagonal(0.5, 0.5, 0.5, 0.5), std::logic_error);
  CHECK_THROWS_AS(BellDiagonal(-0.1, 0.4, 0.4, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(BellDiagonal::werner(1.5), std::invalid_argument);
}

TEST_CASE("Werner weight stays in range") {
  CHECK(WernerParams{1.0}.weight() == doctest::Approx(1.0));
  CHECK(WernerParams{0.0}.weight() == doctest::Approx(-1.0 / 3.0));
}
