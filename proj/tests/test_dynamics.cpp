#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "calogero/duality.hpp"
#include "calogero/dynamics.hpp"
#include "calogero/lax.hpp"

using namespace calogero;

namespace {

constexpr double kExact = 1e-12;

PhaseSpacePoint reference_point() { return PhaseSpacePoint({1.0, -1.0}, {0.0, 0.0}, 1.0); }

}  // namespace

TEST_CASE("H_1 flow translates every particle") {
  const auto pt = random_phase_point(3, 5, 1.7, 0.5);
  const auto moved = evolve(pt, 2.5, 1);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(std::abs(moved.q()[j] - (pt.q()[j] + 2.5)) <= 1e-10);
    CHECK(std::abs(moved.p()[j] - pt.p()[j]) <= 1e-10);
  }
}

TEST_CASE("H_2 flow at the reference point") {
  const auto at2 = evolve(reference_point(), 2.0, 2);
  CHECK(std::abs(at2.q()[0] - std::sqrt(2.0)) <= kExact);
  CHECK(std::abs(at2.q()[1] + std::sqrt(2.0)) <= kExact);

  const auto same = evolve(reference_point(), 0.0, 2);
  CHECK(same.q()[0] == 1.0);
  CHECK(same.p()[1] == 0.0);

  CHECK_THROWS_AS(evolve(reference_point(), 1.0, 0), KOutOfRange);
}

TEST_CASE("projection evolution") {
  for (const double t : {-10.0, -3.0, 0.0, 0.5, 2.0, 7.0, 10.0}) {
    const auto q = evolve_projection(reference_point(), t);
    const double expected = std::sqrt(1.0 + t * t / 4.0);
    CHECK(std::abs(q[0] - expected) <= kExact);
    CHECK(std::abs(q[1] + expected) <= kExact);
  }
  const PhaseSpacePoint free({2.0, 1.0, -1.0}, {1.0, 0.5, -0.5}, 0.0);
  const auto q = evolve_projection(free, 3.0);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(std::abs(q[j] - (free.q()[j] + 3.0 * free.p()[j])) <= kExact);
  // free particles 0 and 1 meet at t = -2
  CHECK_THROWS_AS(evolve_projection(free, -2.0), DegenerateSpectrum);
}

TEST_CASE("scattering data") {
  const ScatteringData ref = scattering_data(reference_point(), 1e4);
  CHECK(std::abs(ref.momenta[0] - 0.5) <= 1e-4);
  CHECK(std::abs(ref.momenta[1] + 0.5) <= 1e-4);

  const PhaseSpacePoint free({2.0, 1.0, -1.0}, {1.0, 0.5, -0.5}, 0.0);
  const ScatteringData fs = scattering_data(free, 1e4);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(std::abs(fs.momenta[j] - free.p()[j]) <= 1e-12);
    CHECK(std::abs(fs.offsets[j] - free.q()[j]) <= 1e-8);
  }

  const ScatteringData one = scattering_data(PhaseSpacePoint({0.3}, {-1.25}, 2.0), 1e4);
  CHECK(std::abs(one.momenta[0] + 1.25) <= 1e-12);
  CHECK_THROWS_AS(scattering_data(reference_point(), 0.0), ValidationError);
}

TEST_CASE("scattering momenta approach the actions in descending order") {
  for (const auto& s : oracle::sweep(51, 100, 1, 8, 5.0)) {
    const auto pt = random_phase_point(s.seed, s.n, s.g, 0.5);
    const auto aa = forward_map(pt);
    const auto lambda = aa.lambda();
    const ScatteringData data = scattering_data(pt, 1e4);
    for (std::size_t j = 0; j < s.n; ++j) REQUIRE(std::abs(data.momenta[j] - lambda[j]) <= 1e-3);
  }
}

TEST_CASE("every integral is conserved by every flow") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (const auto& s : oracle::sweep(53, 100, 1, 6, 3.0)) {
    const auto pt = random_phase_point(s.seed, s.n, s.g, 0.5);
    for (int m = 1; m <= static_cast<int>(s.n); ++m) {
      const auto moved = evolve(pt, time(rng), m);
      for (int k = 1; k <= static_cast<int>(s.n); ++k) {
        const double h = hamiltonian(pt, k);
        REQUIRE(std::abs(hamiltonian(moved, k) - h) <= 1e-9 * (1.0 + std::abs(h)));
      }
    }
  }
}

TEST_CASE("flows compose and commute") {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> time(-5.0, 5.0);
  for (const auto& s : oracle::sweep(55, 100, 1, 6, 3.0)) {
    const auto pt = random_phase_point(s.seed, s.n, s.g, 0.5);
    std::uniform_int_distribution<int> index(1, static_cast<int>(s.n));
    const int j = index(rng);
    const int k = index(rng);
    const double a = time(rng);
    const double b = time(rng);
    REQUIRE(oracle::relative_deviation(evolve(evolve(pt, a, k), b, k), evolve(pt, a + b, k)) <=
            1e-8);
    REQUIRE(oracle::relative_deviation(evolve(evolve(pt, a, j), b, k),
                                       evolve(evolve(pt, b, k), a, j)) <= 1e-8);
  }
}

TEST_CASE("angle-shift and projection evolution agree") {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (const auto& s : oracle::sweep(57, 200, 1, 8, 5.0)) {
    const auto pt = random_phase_point(s.seed, s.n, s.g, 0.5);
    const double t = time(rng);
    const auto shifted = evolve(pt, t, 2);
    const auto projected = evolve_projection(pt, t);
    REQUIRE(oracle::relative_deviation(shifted.q(), projected) <= 1e-8);
  }
}
