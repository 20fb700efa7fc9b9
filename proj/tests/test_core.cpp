#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"

#include "calogero/core.hpp"
#include "calogero/state_io.hpp"

using namespace calogero;

TEST_CASE("validate_phase_point accepts ordered positions") {
  const std::vector<double> q{1.0, -1.0};
  const std::vector<double> p{0.0, 0.0};
  const auto pt = validate_phase_point(q, p, 1.0);
  CHECK(pt.n() == 2);
  CHECK(pt.g() == 1.0);
  CHECK(pt.q()[0] == 1.0);

  // free case, g = 0 is allowed
  const std::vector<double> q3{3.0, 2.0, 1.0};
  const std::vector<double> p3{0.0, 0.0, 0.0};
  CHECK_NOTHROW(validate_phase_point(q3, p3, 0.0));
}

TEST_CASE("validate_phase_point rejects points outside the ordered domain") {
  const std::vector<double> coincident{0.0, 0.0};
  const std::vector<double> p{1.0, 2.0};
  CHECK_THROWS_AS(validate_phase_point(coincident, p, 1.0), OrderingViolation);

  const std::vector<double> ascending{-1.0, 1.0};
  CHECK_THROWS_AS(validate_phase_point(ascending, p, 1.0), OrderingViolation);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> bad_q{nan, 0.0};
  CHECK_THROWS_AS(validate_phase_point(bad_q, p, 1.0), NonFinite);
  const std::vector<double> bad_p{0.0, inf};
  const std::vector<double> q{1.0, 0.0};
  CHECK_THROWS_AS(validate_phase_point(q, bad_p, 1.0), NonFinite);
  CHECK_THROWS_AS(validate_phase_point(q, p, nan), NonFinite);

  const std::vector<double> empty;
  CHECK_THROWS_AS(validate_phase_point(empty, empty, 1.0), ValidationError);
  const std::vector<double> short_p{1.0};
  CHECK_THROWS_AS(validate_phase_point(q, short_p, 1.0), ValidationError);
}

TEST_CASE("action-angle points require strictly decreasing actions") {
  const std::vector<double> lambda{0.5, 0.5};
  const std::vector<double> phi{0.0, 0.0};
  CHECK_THROWS_AS(validate_action_angle_point(lambda, phi, 1.0), OrderingViolation);
  const std::vector<double> ok{0.5, -0.5};
  CHECK_NOTHROW(validate_action_angle_point(ok, phi, 1.0));
}

TEST_CASE("random_phase_point is deterministic and valid") {
  const auto a = random_phase_point(7, 3, 1.0, 0.5);
  const auto b = random_phase_point(7, 3, 1.0, 0.5);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(a.q()[j] == b.q()[j]);
    CHECK(a.p()[j] == b.p()[j]);
  }
  const auto single = random_phase_point(7, 1, 2.0, 1.0);
  CHECK(single.n() == 1);
  CHECK(std::isfinite(single.q()[0]));
  CHECK(std::isfinite(single.p()[0]));
  CHECK_THROWS_AS(random_phase_point(1, 0, 1.0, 0.5), ValidationError);
  CHECK_THROWS_AS(random_phase_point(1, 3, 1.0, 0.0), ValidationError);
}

TEST_CASE("random points validate for 1000 seeds and n = 1..8") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const double min_gap = 0.5;
      const auto pt = random_phase_point(seed, n, 1.5, min_gap);
      REQUIRE_NOTHROW(validate_phase_point(pt.q(), pt.p(), pt.g()));
      for (std::size_t j = 1; j < n; ++j) REQUIRE(pt.q()[j - 1] - pt.q()[j] >= min_gap);
      for (double x : pt.p()) REQUIRE(std::abs(x) <= kMomentumRange);
    }
  }
}

TEST_CASE("NumericConfig defaults and checks") {
  NumericConfig cfg;
  CHECK(cfg.eig_gap_tol == 1e-9);
  CHECK(cfg.fd_step == 1e-5);
  CHECK(cfg.identity_tol == 1e-10);
  CHECK_NOTHROW(cfg.check());
  cfg.fd_step = 1.0;
  CHECK_THROWS_AS(cfg.check(), ValidationError);
  cfg.fd_step = 1e-5;
  cfg.identity_tol = -1.0;
  CHECK_THROWS_AS(cfg.check(), ValidationError);
}

TEST_CASE("state files parse both variable pairs") {
  const State s = parse_state(R"({"n": 2, "g": 1, "q": [1, -1], "p": [0, 0]})");
  REQUIRE(std::holds_alternative<PhaseSpacePoint>(s));
  CHECK(std::get<PhaseSpacePoint>(s).q()[1] == -1.0);

  const State a = parse_state(R"({"n": 2, "g": 1, "lambda": [0.5, -0.5], "phi": [0, 0]})");
  REQUIRE(std::holds_alternative<ActionAnglePoint>(a));
  CHECK(std::get<ActionAnglePoint>(a).lambda()[0] == 0.5);

  CHECK(dump_state(s) == R"({"n":2,"g":1.0,"q":[1.0,-1.0],"p":[0.0,0.0]})");
}

TEST_CASE("state files reject schema violations") {
  CHECK_THROWS_AS(parse_state(R"({"n": 2, "g": 1, "q": [1, -1]})"), ValidationError);
  CHECK_THROWS_AS(parse_state(R"({"n": 3, "g": 1, "q": [1, -1], "p": [0, 0]})"), ValidationError);
  CHECK_THROWS_AS(
      parse_state(R"({"n": 2, "g": 1, "q": [1, -1], "p": [0, 0], "lambda": [1, 0], "phi": [0, 0]})"),
      ValidationError);
  CHECK_THROWS_AS(parse_state(R"({"n": 2, "g": 1, "q": [-1, 1], "p": [0, 0]})"), OrderingViolation);
  CHECK_THROWS_AS(parse_state(R"({"g": 1, "q": [1], "p": [0]})"), ValidationError);
  CHECK_THROWS_AS(parse_state(R"([1, 2])"), ValidationError);
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    parse_state("{\n  \"n\": 2,\n  \"g\": ,\n}");
    FAIL("expected MalformedInput");
  } catch (const MalformedInput& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("state serialization round-trips finite doubles bit for bit") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<double> q(n);
    std::vector<double> p(n);
    // Random bit patterns cover subnormals and extreme exponents.
    for (std::size_t j = 0; j < n; ++j) {
      double x;
      do {
        x = std::bit_cast<double>(rng());
      } while (!std::isfinite(x));
      p[j] = x;
      q[j] = (j == 0) ? std::ldexp(static_cast<double>(rng() >> 11), -40)
                      : q[j - 1] - 1e-3 - std::ldexp(static_cast<double>(rng() >> 11), -50);
    }
    const double g = std::bit_cast<double>(rng() & 0x7fefffffffffffffULL);
    const PhaseSpacePoint pt(q, p, g);
    const State back = parse_state(dump_state(pt));
    const auto& r = std::get<PhaseSpacePoint>(back);
    REQUIRE(std::bit_cast<std::uint64_t>(r.g()) == std::bit_cast<std::uint64_t>(g));
    for (std::size_t j = 0; j < n; ++j) {
      REQUIRE(std::bit_cast<std::uint64_t>(r.q()[j]) == std::bit_cast<std::uint64_t>(q[j]));
      REQUIRE(std::bit_cast<std::uint64_t>(r.p()[j]) == std::bit_cast<std::uint64_t>(p[j]));
    }
  }
}
