#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "ifm/protocols.hpp"

using namespace ifm;
using Catch::Matchers::WithinAbs;

namespace {

// Round-by-round enumeration of the repeated protocol to depth 64: geometric
// accumulation of the terminating probabilities.
struct RepeatedOracle {
  double p_success = 0.0;
  double p_failure = 0.0;
  double efficiency = 0.0;
};

RepeatedOracle enumerate_repeated(double reflectivity, int depth = 64) {
  const ProtocolOutcome single = ev_mine_test(reflectivity, true);
  const double d2 = single.distribution.prob("D2");
  const double expl = single.distribution.prob("explosion");
  const double d1 = single.distribution.prob("D1");
  RepeatedOracle result;
  double weight = 1.0;  // probability of having seen only D1 so far
  for (int round = 0; round < depth; ++round) {
    result.p_success += weight * d2;
    result.p_failure += weight * expl;
    weight *= d1;
  }
  result.efficiency = result.p_success / (result.p_success + result.p_failure);
  return result;
}

double zeno_closed_form(std::int64_t n) {
  const double c = std::cos(std::numbers::pi / (2.0 * static_cast<double>(n)));
  return std::pow(c, 2.0 * static_cast<double>(n));
}

}  // namespace

TEST_CASE("single shot at R=1/2 with the object present", "[protocols]") {
  const ProtocolOutcome out = ev_mine_test(0.5, true);
  CHECK_THAT(out.distribution.prob("explosion"), WithinAbs(0.5, 1e-12));
  CHECK_THAT(out.distribution.prob("D1"), WithinAbs(0.25, 1e-12));
  CHECK_THAT(out.distribution.prob("D2"), WithinAbs(0.25, 1e-12));
  CHECK_THAT(out.efficiency, WithinAbs(1.0 / 3.0, 1e-12));
  CHECK(out.rounds_expected == 1.0);
}

TEST_CASE("single shot at R=1/2 with the object absent", "[protocols]") {
  const ProtocolOutcome out = ev_mine_test(0.5, false);
  CHECK_THAT(out.distribution.prob("D1"), WithinAbs(1.0, 1e-12));
  CHECK(out.distribution.prob("D2") <= 1e-12);
  CHECK(out.distribution.probs.count("explosion") == 0);
  CHECK(out.efficiency == 0.0);  // nothing succeeded, nothing exploded
}

TEST_CASE("single shot closed form P(expl)=R, P(D2)=R(1-R), P(D1)=(1-R)^2", "[protocols]") {
  const ProtocolOutcome at_quarter = ev_mine_test(0.25, true);
  CHECK_THAT(at_quarter.distribution.prob("explosion"), WithinAbs(0.25, 1e-12));
  CHECK_THAT(at_quarter.distribution.prob("D2"), WithinAbs(0.1875, 1e-12));
  CHECK_THAT(at_quarter.distribution.prob("D1"), WithinAbs(0.5625, 1e-12));

  std::mt19937_64 rng(0xE7ULL);
  std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 100; ++i) {
    const double r = unit(rng);
    const ProtocolOutcome out = ev_mine_test(r, true);
    REQUIRE_THAT(out.distribution.prob("explosion"), WithinAbs(r, 1e-12));
    REQUIRE_THAT(out.distribution.prob("D2"), WithinAbs(r * (1.0 - r), 1e-12));
    REQUIRE_THAT(out.distribution.prob("D1"), WithinAbs((1.0 - r) * (1.0 - r), 1e-12));
  }
}

TEST_CASE("object-absent runs stay dark at D2 across a 99-point grid", "[protocols]") {
  for (int i = 1; i <= 99; ++i) {
    const double r = static_cast<double>(i) / 100.0;
    CHECK(ev_mine_test(r, false).distribution.prob("D2") <= 1e-12);
  }
}

TEST_CASE("single shot rejects degenerate and out-of-range reflectivity", "[protocols]") {
  CHECK_THROWS_AS(ev_mine_test(0.0, true), DegenerateNetworkError);
  CHECK_THROWS_AS(ev_mine_test(1.0, true), DegenerateNetworkError);
  CHECK_THROWS_AS(ev_mine_test(2.0, true), std::domain_error);
  CHECK_THROWS_AS(ev_mine_test(-0.5, true), std::domain_error);
}

TEST_CASE("repeated protocol matches the round enumeration oracle", "[protocols]") {
  const ProtocolOutcome half = repeated_ev(0.5);
  CHECK_THAT(half.efficiency, WithinAbs(1.0 / 3.0, 1e-12));
  CHECK_THAT(half.efficiency, WithinAbs(enumerate_repeated(0.5).efficiency, 1e-12));
  CHECK_THAT(half.rounds_expected, WithinAbs(4.0 / 3.0, 1e-12));
  CHECK_THAT(half.distribution.sum(), WithinAbs(1.0, 1e-12));

  CHECK_THAT(repeated_ev(0.1).efficiency, WithinAbs(0.9 / 1.9, 1e-12));

  std::mt19937_64 rng(0x2E9EA7ULL);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int i = 0; i < 50; ++i) {
    const double r = unit(rng);
    REQUIRE_THAT(repeated_ev(r).efficiency, WithinAbs(enumerate_repeated(r).efficiency, 1e-12));
  }
}

TEST_CASE("repeated efficiency decreases strictly in R and stays below 1/2", "[protocols]") {
  double previous = 0.5;
  for (int i = 1; i <= 999; ++i) {
    const double r = static_cast<double>(i) / 1000.0;
    const double eta = repeated_ev(r).efficiency;
    REQUIRE(eta < previous);
    REQUIRE(eta > 0.0);
    previous = eta;
  }
}

TEST_CASE("repeated efficiency climbs toward 1/2 as R shrinks", "[protocols]") {
  double previous = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double r = std::pow(10.0, -k);
    const double eta = repeated_ev(r).efficiency;
    CHECK(eta > previous);
    CHECK(eta < 0.5);
    previous = eta;
  }
  CHECK(previous >= 0.4999985);
}

TEST_CASE("one coupling stage sends everything into the absorber", "[protocols]") {
  const ProtocolOutcome out = zeno_ifm({1, true});
  CHECK_THAT(out.distribution.prob("explosion"), WithinAbs(1.0, 1e-12));
  CHECK(out.distribution.prob("safe") <= 1e-12);
  CHECK(out.distribution.prob("object_side") == 0.0);
}

TEST_CASE("ten coupling stages survive with cos^20(pi/20)", "[protocols]") {
  const ProtocolOutcome out = zeno_ifm({10, true});
  CHECK_THAT(out.distribution.prob("safe"), WithinAbs(0.780546069781141, 1e-12));
  CHECK_THAT(out.distribution.prob("safe"), WithinAbs(zeno_closed_form(10), 1e-12));
}

TEST_CASE("propagation tracks the closed form across stage counts", "[protocols]") {
  for (std::int64_t n : {1, 2, 3, 5, 10, 50, 100, 500, 1000})
    CHECK_THAT(zeno_ifm({n, true}).distribution.prob("safe"),
               WithinAbs(zeno_closed_form(n), 1e-10));
}

TEST_CASE("zeno survival grows strictly with the stage count", "[protocols]") {
  double previous = -1.0;
  for (std::int64_t n = 1; n <= 200; ++n) {
    const double safe = zeno_ifm({n, true}).distribution.prob("safe");
    REQUIRE(safe > previous);
    REQUIRE(safe < 1.0);
    previous = safe;
  }
}

TEST_CASE("a thousand stages push success and efficiency near 1", "[protocols]") {
  const ProtocolOutcome out = zeno_ifm({1000, true});
  CHECK(out.distribution.prob("safe") >= 0.997);
  CHECK(out.efficiency >= 0.997);
}

TEST_CASE("without the object the photon crosses over completely", "[protocols]") {
  const ProtocolOutcome out = zeno_ifm({25, false});
  CHECK(out.distribution.prob("object_side") >= 1.0 - 1e-12);
  CHECK(out.distribution.prob("safe") <= 1e-12);
  CHECK(out.distribution.probs.count("explosion") == 0);
}

TEST_CASE("zeno rejects non-positive stage counts", "[protocols]") {
  CHECK_THROWS_AS(zeno_ifm({0, true}), std::domain_error);
  CHECK_THROWS_AS(zeno_ifm({-3, true}), std::domain_error);
}

TEST_CASE("cavity with absorber keeps the photon left and absorbs little", "[protocols]") {
  const OutcomeDistribution dist = xray_cavity({0.001, 50, true});
  CHECK_THAT(dist.prob("left"), WithinAbs(std::pow(0.999, 50), 1e-12));
  CHECK_THAT(dist.prob("absorbed"), WithinAbs(1.0 - std::pow(0.999, 50), 1e-12));
  CHECK(dist.prob("left") >= 0.949);
  CHECK(dist.prob("left") <= 0.953);
  CHECK(dist.prob("right") <= 1e-6);
  CHECK_THAT(dist.sum(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("cavity without absorber walks the photon to the right", "[protocols]") {
  const OutcomeDistribution dist = xray_cavity({0.001, 50, false});
  const double theta = std::asin(std::sqrt(0.001));
  const double expected = std::pow(std::sin(50.0 * theta), 2.0);
  CHECK_THAT(dist.prob("right"), WithinAbs(expected, 1e-12));
  CHECK(dist.prob("right") >= 0.999);
  CHECK(dist.prob("absorbed") == 0.0);
}

TEST_CASE("cavity edge cases", "[protocols]") {
  const OutcomeDistribution still = xray_cavity({0.001, 0, true});
  CHECK(still.prob("left") == 1.0);
  CHECK(still.prob("right") == 0.0);
  CHECK(still.prob("absorbed") == 0.0);

  const OutcomeDistribution decoupled = xray_cavity({1e-12, 50, true});
  CHECK(decoupled.prob("left") >= 1.0 - 1e-9);

  CHECK_THROWS_AS(xray_cavity({0.0, 10, true}), std::domain_error);
  CHECK_THROWS_AS(xray_cavity({1.0, 10, true}), std::domain_error);
  CHECK_THROWS_AS(xray_cavity({-0.1, 10, true}), std::domain_error);
  CHECK_THROWS_AS(xray_cavity({0.5, -1, true}), std::domain_error);
}

TEST_CASE("weak-coupling absorption linearizes to N times the transmission", "[protocols]") {
  for (double t : {1e-5, 1e-4, 1e-3}) {
    for (std::int64_t n : {1, 5, 20}) {
      if (static_cast<double>(n) * t > 0.05) continue;
      const double absorbed = xray_cavity({t, n, true}).prob("absorbed");
      const double linear = static_cast<double>(n) * t;
      REQUIRE(std::abs(absorbed - linear) / linear <= 0.10);
    }
  }
}

TEST_CASE("cavity probabilities always sum to one", "[protocols]") {
  std::mt19937_64 rng(0xCA17ULL);
  std::uniform_real_distribution<double> log_t(-6.0, -0.05);
  for (int i = 0; i < 50; ++i) {
    const CavityConfig cfg{std::pow(10.0, log_t(rng)),
                           static_cast<std::int64_t>(rng() % 200), rng() % 2 == 0};
    REQUIRE_THAT(xray_cavity(cfg).sum(), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("efficiency helper covers the defined-zero and no-failure cases", "[protocols]") {
  OutcomeDistribution mixed;
  mixed.probs = {{"D2", 0.25}, {"explosion", 0.5}, {"D1", 0.25}};
  CHECK_THAT(efficiency(mixed, "D2", "explosion"), WithinAbs(1.0 / 3.0, 1e-12));

  OutcomeDistribution no_failure;
  no_failure.probs = {{"D2", 0.25}, {"D1", 0.75}};
  CHECK(efficiency(no_failure, "D2", "explosion") == 1.0);

  OutcomeDistribution nothing;
  nothing.probs = {{"D1", 1.0}};
  CHECK(efficiency(nothing, "D2", "explosion") == 0.0);
}
