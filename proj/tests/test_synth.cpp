#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sscale/error.hpp"
#include "sscale/scaling_model.hpp"
#include "sscale/synth.hpp"
#include "test_helpers.hpp"

using namespace sscale;
using sscale::testing::geometric_ladder;

TEST_CASE("noise-free generation is seed-independent") {
  CostModel m;
  m.compute_coeff = 1e-8;
  m.overhead = 1e-3;
  m.seed = 1;
  const auto a = generate(m, 100000000, {1, 2, 4, 8});
  m.seed = 999;
  const auto b = generate(m, 100000000, {1, 2, 4, 8});
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].t_step == b.records[i].t_step);
  }
}

TEST_CASE("seeded noise is reproducible and seed-sensitive") {
  CostModel m;
  m.compute_coeff = 1e-8;
  m.overhead = 1e-3;
  m.noise_rel = 0.01;
  m.seed = 42;
  const auto a = generate(m, 100000000, {1, 2, 4, 8});
  const auto b = generate(m, 100000000, {1, 2, 4, 8});
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].t_step == b.records[i].t_step);
  }
  m.seed = 43;
  const auto c = generate(m, 100000000, {1, 2, 4, 8});
  bool any_different = false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    if (a.records[i].t_step != c.records[i].t_step) any_different = true;
    // and the noise stays inside the +/- noise_rel band
    const double clean =
        model_tstep(CostModel{1e-8, 1e-3, 0.0, 0.0, 0}, 1e8,
                    double(a.records[i].ranks));
    CHECK(std::abs(c.records[i].t_step / clean - 1.0) <= 0.01);
  }
  CHECK(any_different);
}

TEST_CASE("a pure compute model scales perfectly") {
  CostModel m;
  m.compute_coeff = 1e-8;
  const std::int64_t n = std::int64_t(1) << 26;  // dyadic: eta is exact
  const auto s = generate(m, n, {1, 2, 4, 8, 16, 32});
  for (const auto& p : efficiency_series(s)) {
    CHECK(p.eta == 1.0);
  }
}

TEST_CASE("a fixed-overhead model decays like 1/P at scale") {
  CostModel m;
  m.compute_coeff = 1e-12;
  m.overhead = 0.01;
  const std::int64_t n = 100000000;
  const auto s = generate(m, n, {1, 1024, 4096, 16384});
  const auto pts = efficiency_series(s);
  const double anchor_cost = 1.0 * s.anchor().t_step;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double limit = anchor_cost / (double(pts[i].ranks) * m.overhead);
    CHECK(pts[i].eta == doctest::Approx(limit).epsilon(0.01));
  }
}

TEST_CASE("generator matches the closed-form model") {
  CostModel m;
  m.compute_coeff = 1e-8;
  m.log2_coeff = 1e-3;
  const std::int64_t n = 100000000;
  const auto s = generate(m, n, {8, 16, 32, 64, 128});
  const auto pts = efficiency_series(s);
  const double t8 = 1e-8 * (1e8 / 8.0) + 1e-3 * std::log2(8.0);
  for (const auto& p : pts) {
    const double t = 1e-8 * (1e8 / double(p.ranks)) +
                     1e-3 * std::log2(double(p.ranks));
    CHECK(p.t_step == doctest::Approx(t).epsilon(1e-12));
    CHECK(p.eta ==
          doctest::Approx(8.0 * t8 / (double(p.ranks) * t)).epsilon(1e-12));
  }
}

TEST_CASE("generate validates its inputs") {
  CostModel m;
  m.compute_coeff = 1e-8;
  CHECK_THROWS_AS(generate(m, 1000, {8, 4}), ValidationError);   // not ascending
  CHECK_THROWS_AS(generate(m, 1000, {2000}), ValidationError);   // P > n
  CHECK_THROWS_AS(generate(m, 1000, {}), ValidationError);
  m.compute_coeff = 0.0;
  CHECK_THROWS_AS(generate(m, 1000, {1}), ValidationError);
  m.compute_coeff = 1e-8;
  m.noise_rel = -0.5;
  CHECK_THROWS_AS(generate(m, 1000, {1}), ValidationError);
}

TEST_CASE("oracle: pure compute never drops below target") {
  CostModel m;
  m.compute_coeff = 1e-8;
  CHECK_FALSE(oracle_knee(m, 100000000, 0.8).has_value());
}

TEST_CASE("oracle matches direct algebra for the overhead model") {
  // eta(P) = (a*n + b) / (a*n + b*P); eta >= 0.8 up to
  // P = 0.25*a*n/b + 1.25, so the last good P is 251.
  CostModel m;
  m.compute_coeff = 1e-8;
  m.overhead = 1e-3;
  const std::int64_t n = 100000000;
  const auto knee_np = oracle_knee(m, n, 0.8);
  REQUIRE(knee_np.has_value());
  CHECK(*knee_np == double(n) / 251.0);
}

TEST_CASE("oracle: doubling n about doubles the knee P for overhead models") {
  CostModel m;
  m.compute_coeff = 1e-8;
  m.overhead = 1e-3;
  const auto np1 = oracle_knee(m, 100000000, 0.8);
  const auto np2 = oracle_knee(m, 200000000, 0.8);
  REQUIRE(np1.has_value());
  REQUIRE(np2.has_value());
  const double p1 = 100000000.0 / *np1;
  const double p2 = 200000000.0 / *np2;
  CHECK(p2 / p1 == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("oracle refuses noisy models") {
  CostModel m;
  m.compute_coeff = 1e-8;
  m.overhead = 1e-3;
  m.noise_rel = 0.01;
  CHECK_THROWS_AS(oracle_knee(m, 100000000, 0.8), ValidationError);
}

TEST_CASE("weak-scaling degradation: knee n/P grows with n when comms grow") {
  CostModel m;
  m.compute_coeff = 1e-8;
  m.log2_coeff = 1e-4;
  const auto small = oracle_knee(m, 100000000, 0.8);
  const auto large = oracle_knee(m, 400000000, 0.8);
  REQUIRE(small.has_value());
  REQUIRE(large.has_value());
  CHECK(*large > *small);
}

TEST_CASE("knee tracks the oracle across ladders") {
  CostModel m;
  m.compute_coeff = 1e-8;
  m.overhead = 3e-4;
  const std::int64_t n = 100000000;
  const auto s = generate(m, n, geometric_ladder(1 << 14));
  const auto expected = oracle_knee(m, n, 0.8);
  REQUIRE(expected.has_value());
  const KneeResult k = knee(s, 0.8);
  CHECK(std::abs(k.n_at_target - *expected) / *expected < 0.02);
}
