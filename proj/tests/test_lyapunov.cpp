#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>

#include "rancher/lyapunov.hpp"
#include "rancher/rng.hpp"

using namespace rancher;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("lyapunov") {

TEST_CASE("f_value") {
  DriftConfig cfg;  // c = 1/6
  SUBCASE("vanishes at d = 0") {
    CHECK(f_value(0.0, 1.0, 2.0, cfg) == 0.0);
    CHECK(f_value(0.0, 0.0, 0.0, cfg) == 0.0);
  }
  SUBCASE("wide angles hit the c*sqrt(d) cutoff") {
    // d = 4: 8 - 1/3 - 1/3 = 22/3
    CHECK(f_value(4.0, kPi / 2, kPi / 2, cfg) ==
          doctest::Approx(22.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("small angle stays on the alpha*d branch") {
    CHECK(f_value(4.0, 0.01, kPi / 2, cfg) ==
          doctest::Approx(8.0 - 0.04 - 1.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("negative d is a domain error") {
    CHECK_THROWS_AS(f_value(-1.0, 0.0, 0.0, cfg), std::invalid_argument);
  }
  SUBCASE("symmetric in the two angles") {
    RandomStream rs(1, 0);
    for (int i = 0; i < 1000; ++i) {
      const double d = rs.uniform(0.0, 100.0);
      const double a = rs.uniform(0.0, kPi);
      const double b = rs.uniform(0.0, kPi);
      CHECK(f_value(d, a, b, cfg) == f_value(d, b, a, cfg));
    }
  }
  SUBCASE("nondecreasing in d when both angles vanish") {
    RandomStream rs(2, 0);
    for (int i = 0; i < 1000; ++i) {
      double d1 = rs.uniform(0.0, 50.0);
      double d2 = rs.uniform(0.0, 50.0);
      if (d1 > d2) std::swap(d1, d2);
      CHECK(f_value(d1, 0.0, 0.0, cfg) <= f_value(d2, 0.0, 0.0, cfg));
      CHECK(f_value(d1, 0.0, 0.0, cfg) ==
            doctest::Approx(std::pow(d1, 1.5)).epsilon(1e-12));
    }
  }
  SUBCASE("bounded below by the analytic minimum") {
    CHECK(f_lower_bound(cfg) == doctest::Approx(-2.0 / 27.0).epsilon(1e-15));
    RandomStream rs(3, 0);
    for (int i = 0; i < 2000; ++i) {
      const double d = rs.uniform(0.0, 200.0);
      const double a = rs.uniform(0.0, kPi);
      const double b = rs.uniform(0.0, kPi);
      CHECK(f_value(d, a, b, cfg) >= f_lower_bound(cfg) - 1e-12);
    }
  }
  SUBCASE("continuous in every argument") {
    RandomStream rs(6, 0);
    const double h = 1e-9;
    for (int i = 0; i < 500; ++i) {
      const double d = rs.uniform(h, 100.0);
      const double a = rs.uniform(0.0, kPi - h);
      const double b = rs.uniform(0.0, kPi - h);
      const double f0 = f_value(d, a, b, cfg);
      CHECK(std::fabs(f_value(d + h, a, b, cfg) - f0) < 1e-6);
      CHECK(std::fabs(f_value(d, a + h, b, cfg) - f0) < 1e-6);
      CHECK(std::fabs(f_value(d, a, b + h, cfg) - f0) < 1e-6);
    }
  }
  SUBCASE("recomposition identity") {
    RandomStream rs(4, 0);
    for (int i = 0; i < 1000; ++i) {
      const double d = rs.uniform(0.0, 100.0);
      const double a = rs.uniform(0.0, kPi);
      const double b = rs.uniform(0.0, kPi);
      const double f1 = std::pow(d, 1.5);
      const double f2a = -std::min(cfg.c * std::sqrt(d), a * d);
      const double f2b = -std::min(cfg.c * std::sqrt(d), b * d);
      CHECK(f_value(d, a, b, cfg) ==
            doctest::Approx(f1 + f2a + f2b).epsilon(1e-12));
    }
  }
}

TEST_CASE("config validation") {
  DriftConfig cfg;
  cfg.c = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = DriftConfig{};
  cfg.d_star = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = DriftConfig{};
  cfg.epsilon = 2.0;  // >= pi/2
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_NOTHROW(DriftConfig{}.validate());
}

TEST_CASE("short survey") {
  SurveyParams p;
  p.steps = 2000;
  p.reps = 5;
  p.seed = 21;
  p.threads = 2;
  const auto rep = run_survey(p);

  // the first two transitions of each walk lack diagnostics
  CHECK(rep.degenerate_steps == 2 * p.reps);
  CHECK(rep.samples == p.reps * p.steps - rep.degenerate_steps);
  CHECK(rep.dx_violations == 0);
  CHECK(rep.min_f >= -1.0);
  CHECK(rep.pooled_gain_count == p.reps * p.steps);
  CHECK(rep.pooled_gain_mean > -1e-3);
  CHECK(rep.max_delta_f_on_A <= rep.bound_cap);

  auto find = [&](std::string_view name) -> const ConditionReport& {
    for (const auto& c : rep.conditions) {
      if (c.name == name) return c;
    }
    FAIL("missing condition");
    return rep.conditions.front();
  };
  CHECK(find("abs_delta_x_le_1").pass);
  CHECK(find("mean_delta_x_nonneg").pass);
  CHECK(find("f_bounded_below").pass);
  CHECK(find("delta_f_bounded_on_A").pass);
}

TEST_CASE("negative drift off A is visible at a reachable d_star") {
  SurveyParams p;
  p.steps = 50000;
  p.reps = 10;
  p.seed = 77;
  p.cfg.d_star = 3.0;
  const auto rep = run_survey(p);
  bool found = false;
  for (const auto& c : rep.conditions) {
    if (c.name == "delta_f_negative_off_A") {
      found = true;
      CHECK(c.count > 1000);
      CHECK(c.pass);
      CHECK(c.estimate < 0.0);
    }
  }
  CHECK(found);
}

TEST_CASE("survey is thread independent") {
  SurveyParams p;
  p.steps = 1000;
  p.reps = 4;
  p.seed = 5;
  p.threads = 1;
  const auto a = run_survey(p);
  p.threads = 4;
  const auto b = run_survey(p);
  REQUIRE(a.bins.size() == b.bins.size());
  for (std::size_t i = 0; i < a.bins.size(); ++i) {
    CHECK(a.bins[i].count == b.bins[i].count);
    CHECK(a.bins[i].mean_delta_f == b.bins[i].mean_delta_f);
  }
  CHECK(a.pooled_gain_mean == b.pooled_gain_mean);
}

TEST_CASE("labels") {
  CHECK(d_decade_label(kDZeroDecade) == "d~0");
  CHECK(d_decade_label(0) == "[1e0,1e1)");
  CHECK(band_label(0) == "[0,eps)");
  CHECK(band_label(2) == "[pi-eps,pi]");
}

}  // TEST_SUITE
