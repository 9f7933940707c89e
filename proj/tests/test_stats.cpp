#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rancher/io.hpp"
#include "rancher/rancher.hpp"
#include "rancher/stats.hpp"

using namespace rancher;

TEST_SUITE("stats") {

TEST_CASE("loglog_fit") {
  SUBCASE("exact power law") {
    const std::pair<double, double> pts[] = {
        {10, std::pow(10.0, 0.75)},
        {100, std::pow(10.0, 1.5)},
        {1000, std::pow(10.0, 2.25)}};
    const auto fit = loglog_fit(pts);
    CHECK(fit.slope == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(fit.stderr_slope == doctest::Approx(0.0));
    CHECK(fit.npoints == 3);
  }
  SUBCASE("constant data") {
    const std::pair<double, double> pts[] = {{10, 1}, {100, 1}};
    CHECK(loglog_fit(pts).slope == doctest::Approx(0.0));
  }
  SUBCASE("slope invariant under w -> c*w") {
    const std::pair<double, double> pts[] = {{10, 3}, {100, 17}, {1000, 40}};
    std::vector<std::pair<double, double>> scaled;
    for (auto [n, w] : pts) scaled.emplace_back(n, 5.0 * w);
    const auto a = loglog_fit(pts);
    const auto b = loglog_fit(scaled);
    CHECK(a.slope == doctest::Approx(b.slope).epsilon(1e-12));
    CHECK(b.intercept ==
          doctest::Approx(a.intercept + std::log10(5.0)).epsilon(1e-12));
  }
  SUBCASE("matches the closed form on three points") {
    // independent arithmetic: direct normal-equation solution
    const std::pair<double, double> pts[] = {{10, 2}, {100, 8}, {1000, 16}};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [n, w] : pts) {
      const double x = std::log10(n), y = std::log10(w);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = 3.0;
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / k;
    const auto fit = loglog_fit(pts);
    CHECK(fit.slope == doctest::Approx(slope).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(intercept).epsilon(1e-12));
  }
  SUBCASE("errors") {
    const std::pair<double, double> bad_w[] = {{10, 1}, {100, 0}};
    CHECK_THROWS_AS(loglog_fit(bad_w), std::invalid_argument);
    const std::pair<double, double> one_abscissa[] = {{10, 1}, {10, 2}};
    CHECK_THROWS_AS(loglog_fit(one_abscissa), std::invalid_argument);
    const std::pair<double, double> single[] = {{10, 1}};
    CHECK_THROWS_AS(loglog_fit(single), std::invalid_argument);
  }
}

TEST_CASE("aggregation helpers") {
  CHECK(median_of({3.0}) == 3.0);
  CHECK(median_of({1.0, 2.0, 9.0}) == 2.0);
  CHECK(median_of({1.0, 2.0, 3.0, 10.0}) == 2.5);
  const double vals[] = {4.0, 4.0, 4.0};
  CHECK(mean_of(vals) == 4.0);
  CHECK(median_of({4.0, 4.0, 4.0}) == 4.0);
}

TEST_CASE("stub pipeline identity") {
  ExponentParams p;
  p.model = Model::Stub;
  p.stub_exponent = 0.6;
  p.lengths = {1000, 10000, 100000};
  p.reps = 5;
  p.seed = 1;
  for (auto agg :
       {Aggregator::Median, Aggregator::Mean, Aggregator::PerWalkPoints}) {
    p.aggregator = agg;
    const auto res = exponent_experiment(p);
    CHECK(std::fabs(res.fit.slope - 0.6) <= 1e-9);
    CHECK(res.dropped == 0);
  }
}

TEST_CASE("exponent_experiment is deterministic and thread independent") {
  ExponentParams p;
  p.model = Model::Rancher;
  p.lengths = {200, 400};
  p.reps = 8;
  p.seed = 33;
  p.aggregator = Aggregator::Median;
  p.threads = 1;
  const auto a = exponent_experiment(p);
  p.threads = 4;
  const auto b = exponent_experiment(p);
  const auto c = exponent_experiment(p);
  CHECK(a.fit.slope == b.fit.slope);
  CHECK(b.fit.slope == c.fit.slope);
  REQUIRE(a.points == b.points);
  REQUIRE(a.raw_points == b.raw_points);
}

TEST_CASE("per-walk-points uses one long walk per rep") {
  ExponentParams p;
  p.model = Model::Rancher;
  p.lengths = {100, 200, 300};
  p.reps = 4;
  p.seed = 9;
  p.aggregator = Aggregator::PerWalkPoints;
  const auto res = exponent_experiment(p);
  CHECK(res.protocol == "one-long-walk-per-rep");
  CHECK(res.points.size() == 12);  // every (length, rep) pair is a point
  CHECK(res.points == res.raw_points);
}

TEST_CASE("speed summaries") {
  SUBCASE("straight-line stub walk has speed exactly 1") {
    // unit steps along a ray: ||x_n||/n == 1
    std::vector<double> ratios;
    for (int rep = 0; rep < 10; ++rep) {
      double x = 0.0;
      const int steps = 1000;
      for (int i = 0; i < steps; ++i) x += 1.0;
      ratios.push_back(x / steps);
    }
    const auto s = summarize_speeds(ratios);
    CHECK(s.mean == 1.0);
    CHECK(s.median == 1.0);
    CHECK(s.sd == 0.0);
  }
  SUBCASE("doubling steps does not collapse the speed") {
    const auto a = speed_experiment(30, 50000, 12);
    const auto b = speed_experiment(30, 100000, 12);
    CHECK(b.mean > a.mean - 0.02);
    CHECK(a.mean > 0.2);  // far from zero at desk scale
  }
}

TEST_CASE("direction_series") {
  SUBCASE("constant for a straight walk") {
    std::vector<SampleRecord> recs;
    for (int n = 1; n <= 5; ++n) {
      SampleRecord r;
      r.n = n;
      r.norm = n;
      r.direction = 0.7;
      recs.push_back(r);
    }
    const auto s = direction_series(recs);
    REQUIRE(s.size() == 5);
    for (const auto& [n, a] : s) CHECK(a == doctest::Approx(0.7));
  }
  SUBCASE("unwraps across the branch cut") {
    std::vector<SampleRecord> recs(2);
    recs[0].n = 1;
    recs[0].norm = 1;
    recs[0].direction = 3.1;
    recs[1].n = 2;
    recs[1].norm = 1;
    recs[1].direction = -3.1;
    const auto s = direction_series(recs);
    REQUIRE(s.size() == 2);
    CHECK(s[0].second == doctest::Approx(3.1));
    CHECK(s[1].second ==
          doctest::Approx(3.1 + (2 * std::numbers::pi - 6.2)).epsilon(1e-12));
  }
  SUBCASE("zero-norm records are skipped") {
    std::vector<SampleRecord> recs(2);
    recs[0].n = 0;
    recs[0].norm = 0;
    recs[1].n = 1;
    recs[1].norm = 1;
    recs[1].direction = 0.5;
    CHECK(direction_series(recs).size() == 1);
  }
}

TEST_CASE("zero widths are dropped with a count") {
  // a length-1 walk has a segment hull, so its width is exactly 0
  ExponentParams p;
  p.model = Model::Rancher;
  p.lengths = {1, 50, 100};
  p.reps = 3;
  p.seed = 2;
  p.aggregator = Aggregator::Median;
  const auto res = exponent_experiment(p);
  CHECK(res.dropped == 3);
  CHECK(res.points.size() == 2);
}

TEST_CASE("direction series settles along long walks") {
  // qualitative angular-settling diagnostic: the unwrapped direction varies
  // less over n in [1e4, 1e5] than over [1e2, 1e3] in >= 80% of seeds
  int settled = 0;
  const auto cps = geometric_checkpoints(100000);
  for (int seed = 0; seed < 50; ++seed) {
    const auto recs = run_rancher(100000, 3000 + seed, cps);
    const auto dirs = direction_series(recs);
    double lo1 = 1e300, hi1 = -1e300, lo2 = 1e300, hi2 = -1e300;
    for (const auto& [n, a] : dirs) {
      if (n >= 100 && n <= 1000) {
        lo1 = std::min(lo1, a);
        hi1 = std::max(hi1, a);
      }
      if (n >= 10000) {
        lo2 = std::min(lo2, a);
        hi2 = std::max(hi2, a);
      }
    }
    if (hi2 - lo2 < hi1 - lo1) ++settled;
  }
  CHECK(settled >= 40);
}

TEST_CASE("geometric checkpoints") {
  const auto cps = geometric_checkpoints(100000);
  CHECK(cps.front() == 0);
  CHECK(cps.back() == 100000);
  for (std::size_t i = 0; i + 1 < cps.size(); ++i) CHECK(cps[i] < cps[i + 1]);
  // 25 per decade over 5 decades, minus collisions at small n
  CHECK(cps.size() > 80);
  CHECK(cps.size() < 150);
  const auto zero = geometric_checkpoints(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == 0);
}

}  // TEST_SUITE
