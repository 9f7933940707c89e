#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rancher/rng.hpp"

using rancher::RandomStream;

TEST_SUITE("rng") {

TEST_CASE("uniform degenerate and range") {
  RandomStream rs(1, 0);
  CHECK(rs.uniform(0.0, 0.0) == 0.0);
  CHECK(rs.uniform(3.5, 3.5) == 3.5);
  for (int i = 0; i < 10000; ++i) {
    const double v = rs.uniform(-1.0, 1.0);
    CHECK(v >= -1.0);
    CHECK(v < 1.0);
  }
  CHECK_THROWS_AS(rs.uniform(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("uniform empirical mean on [0,1)") {
  RandomStream rs(7, 0);
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) sum += rs.uniform01();
  CHECK(std::fabs(sum / n - 0.5) < 0.002);  // 5 sigma of sd/sqrt(n)
}

TEST_CASE("gaussian empirical mean and variance") {
  RandomStream rs(11, 0);
  const int n = 1000000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rs.gaussian();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::fabs(mean) < 0.005);
  CHECK(std::fabs(var - 1.0) < 0.01);
}

TEST_CASE("determinism and substream divergence") {
  SUBCASE("equal seed, equal sequence") {
    RandomStream a(42, 0), b(42, 0);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u32() == b.next_u32());
  }
  SUBCASE("derive is pure") {
    auto a = RandomStream::derive(42, 3);
    auto b = RandomStream::derive(42, 3);
    CHECK(a == b);
  }
  SUBCASE("distinct index diverges") {
    RandomStream a(42, 0), b(42, 1);
    bool differ = false;
    for (int i = 0; i < 100 && !differ; ++i) {
      differ = a.next_u32() != b.next_u32();
    }
    CHECK(differ);
  }
  SUBCASE("distinct seed diverges") {
    RandomStream a(42, 0), b(43, 0);
    bool differ = false;
    for (int i = 0; i < 100 && !differ; ++i) {
      differ = a.next_u32() != b.next_u32();
    }
    CHECK(differ);
  }
  SUBCASE("gaussian sequences replay") {
    RandomStream a(5, 9), b(5, 9);
    for (int i = 0; i < 100; ++i) CHECK(a.gaussian() == b.gaussian());
  }
}

TEST_CASE("kolmogorov-smirnov of uniform01") {
  // D_n below the asymptotic critical value at significance 1e-3.
  const int n = 100000;
  RandomStream rs(2024, 0);
  std::vector<double> u(n);
  for (double& v : u) v = rs.uniform01();
  std::sort(u.begin(), u.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, std::fabs(u[i] - lo), std::fabs(u[i] - hi)});
  }
  const double critical = std::sqrt(-0.5 * std::log(0.001 / 2.0));
  CHECK(d < critical / std::sqrt(static_cast<double>(n)));
}

}  // TEST_SUITE
