#include "rancher/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rancher/investor.hpp"
#include "rancher/rancher.hpp"

namespace rancher {

RegressionFit loglog_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("loglog_fit: need at least 2 points");
  }
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [n, w] : points) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("loglog_fit: nonpositive width");
    }
    if (!(n > 0.0)) {
      throw std::invalid_argument("loglog_fit: nonpositive abscissa");
    }
    xs.push_back(std::log10(n));
    ys.push_back(std::log10(w));
  }
  const double xmin = *std::min_element(xs.begin(), xs.end());
  const double xmax = *std::max_element(xs.begin(), xs.end());
  if (xmin == xmax) {
    throw std::invalid_argument("loglog_fit: fewer than 2 distinct abscissas");
  }

  const auto k = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  RegressionFit fit;
  fit.npoints = xs.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;

  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ssr += r * r;
  }
  fit.stderr_slope =
      xs.size() > 2 ? std::sqrt(ssr / (k - 2.0) / sxx) : 0.0;
  if (ssr <= 0.0) fit.stderr_slope = 0.0;
  return fit;
}

std::string to_string(Aggregator a) {
  switch (a) {
    case Aggregator::PerWalkPoints: return "per-walk-points";
    case Aggregator::Median: return "median";
    case Aggregator::Mean: return "mean";
  }
  return "?";
}

std::string to_string(Model m) {
  switch (m) {
    case Model::Rancher: return "rancher";
    case Model::Investor: return "investor";
    case Model::Stub: return "stub";
  }
  return "?";
}

double median_of(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("median_of: empty input");
  }
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  return k % 2 == 1 ? values[k / 2]
                    : (values[k / 2 - 1] + values[k / 2]) / 2.0;
}

double mean_of(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("mean_of: empty input");
  }
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

void parallel_for(std::size_t ntasks, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (ntasks == 0) return;
  std::size_t nworkers =
      threads > 0 ? static_cast<std::size_t>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  nworkers = std::min(nworkers, ntasks);
  if (nworkers == 1) {
    for (std::size_t i = 0; i < ntasks; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (std::size_t w = 0; w < nworkers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= ntasks) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

namespace {

// Terminal width of one walk of the given length, or nullopt when undefined.
std::optional<double> terminal_width(const ExponentParams& p,
                                     std::uint64_t length,
                                     RandomStream rs) {
  switch (p.model) {
    case Model::Rancher: {
      RancherWalk walk;
      for (std::uint64_t i = 0; i < length; ++i) walk.step(rs);
      return walk.width();
    }
    case Model::Investor: {
      InvestorWalk walk(p.alpha);
      for (std::uint64_t i = 0; i < length && !walk.blown_up(); ++i) {
        walk.step(rs);
      }
      if (walk.blown_up()) return std::nullopt;
      return walk.width();
    }
    case Model::Stub:
      return std::pow(static_cast<double>(length), p.stub_exponent);
  }
  return std::nullopt;
}

// Widths of one walk sampled at every requested length (one long walk).
std::vector<std::optional<double>> walk_widths_at(
    const ExponentParams& p, std::span<const std::uint64_t> lengths,
    RandomStream rs) {
  std::vector<std::optional<double>> out(lengths.size());
  if (p.model == Model::Stub) {
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      out[i] = std::pow(static_cast<double>(lengths[i]), p.stub_exponent);
    }
    return out;
  }
  const std::uint64_t maxlen = lengths.back();
  if (p.model == Model::Rancher) {
    RancherWalk walk;
    std::size_t li = 0;
    for (std::uint64_t n = 1; n <= maxlen; ++n) {
      walk.step(rs);
      while (li < lengths.size() && lengths[li] == n) {
        out[li++] = walk.width();
      }
    }
  } else {
    InvestorWalk walk(p.alpha);
    std::size_t li = 0;
    for (std::uint64_t n = 1; n <= maxlen && !walk.blown_up(); ++n) {
      walk.step(rs);
      if (walk.blown_up()) break;
      while (li < lengths.size() && lengths[li] == n) {
        out[li++] = walk.width();
      }
    }
  }
  return out;
}

}  // namespace

ExponentResult exponent_experiment(const ExponentParams& params) {
  if (params.lengths.empty() || params.reps == 0) {
    throw std::invalid_argument("exponent_experiment: empty grid");
  }
  for (std::size_t i = 0; i + 1 < params.lengths.size(); ++i) {
    if (params.lengths[i] >= params.lengths[i + 1]) {
      throw std::invalid_argument(
          "exponent_experiment: lengths must be strictly ascending");
    }
  }

  const std::size_t nlen = params.lengths.size();
  const std::size_t reps = params.reps;
  // widths[length_index][rep]
  std::vector<std::vector<std::optional<double>>> widths(
      nlen, std::vector<std::optional<double>>(reps));

  if (params.aggregator == Aggregator::PerWalkPoints) {
    parallel_for(reps, params.threads, [&](std::size_t rep) {
      auto ws = walk_widths_at(params, params.lengths,
                               RandomStream::derive(params.seed, rep));
      for (std::size_t i = 0; i < nlen; ++i) widths[i][rep] = ws[i];
    });
  } else {
    parallel_for(nlen * reps, params.threads, [&](std::size_t task) {
      const std::size_t li = task / reps;
      const std::size_t rep = task % reps;
      widths[li][rep] = terminal_width(
          params, params.lengths[li],
          RandomStream::derive(params.seed, static_cast<std::uint64_t>(task)));
    });
  }

  ExponentResult res;
  res.protocol = params.aggregator == Aggregator::PerWalkPoints
                     ? "one-long-walk-per-rep"
                     : "independent-walk-per-length";

  for (std::size_t li = 0; li < nlen; ++li) {
    const auto n = static_cast<double>(params.lengths[li]);
    std::vector<double> good;
    good.reserve(reps);
    for (const auto& w : widths[li]) {
      if (w.has_value() && *w > 0.0) {
        good.push_back(*w);
        res.raw_points.emplace_back(n, *w);
      } else {
        ++res.dropped;
      }
    }
    if (good.empty()) continue;
    switch (params.aggregator) {
      case Aggregator::PerWalkPoints:
        break;  // raw points are the fit points
      case Aggregator::Median:
        res.points.emplace_back(n, median_of(std::move(good)));
        break;
      case Aggregator::Mean:
        res.points.emplace_back(n, mean_of(good));
        break;
    }
  }
  if (params.aggregator == Aggregator::PerWalkPoints) {
    res.points = res.raw_points;
  }
  res.fit = loglog_fit(res.points);
  return res;
}

SpeedSummary summarize_speeds(std::vector<double> ratios) {
  if (ratios.empty()) {
    throw std::invalid_argument("summarize_speeds: empty input");
  }
  SpeedSummary s;
  s.reps = ratios.size();
  s.mean = mean_of(ratios);
  double ss = 0.0;
  for (double v : ratios) ss += (v - s.mean) * (v - s.mean);
  s.sd = ratios.size() > 1
             ? std::sqrt(ss / static_cast<double>(ratios.size() - 1))
             : 0.0;
  std::sort(ratios.begin(), ratios.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(ratios.size() - 1);
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return i + 1 < ratios.size()
               ? ratios[i] * (1.0 - frac) + ratios[i + 1] * frac
               : ratios[i];
  };
  s.min = ratios.front();
  s.q25 = quantile(0.25);
  s.median = quantile(0.5);
  s.q75 = quantile(0.75);
  s.max = ratios.back();
  return s;
}

SpeedSummary speed_experiment(std::uint64_t reps, std::uint64_t steps,
                              std::uint64_t seed, int threads) {
  if (reps == 0 || steps == 0) {
    throw std::invalid_argument("speed_experiment: reps and steps must be >= 1");
  }
  std::vector<double> ratios(reps);
  parallel_for(reps, threads, [&](std::size_t rep) {
    RandomStream rs = RandomStream::derive(seed, rep);
    RancherWalk walk;
    for (std::uint64_t i = 0; i < steps; ++i) walk.step(rs);
    ratios[rep] = norm(walk.position()) / static_cast<double>(steps);
  });
  SpeedSummary s = summarize_speeds(std::move(ratios));
  s.steps = steps;
  return s;
}

std::vector<std::pair<std::uint64_t, double>> direction_series(
    std::span<const SampleRecord> records) {
  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(records.size());
  bool have_prev = false;
  double prev = 0.0;
  for (const SampleRecord& r : records) {
    if (!r.direction.has_value() || r.norm == 0.0) continue;
    double a = *r.direction;
    if (have_prev) {
      a = prev + wrap_angle(a - prev);
    }
    out.emplace_back(r.n, a);
    prev = a;
    have_prev = true;
  }
  return out;
}

}  // namespace rancher
