// Ensemble orchestration and estimation: log-log regression with OLS
// standard errors, the width-exponent experiment, speed summaries, and the
// unwrapped direction series. Experiments derive one substream per walk, so
// results are independent of the thread count.

#ifndef RANCHER_STATS_HPP
#define RANCHER_STATS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rancher/sample_record.hpp"

namespace rancher {

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  std::size_t npoints = 0;
};

// Ordinary least squares of log10(w) on log10(n). Requires >= 2 points with
// at least 2 distinct abscissas (rank-deficiency error otherwise) and all
// w > 0 (invalid-datum error).
RegressionFit loglog_fit(std::span<const std::pair<double, double>> points);

enum class Aggregator { PerWalkPoints, Median, Mean };

enum class Model { Rancher, Investor, Stub };

std::string to_string(Aggregator a);
std::string to_string(Model m);

struct ExponentParams {
  Model model = Model::Rancher;
  double alpha = 1.0;          // investor only
  double stub_exponent = 0.75; // stub only: emits w = n^e exactly
  std::vector<std::uint64_t> lengths;
  std::uint64_t reps = 100;
  std::uint64_t seed = 0;
  Aggregator aggregator = Aggregator::Median;
  int threads = 0;  // <= 0: hardware concurrency
};

struct ExponentResult {
  RegressionFit fit;
  // Points the regression was fit on (aggregated for median/mean).
  std::vector<std::pair<double, double>> points;
  // One width per (length, rep), before aggregation; equals `points` for
  // the per-walk-points protocol.
  std::vector<std::pair<double, double>> raw_points;
  std::uint64_t dropped = 0;  // walks whose width was zero or missing
  // Sampling protocol actually used: median/mean run an independent walk
  // per (length, rep); per-walk-points samples one long walk per rep at
  // every requested length.
  std::string protocol;
};

// Width-exponent experiment: run walks at the given lengths, aggregate the
// terminal widths, fit a log-log line. Deterministic given (seed, params).
ExponentResult exponent_experiment(const ExponentParams& params);

struct SpeedSummary {
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double max = 0.0;
  std::uint64_t reps = 0;
  std::uint64_t steps = 0;
};

// Distribution of the terminal speed ratio ||x_steps|| / steps over
// independent walks.
SpeedSummary speed_experiment(std::uint64_t reps, std::uint64_t steps,
                              std::uint64_t seed, int threads = 0);

// Same summary over caller-supplied terminal ratios (test support for
// deterministic stub walks).
SpeedSummary summarize_speeds(std::vector<double> ratios);

// Unwrapped angle series (no +-2pi jumps between consecutive checkpoints);
// zero-norm records are skipped.
std::vector<std::pair<std::uint64_t, double>> direction_series(
    std::span<const SampleRecord> records);

double median_of(std::vector<double> values);
double mean_of(std::span<const double> values);

// Run fn(i) for i in [0, ntasks) on `threads` workers (<= 0: hardware
// concurrency). fn must be safe to call concurrently for distinct i.
void parallel_for(std::size_t ntasks, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace rancher

#endif
