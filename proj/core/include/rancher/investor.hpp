// The extremal investor: a log price x_n whose increment is a standard
// Gaussian plus alpha times the average of the best and worst past rates
//   rmax = max_{m<n} (x_n - x_m)/(n - m),   rmin the analogous min.
// Rate and width queries are answered from the convex hull of the graph
// points (m, x_m): the slope to the present point and the deviation from the
// chord are both extremized at hull vertices.

#ifndef RANCHER_INVESTOR_HPP
#define RANCHER_INVESTOR_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rancher/geom.hpp"
#include "rancher/rng.hpp"
#include "rancher/sample_record.hpp"

namespace rancher {

// Runs terminate once |x| passes this guard (superlinear regimes would
// otherwise overflow doubles eventually).
inline constexpr double kBlowupGuard = 1e300;

class InvestorWalk {
 public:
  explicit InvestorWalk(double alpha, bool keep_path = false);

  void step(RandomStream& rs);

  // Append a deterministic value instead of the stochastic update (no drift,
  // no noise). Lets tests and oracles drive the hull-backed queries with an
  // exact sequence.
  void append_value(double x);

  std::uint64_t step_count() const { return n_; }
  double log_price() const { return x_; }
  double alpha() const { return alpha_; }
  bool blown_up() const { return blown_up_; }

  // Extreme slopes from past graph points to the present point; throws
  // std::invalid_argument while there is no past (n == 0).
  std::pair<double, double> extremal_rates() const;  // {rmax, rmin}

  // Max |x_m - (m/n) x_n| over m <= n; throws while n == 0.
  double width() const;

  const ConvexPolygon& graph_hull() const { return hull_; }

  // Hull chains of the graph, left to right: lower = convex minorant,
  // upper = concave majorant (the "enveloping curves" of a plot).
  std::vector<Point2> lower_chain() const;
  std::vector<Point2> upper_chain() const;

  const std::vector<double>* path() const {
    return keep_path_ ? &path_ : nullptr;
  }

 private:
  double alpha_;
  double x_ = 0.0;
  std::uint64_t n_ = 0;
  bool blown_up_ = false;
  ConvexPolygon hull_;
  bool keep_path_ = false;
  std::vector<double> path_;
};

// Run and record n, x, rmax, rmin, width, ratio (= x/n) at checkpoints.
// If the blow-up guard trips, the run stops with a final marker record
// (status = "blowup") at the step where it tripped.
std::vector<SampleRecord> run_investor(std::uint64_t steps, double alpha,
                                       std::uint64_t seed,
                                       std::span<const std::uint64_t> checkpoints);

}  // namespace rancher

#endif
