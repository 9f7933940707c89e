#include "rancher/investor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rancher {

InvestorWalk::InvestorWalk(double alpha, bool keep_path)
    : alpha_(alpha), hull_(Point2{0.0, 0.0}), keep_path_(keep_path) {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("InvestorWalk: alpha must be >= 0");
  }
  if (keep_path_) path_.push_back(0.0);
}

std::pair<double, double> InvestorWalk::extremal_rates() const {
  if (n_ == 0) {
    throw std::invalid_argument("extremal_rates: no past at n = 0");
  }
  const double tn = static_cast<double>(n_);
  double rmax = -std::numeric_limits<double>::infinity();
  double rmin = std::numeric_limits<double>::infinity();
  for (const Point2& v : hull_.vertices()) {
    if (v.x >= tn) continue;  // skip the present point (abscissas distinct)
    const double slope = (x_ - v.y) / (tn - v.x);
    rmax = std::max(rmax, slope);
    rmin = std::min(rmin, slope);
  }
  return {rmax, rmin};
}

double InvestorWalk::width() const {
  if (n_ == 0) {
    throw std::invalid_argument("width: no past at n = 0");
  }
  const double tn = static_cast<double>(n_);
  double best = 0.0;
  for (const Point2& v : hull_.vertices()) {
    best = std::max(best, std::fabs(v.y - (v.x / tn) * x_));
  }
  return best;
}

void InvestorWalk::step(RandomStream& rs) {
  double drift = 0.0;
  if (n_ >= 1) {
    const auto [rmax, rmin] = extremal_rates();
    drift = alpha_ * (rmax + rmin) / 2.0;
  }
  // n == 0: no past rates exist, the first increment is pure Gaussian.
  append_value(x_ + drift + rs.gaussian());
}

void InvestorWalk::append_value(double x) {
  x_ = x;
  ++n_;
  if (keep_path_) path_.push_back(x_);
  if (!std::isfinite(x_) || std::fabs(x_) > kBlowupGuard) {
    // terminal state; the hull keeps only finite pre-guard points, and rate
    // queries against the blown value still scan strictly-past vertices
    blown_up_ = true;
    return;
  }
  hull_.insert_adjacent(Point2{static_cast<double>(n_), x_});
}

std::vector<Point2> InvestorWalk::lower_chain() const {
  // CCW hull of graph points: walking ccw from the leftmost vertex (0, 0)
  // to the rightmost (n, x_n) traverses the convex minorant.
  const auto verts = hull_.vertices();
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i].x < verts[lo].x) lo = i;
    if (verts[i].x > verts[hi].x) hi = i;
  }
  std::vector<Point2> out;
  for (std::size_t i = lo;; i = (i + 1) % verts.size()) {
    out.push_back(verts[i]);
    if (i == hi) break;
  }
  return out;
}

std::vector<Point2> InvestorWalk::upper_chain() const {
  const auto verts = hull_.vertices();
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i].x < verts[lo].x) lo = i;
    if (verts[i].x > verts[hi].x) hi = i;
  }
  std::vector<Point2> out;
  for (std::size_t i = hi;; i = (i + 1) % verts.size()) {
    out.push_back(verts[i]);
    if (i == lo) break;
  }
  std::reverse(out.begin(), out.end());  // left to right
  return out;
}

std::vector<SampleRecord> run_investor(std::uint64_t steps, double alpha,
                                       std::uint64_t seed,
                                       std::span<const std::uint64_t> checkpoints) {
  for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i) {
    if (checkpoints[i] > checkpoints[i + 1]) {
      throw std::invalid_argument("run_investor: checkpoints not ascending");
    }
  }
  if (!checkpoints.empty() && checkpoints.back() > steps) {
    throw std::invalid_argument("run_investor: checkpoint beyond steps");
  }

  RandomStream rs = RandomStream::derive(seed, 0);
  InvestorWalk walk(alpha);
  std::vector<SampleRecord> out;
  out.reserve(checkpoints.size());

  auto emit = [&](std::uint64_t n, const char* status) {
    SampleRecord r;
    r.n = n;
    r.x = walk.log_price();
    r.norm = std::fabs(r.x);
    if (n >= 1 && std::isfinite(r.x)) {
      const auto [rmax, rmin] = walk.extremal_rates();
      r.set_extra("rmax", rmax);
      r.set_extra("rmin", rmin);
      r.width = walk.width();
      r.set_extra("ratio", r.x / static_cast<double>(n));
    }
    r.status = status;
    out.push_back(std::move(r));
  };

  std::size_t ci = 0;
  while (ci < checkpoints.size() && checkpoints[ci] == 0) {
    emit(0, "");
    ++ci;
  }
  for (std::uint64_t n = 1; n <= steps; ++n) {
    walk.step(rs);
    if (walk.blown_up()) {
      emit(n, "blowup");
      break;
    }
    while (ci < checkpoints.size() && checkpoints[ci] == n) {
      emit(n, "");
      ++ci;
    }
  }
  return out;
}

}  // namespace rancher
