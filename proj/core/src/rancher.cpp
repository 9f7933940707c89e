#include "rancher/rancher.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rancher {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

RancherWalk::RancherWalk(bool keep_path)
    : hull_(Point2{0.0, 0.0}), keep_path_(keep_path) {
  if (keep_path_) path_.push_back(Point2{0.0, 0.0});
}

ArcSpec allowed_arc(const ConvexPolygon& hull) {
  if (hull.degenerate()) {
    if (hull.size() == 2) {
      // A segment has no interior; start at the clockwise neighbor's
      // direction for continuity with the non-degenerate case.
      const Point2 e = hull.neighbor_cw() - hull.cursor();
      return {std::atan2(e.y, e.x), kTwoPi};
    }
    return {0.0, kTwoPi};
  }
  const double interior = *hull.interior_angle_at_cursor();
  const Point2 e = hull.neighbor_cw() - hull.cursor();
  return {std::atan2(e.y, e.x), kTwoPi - interior};
}

ArcSpec RancherWalk::allowed_arc() const { return rancher::allowed_arc(hull_); }

void RancherWalk::step(RandomStream& rs) {
  const ArcSpec arc = allowed_arc();
  const double theta = arc.start + rs.uniform(0.0, arc.measure);
  const Point2 pos = hull_.cursor();
  const Point2 next{pos.x + std::cos(theta), pos.y + std::sin(theta)};

  const double old_norm = norm(pos);
  if (old_norm > 0.0) {
    last_beta_ = wrap_angle(theta - std::atan2(pos.y, pos.x));
  } else {
    last_beta_.reset();
  }

  hull_.insert_adjacent(next);
  ++n_;
  const double new_norm = norm(next);
  last_gain_ = new_norm - old_norm;
  max_norm_ = std::max(max_norm_, new_norm);
  if (keep_path_) path_.push_back(next);
}

std::optional<HullDiagnostics> RancherWalk::diagnostics() const {
  if (hull_.degenerate()) return std::nullopt;
  return hull_.diagnostics(Point2{0.0, 0.0}, max_norm_);
}

std::optional<double> RancherWalk::width() const {
  const Point2 pos = hull_.cursor();
  if (norm(pos) == 0.0) return std::nullopt;
  return hull_.farthest_from_line(Point2{0.0, 0.0}, pos);
}

std::vector<SampleRecord> run_rancher(std::uint64_t steps, std::uint64_t seed,
                                      std::span<const std::uint64_t> checkpoints,
                                      bool record_beta) {
  for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i) {
    if (checkpoints[i] > checkpoints[i + 1]) {
      throw std::invalid_argument("run_rancher: checkpoints not ascending");
    }
  }
  if (!checkpoints.empty() && checkpoints.back() > steps) {
    throw std::invalid_argument("run_rancher: checkpoint beyond steps");
  }

  RandomStream rs = RandomStream::derive(seed, 0);
  RancherWalk walk;
  std::vector<SampleRecord> out;
  out.reserve(checkpoints.size());

  auto emit = [&](std::uint64_t n) {
    SampleRecord r;
    r.n = n;
    const Point2 p = walk.position();
    r.x = p.x;
    r.y = p.y;
    r.norm = norm(p);
    r.width = walk.width();
    if (r.norm > 0.0) r.direction = std::atan2(p.y, p.x);
    if (const auto diag = walk.diagnostics()) {
      r.set_extra("alpha", diag->alpha);
      r.set_extra("alpha_prime", diag->alpha_prime);
      r.set_extra("d", diag->d);
    }
    r.set_extra("hull_size", static_cast<double>(walk.hull().size()));
    if (record_beta && walk.last_step_angle()) {
      r.set_extra("beta", *walk.last_step_angle());
    }
    out.push_back(std::move(r));
  };

  std::size_t ci = 0;
  while (ci < checkpoints.size() && checkpoints[ci] == 0) {
    emit(0);
    ++ci;
  }
  for (std::uint64_t n = 1; n <= steps && ci < checkpoints.size(); ++n) {
    walk.step(rs);
    while (ci < checkpoints.size() && checkpoints[ci] == n) {
      emit(n);
      ++ci;
    }
  }
  return out;
}

}  // namespace rancher
