// The planar walk conditioned to avoid the interior of the convex hull of
// its past. Each step is a unit vector with direction uniform on the allowed
// arc; the arc excludes exactly the open cone at the current vertex spanned
// by the directions to its two hull neighbors. The hull is contained in that
// tangent cone, so a unit segment leaving outside the cone misses the
// interior entirely, while any direction strictly inside the cone enters it
// immediately; the arc measure is 2*pi minus the hull's interior angle.

#ifndef RANCHER_RANCHER_HPP
#define RANCHER_RANCHER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rancher/geom.hpp"
#include "rancher/rng.hpp"
#include "rancher/sample_record.hpp"

namespace rancher {

struct ArcSpec {
  double start = 0.0;    // absolute angle of the arc's clockwise end
  double measure = 0.0;  // radians swept counterclockwise from start
};

// Allowed step directions for a walker at the cursor of `hull`.
ArcSpec allowed_arc(const ConvexPolygon& hull);

class RancherWalk {
 public:
  // keep_path retains every visited point (memory O(n)); the default keeps
  // only the hull, which is all the recorded statistics need.
  explicit RancherWalk(bool keep_path = false);

  // Allowed step directions from the current state. Degenerate hulls (a
  // point or a segment) have empty interior, so the full circle is legal.
  ArcSpec allowed_arc() const;

  void step(RandomStream& rs);

  std::uint64_t step_count() const { return n_; }
  Point2 position() const { return hull_.cursor(); }
  const ConvexPolygon& hull() const { return hull_; }

  // Radius of the smallest origin-centered circle containing the path,
  // maintained as a running max (equal to the hull-vertex scan).
  double max_norm() const { return max_norm_; }

  // Signed angle of the last step relative to the outward direction,
  // in (-pi, pi], positive = counterclockwise; unset while the walk is at
  // the origin (no outward direction) or before the first step.
  std::optional<double> last_step_angle() const { return last_beta_; }

  // Distance gain of the last step, ||x_{n}|| - ||x_{n-1}||.
  double last_gain() const { return last_gain_; }

  // O(1) per-step diagnostics using the cached circle radius;
  // nullopt while the hull is degenerate.
  std::optional<HullDiagnostics> diagnostics() const;

  // Width of the path: farthest point from the line through the origin and
  // the current position; nullopt when the position is the origin.
  std::optional<double> width() const;

  const std::vector<Point2>* path() const {
    return keep_path_ ? &path_ : nullptr;
  }

 private:
  ConvexPolygon hull_;
  std::uint64_t n_ = 0;
  double max_norm_ = 0.0;
  double last_gain_ = 0.0;
  std::optional<double> last_beta_;
  bool keep_path_ = false;
  std::vector<Point2> path_;
};

// Run a walk and collect records at the given checkpoints (sorted ascending,
// all <= steps; a checkpoint 0 records the initial state). Records carry
// n, x, y, norm, width, direction, and extras alpha/alpha_prime/d (when the
// hull is non-degenerate), hull_size, and beta when record_beta is set.
std::vector<SampleRecord> run_rancher(std::uint64_t steps, std::uint64_t seed,
                                      std::span<const std::uint64_t> checkpoints,
                                      bool record_beta = false);

}  // namespace rancher

#endif
