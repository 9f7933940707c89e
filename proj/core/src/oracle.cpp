#include "rancher/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rancher::oracle {

std::vector<Point2> hull_of(std::span<const Point2> points) {
  if (points.empty()) {
    throw std::invalid_argument("hull_of: empty input");
  }
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return pts;

  // Monotone chain; popping on non-left turns removes collinear vertices.
  auto build = [](auto first, auto last) {
    std::vector<Point2> chain;
    for (auto it = first; it != last; ++it) {
      while (chain.size() >= 2 &&
             orient(chain[chain.size() - 2], chain.back(), *it) !=
                 Orientation::Left) {
        chain.pop_back();
      }
      chain.push_back(*it);
    }
    return chain;
  };

  std::vector<Point2> lower = build(pts.begin(), pts.end());
  std::vector<Point2> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.empty()) lower.push_back(pts.front());  // all points welded
  return lower;
}

bool segment_hits_interior(std::span<const Point2> hull_ccw, Point2 a,
                           Point2 b) {
  if (hull_ccw.size() < 3) return false;  // no interior

  // Clip [0,1] to the part of the segment strictly left of every edge.
  double lo = 0.0;
  double hi = 1.0;
  const std::size_t k = hull_ccw.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point2 u = hull_ccw[i];
    const Point2 v = hull_ccw[(i + 1) % k];
    const Orientation oa = orient(u, v, a);
    const Orientation ob = orient(u, v, b);
    if (oa != Orientation::Left && ob != Orientation::Left) {
      return false;  // the whole segment misses this open half-plane
    }
    if (oa == Orientation::Left && ob == Orientation::Left) continue;
    const Point2 e = v - u;
    const double fa = cross(e, a - u);
    const double fb = cross(e, b - u);
    const double t = fa / (fa - fb);  // crossing parameter, fa != fb here
    if (oa == Orientation::Left) {
      hi = std::min(hi, t);  // inside near a, exits at t
    } else {
      lo = std::max(lo, t);  // enters at t
    }
  }
  if (hi - lo <= 1e-12) return false;

  // Residue midpoint must sit strictly inside every edge.
  const double tm = (lo + hi) / 2.0;
  const Point2 mid{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
  for (std::size_t i = 0; i < k; ++i) {
    if (orient(hull_ccw[i], hull_ccw[(i + 1) % k], mid) !=
        Orientation::Left) {
      return false;
    }
  }
  return true;
}

bool segment_hits_interior(const ConvexPolygon& hull, Point2 a, Point2 b) {
  const auto verts = hull.vertices();
  return segment_hits_interior(verts, a, b);
}

std::pair<double, double> naive_rates(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw std::invalid_argument("naive_rates: need at least two values");
  }
  const std::size_t n = xs.size() - 1;
  const double xn = xs[n];
  double rmax = -std::numeric_limits<double>::infinity();
  double rmin = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < n; ++m) {
    const double slope = (xn - xs[m]) / static_cast<double>(n - m);
    rmax = std::max(rmax, slope);
    rmin = std::min(rmin, slope);
  }
  return {rmax, rmin};
}

double naive_width_path(std::span<const Point2> path, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len = norm(ab);
  if (len == 0.0) {
    throw std::invalid_argument("naive_width_path: a == b");
  }
  double best = 0.0;
  for (const Point2& p : path) {
    best = std::max(best, std::fabs(cross(ab, p - a)) / len);
  }
  return best;
}

double naive_investor_width(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw std::invalid_argument("naive_investor_width: need n >= 1");
  }
  const std::size_t n = xs.size() - 1;
  const double xn = xs[n];
  double best = 0.0;
  for (std::size_t m = 0; m <= n; ++m) {
    const double chord = (static_cast<double>(m) / static_cast<double>(n)) * xn;
    best = std::max(best, std::fabs(xs[m] - chord));
  }
  return best;
}

bool same_vertex_set(std::span<const Point2> a, std::span<const Point2> b,
                     double tol) {
  if (a.size() != b.size()) return false;
  std::vector<Point2> sa(a.begin(), a.end());
  std::vector<Point2> sb(b.begin(), b.end());
  auto lex = [](Point2 p, Point2 q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  std::sort(sa.begin(), sa.end(), lex);
  std::sort(sb.begin(), sb.end(), lex);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (std::fabs(sa[i].x - sb[i].x) > tol ||
        std::fabs(sa[i].y - sb[i].y) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace rancher::oracle
