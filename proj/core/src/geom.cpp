#include "rancher/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rancher {

namespace {

constexpr double kPi = std::numbers::pi;

double coord_scale(Point2 a, Point2 b, Point2 c) {
  return std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(b.x),
                   std::fabs(b.y), std::fabs(c.x), std::fabs(c.y)});
}

// Welding tolerance for "same point" decisions.
double weld_eps(Point2 a, Point2 b) {
  const double s = std::max({1.0, std::fabs(a.x), std::fabs(a.y),
                             std::fabs(b.x), std::fabs(b.y)});
  return kGeomEps * s;
}

}  // namespace

double cross(Point2 u, Point2 v) { return u.x * v.y - u.y * v.x; }
double dot(Point2 u, Point2 v) { return u.x * v.x + u.y * v.y; }
double norm(Point2 p) { return std::hypot(p.x, p.y); }
double dist(Point2 a, Point2 b) { return norm(a - b); }

double angle_between(Point2 u, Point2 v) {
  return std::atan2(std::fabs(cross(u, v)), dot(u, v));
}

double wrap_angle(double a) {
  double w = std::fmod(a + kPi, 2.0 * kPi);
  if (w <= 0.0) w += 2.0 * kPi;
  return w - kPi;
}

Orientation orient(Point2 a, Point2 b, Point2 c) {
  const double cr = cross(b - a, c - a);
  const double threshold = kGeomEps * coord_scale(a, b, c);
  if (std::fabs(cr) <= threshold) return Orientation::Collinear;
  return cr > 0.0 ? Orientation::Left : Orientation::Right;
}

ConvexPolygon::ConvexPolygon(Point2 start) {
  cursor_ = alloc(start);
  nodes_[cursor_].prev = cursor_;
  nodes_[cursor_].next = cursor_;
  size_ = 1;
  insertions_ = 1;
}

std::int32_t ConvexPolygon::alloc(Point2 p) {
  if (free_ >= 0) {
    const std::int32_t i = free_;
    free_ = nodes_[i].next;
    nodes_[i] = Node{p, -1, -1};
    return i;
  }
  nodes_.push_back(Node{p, -1, -1});
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

void ConvexPolygon::release(std::int32_t i) {
  nodes_[i].next = free_;
  nodes_[i].prev = -1;
  free_ = i;
}

Point2 ConvexPolygon::neighbor_cw() const {
  return nodes_[nodes_[cursor_].prev].p;
}

Point2 ConvexPolygon::neighbor_ccw() const {
  return nodes_[nodes_[cursor_].next].p;
}

void ConvexPolygon::reset_two(Point2 a, Point2 b) {
  // Rebuild as the segment [a, b] with the cursor at b.
  nodes_.clear();
  free_ = -1;
  const std::int32_t ia = alloc(a);
  const std::int32_t ib = alloc(b);
  nodes_[ia].next = ib;
  nodes_[ia].prev = ib;
  nodes_[ib].next = ia;
  nodes_[ib].prev = ia;
  cursor_ = ib;
  size_ = 2;
}

void ConvexPolygon::insert_adjacent(Point2 p) {
  const Point2 cur = nodes_[cursor_].p;
  if (dist(p, cur) <= weld_eps(p, cur)) return;  // revisit of the cursor

  if (size_ == 1) {
    const std::int32_t ip = alloc(p);
    nodes_[ip].prev = cursor_;
    nodes_[ip].next = cursor_;
    nodes_[cursor_].prev = ip;
    nodes_[cursor_].next = ip;
    cursor_ = ip;
    size_ = 2;
    ++insertions_;
    return;
  }

  if (size_ == 2) {
    const std::int32_t ib = cursor_;
    const std::int32_t ia = nodes_[cursor_].next;
    const Point2 a = nodes_[ia].p;
    const Point2 b = nodes_[ib].p;
    if (dist(p, a) <= weld_eps(p, a)) {
      cursor_ = ia;
      return;
    }
    const Orientation o = orient(a, b, p);
    if (o == Orientation::Collinear) {
      const Point2 ab = b - a;
      const double t = dot(p - a, ab) / dot(ab, ab);
      if (t > 1.0) {
        reset_two(a, p);  // p extends the segment past b
        ++insertions_;
        ++removals_;
      } else if (t < 0.0) {
        reset_two(b, p);  // p extends past a
        ++insertions_;
        ++removals_;
      } else {
        throw HullError("insert_adjacent: collinear point inside segment");
      }
      return;
    }
    const std::int32_t ip = alloc(p);
    if (o == Orientation::Left) {
      // counterclockwise cycle a -> b -> p
      nodes_[ia].next = ib;
      nodes_[ib].next = ip;
      nodes_[ip].next = ia;
    } else {
      // counterclockwise cycle b -> a -> p
      nodes_[ib].next = ia;
      nodes_[ia].next = ip;
      nodes_[ip].next = ib;
    }
    nodes_[nodes_[ia].next].prev = ia;
    nodes_[nodes_[ib].next].prev = ib;
    nodes_[nodes_[ip].next].prev = ip;
    cursor_ = ip;
    size_ = 3;
    ++insertions_;
    return;
  }

  // General case: find the tangent vertices by walking from the cursor.
  // An edge (u, v) is visible from p when p is not strictly left of it;
  // collinear counts as visible so collinear vertices get absorbed.
  const auto visible = [&](std::int32_t u, std::int32_t v) {
    return orient(nodes_[u].p, nodes_[v].p, p) != Orientation::Left;
  };

  if (dist(p, neighbor_cw()) <= weld_eps(p, neighbor_cw())) {
    cursor_ = nodes_[cursor_].prev;
    return;
  }
  if (dist(p, neighbor_ccw()) <= weld_eps(p, neighbor_ccw())) {
    cursor_ = nodes_[cursor_].next;
    return;
  }

  if (!visible(nodes_[cursor_].prev, cursor_) &&
      !visible(cursor_, nodes_[cursor_].next)) {
    throw HullError(
        "insert_adjacent: point sees no edge at the cursor (interior or "
        "non-adjacent insertion)");
  }

  // t1: clockwise-side tangent; the edge entering it is not visible.
  std::int32_t t1 = cursor_;
  std::size_t guard = 0;
  while (visible(nodes_[t1].prev, t1)) {
    t1 = nodes_[t1].prev;
    if (++guard > size_) {
      throw HullError("insert_adjacent: tangent walk wrapped (cw)");
    }
  }
  // t2: counterclockwise-side tangent; the edge leaving it is not visible.
  std::int32_t t2 = cursor_;
  guard = 0;
  while (visible(t2, nodes_[t2].next)) {
    t2 = nodes_[t2].next;
    if (++guard > size_) {
      throw HullError("insert_adjacent: tangent walk wrapped (ccw)");
    }
  }
  if (t1 == t2) {
    throw HullError("insert_adjacent: inconsistent tangents");
  }

  // Unlink everything strictly between t1 and t2 (the visible chain's
  // interior), then splice p between them.
  std::int32_t i = nodes_[t1].next;
  while (i != t2) {
    const std::int32_t nxt = nodes_[i].next;
    release(i);
    --size_;
    ++removals_;
    i = nxt;
  }
  const std::int32_t ip = alloc(p);
  nodes_[t1].next = ip;
  nodes_[ip].prev = t1;
  nodes_[ip].next = t2;
  nodes_[t2].prev = ip;
  cursor_ = ip;
  ++size_;
  ++insertions_;
}

std::vector<Point2> ConvexPolygon::vertices() const {
  std::vector<Point2> out;
  out.reserve(size_);
  std::int32_t i = cursor_;
  do {
    out.push_back(nodes_[i].p);
    i = nodes_[i].next;
  } while (i != cursor_);
  return out;
}

bool ConvexPolygon::contains(Point2 p) const {
  if (size_ == 1) {
    return dist(p, cursor()) <= weld_eps(p, cursor());
  }
  if (size_ == 2) {
    const Point2 a = cursor();
    const Point2 b = neighbor_ccw();
    const Point2 ab = b - a;
    const double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
    const Point2 q{a.x + t * ab.x, a.y + t * ab.y};
    return dist(p, q) <= weld_eps(p, q);
  }
  std::int32_t i = cursor_;
  do {
    const std::int32_t j = nodes_[i].next;
    if (orient(nodes_[i].p, nodes_[j].p, p) == Orientation::Right) {
      return false;
    }
    i = j;
  } while (i != cursor_);
  return true;
}

double ConvexPolygon::farthest_from_line(Point2 a, Point2 b) const {
  const Point2 ab = b - a;
  const double len = norm(ab);
  if (len == 0.0) {
    throw std::invalid_argument("farthest_from_line: a == b");
  }
  double best = 0.0;
  std::int32_t i = cursor_;
  do {
    best = std::max(best, std::fabs(cross(ab, nodes_[i].p - a)) / len);
    i = nodes_[i].next;
  } while (i != cursor_);
  return best;
}

std::optional<double> ConvexPolygon::interior_angle_at_cursor() const {
  if (degenerate()) return std::nullopt;
  const Point2 c = cursor();
  return angle_between(neighbor_cw() - c, neighbor_ccw() - c);
}

std::optional<HullDiagnostics> ConvexPolygon::diagnostics(
    Point2 origin) const {
  double big_r = 0.0;
  std::int32_t i = cursor_;
  do {
    big_r = std::max(big_r, dist(nodes_[i].p, origin));
    i = nodes_[i].next;
  } while (i != cursor_);
  return diagnostics(origin, big_r);
}

std::optional<HullDiagnostics> ConvexPolygon::diagnostics(
    Point2 origin, double big_r) const {
  const auto interior = interior_angle_at_cursor();
  if (!interior) return std::nullopt;

  const Point2 c = cursor();
  const Point2 to_origin = origin - c;
  if (norm(to_origin) <= weld_eps(origin, c)) {
    throw std::invalid_argument("diagnostics: cursor coincides with origin");
  }

  // y lies on the half-line from the cursor along the edge direction, at the
  // circle of radius big_r; the angle at the cursor only depends on the edge
  // direction, so it is computed from the direction itself.
  const auto alpha_for = [&](Point2 neighbor) {
    const Point2 e = neighbor - c;
    return kPi - angle_between(to_origin, e);
  };

  HullDiagnostics d;
  d.big_r = big_r;
  d.d = std::max(0.0, big_r - norm(to_origin));
  d.interior_angle = *interior;
  d.alpha = alpha_for(neighbor_cw());
  d.alpha_prime = alpha_for(neighbor_ccw());
  return d;
}

bool ConvexPolygon::is_strictly_convex() const {
  if (size_ == 1) return true;
  if (size_ == 2) {
    return dist(cursor(), neighbor_ccw()) >
           weld_eps(cursor(), neighbor_ccw());
  }
  std::int32_t i = cursor_;
  do {
    const std::int32_t j = nodes_[i].next;
    const std::int32_t k = nodes_[j].next;
    if (orient(nodes_[i].p, nodes_[j].p, nodes_[k].p) != Orientation::Left) {
      return false;
    }
    i = j;
  } while (i != cursor_);
  return true;
}

}  // namespace rancher
