// Planar geometry for hull-avoiding walks: orientation predicate with a
// relative epsilon, an incrementally maintained convex polygon whose new
// points always arrive adjacent to a cursor vertex, and the diagnostic
// quantities (alpha, alpha', d) measured against the smallest origin-centered
// circle containing the hull.

#ifndef RANCHER_GEOM_HPP
#define RANCHER_GEOM_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rancher {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }

double cross(Point2 u, Point2 v);
double dot(Point2 u, Point2 v);
double norm(Point2 p);
double dist(Point2 a, Point2 b);

// Unsigned angle between two nonzero vectors, in [0, pi].
double angle_between(Point2 u, Point2 v);

// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

// Relative tolerance for orientation / collinearity decisions. Steps have
// continuous random angles, so exact degeneracies have probability zero;
// the tolerance only guards accumulated rounding.
inline constexpr double kGeomEps = 1e-12;

enum class Orientation { Left, Right, Collinear };

// Sign of (b-a) x (c-a); |cross| <= kGeomEps * scale counts as collinear,
// where scale is the largest coordinate magnitude among the inputs.
Orientation orient(Point2 a, Point2 b, Point2 c);

// Raised when insert_adjacent receives a point that violates its
// precondition (strictly interior, or collinear inside a segment hull).
struct HullError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagnostics of the hull as seen from the cursor vertex. big_r is the
// radius of the smallest circle about the origin containing the hull,
// d the gap between the cursor and that circle, and alpha / alpha_prime
// the angles pi - (origin, cursor, y) where y is the intersection of the
// clockwise / counterclockwise edge half-line with the circle.
struct HullDiagnostics {
  double alpha = 0.0;
  double alpha_prime = 0.0;
  double d = 0.0;
  double big_r = 0.0;
  double interior_angle = 0.0;
};

// Convex polygon over a cyclic doubly-linked vertex list, counterclockwise,
// with a cursor at the walker's current vertex. Insertion is restricted to
// points reachable from the cursor without crossing the interior, which
// keeps the tangent search local and amortized O(1).
class ConvexPolygon {
 public:
  explicit ConvexPolygon(Point2 start);

  std::size_t size() const { return size_; }
  Point2 cursor() const { return nodes_[cursor_].p; }

  // Neighbors of the cursor in hull order; valid for size() >= 2.
  Point2 neighbor_cw() const;
  Point2 neighbor_ccw() const;

  // True when the hull has no interior (a point or a segment). Collinear
  // vertices are removed on insertion, so size() >= 3 implies positive area.
  bool degenerate() const { return size_ <= 2; }

  // Grow the hull with a point outside or on the boundary, adjacent to the
  // cursor; the cursor moves to p. Vertices that stop being extreme are
  // unlinked. Throws HullError if p is strictly interior.
  void insert_adjacent(Point2 p);

  // Vertices in counterclockwise order starting at the cursor.
  std::vector<Point2> vertices() const;

  // Closed-hull membership with kGeomEps boundary slack.
  bool contains(Point2 p) const;

  // Max distance from hull vertices to the infinite line through a, b.
  // Throws std::invalid_argument if a == b.
  double farthest_from_line(Point2 a, Point2 b) const;

  // Angle of the polygon at the cursor, in (0, pi); nullopt when degenerate.
  std::optional<double> interior_angle_at_cursor() const;

  // Diagnostics against the smallest circle about `origin` containing the
  // hull. Precondition: origin inside or on the hull. Returns nullopt when
  // the hull is degenerate; throws std::invalid_argument if the cursor
  // coincides with the origin.
  std::optional<HullDiagnostics> diagnostics(Point2 origin) const;

  // Same, with the circle radius supplied by the caller (the walk maintains
  // it as a running max, which equals the vertex scan exactly).
  std::optional<HullDiagnostics> diagnostics(Point2 origin,
                                             double big_r) const;

  // Amortization witnesses.
  std::uint64_t insertions() const { return insertions_; }
  std::uint64_t removals() const { return removals_; }

  // Strict convexity check (test support): every consecutive triple turns
  // left and no two vertices coincide.
  bool is_strictly_convex() const;

 private:
  struct Node {
    Point2 p;
    std::int32_t prev = -1;
    std::int32_t next = -1;
  };

  std::int32_t alloc(Point2 p);
  void release(std::int32_t i);
  void reset_two(Point2 a, Point2 b);

  std::vector<Node> nodes_;
  std::int32_t cursor_ = -1;
  std::int32_t free_ = -1;
  std::size_t size_ = 0;
  std::uint64_t insertions_ = 0;
  std::uint64_t removals_ = 0;
};

}  // namespace rancher

#endif
