// Slow, obviously-correct reference implementations used by tests and the
// --validate flag: scratch hull construction, segment-vs-interior legality,
// naive extremal rates and widths. These trade speed for auditability and
// share kGeomEps with the fast structures so disagreements reflect logic,
// not epsilon policy.

#ifndef RANCHER_ORACLE_HPP
#define RANCHER_ORACLE_HPP

#include <span>
#include <utility>
#include <vector>

#include "rancher/geom.hpp"

namespace rancher::oracle {

// Convex hull of a point set (monotone chain), counterclockwise, collinear
// interior points removed. Throws std::invalid_argument on empty input.
std::vector<Point2> hull_of(std::span<const Point2> points);

// True iff the open segment (a, b) meets the open interior of the hull given
// by its counterclockwise vertices. Degenerate hulls (fewer than 3 vertices)
// have empty interior and always yield false. Implemented by clipping the
// segment against the edge half-planes and testing for a positive-length
// residue strictly inside.
bool segment_hits_interior(std::span<const Point2> hull_ccw, Point2 a,
                           Point2 b);
bool segment_hits_interior(const ConvexPolygon& hull, Point2 a, Point2 b);

// Direct O(n) scan of (x_n - x_m)/(n - m) over all m < n.
// Requires xs.size() >= 2.
std::pair<double, double> naive_rates(std::span<const double> xs);

// O(n) max distance from path points to the infinite line through a, b.
double naive_width_path(std::span<const Point2> path, Point2 a, Point2 b);

// O(n) max |x_m - (m/n) x_n| over m <= n. Requires xs.size() >= 2.
double naive_investor_width(std::span<const double> xs);

// Set equality of two hulls up to cyclic rotation, within tolerance.
bool same_vertex_set(std::span<const Point2> a, std::span<const Point2> b,
                     double tol);

}  // namespace rancher::oracle

#endif
