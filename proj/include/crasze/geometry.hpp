#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crasze {

/// Global geometric tolerance in instance units. All containment and
/// intersection predicates take an explicit eps defaulting to this.
inline constexpr double kGeomEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct CircleGeom {
    Point center;
    double radius = 1.0;
};

/// Classification of a segment against a circle boundary.
/// Tangent carries the single shared boundary point; it also covers the
/// single-crossing case where exactly one endpoint lies inside the disk.
/// A segment fully inside the disk has no boundary point and classifies
/// as Disjoint; callers that care about containment test that separately.
enum class SegCircle { Disjoint, Tangent, Chord };

struct SegmentCircleRelation {
    SegCircle kind = SegCircle::Disjoint;
    Point p1;  // tangent point, or first chord point by parameter along a->b
    Point p2;  // second chord point
};

struct DegenerateCircles : std::runtime_error {
    DegenerateCircles() : std::runtime_error("concentric circles with equal radii") {}
};

/// Intersection points of two circle boundaries: 0, 1 (tangency, internal or
/// external), or 2 points. Throws DegenerateCircles when the circles coincide.
std::vector<Point> circle_intersections(const CircleGeom& a, const CircleGeom& b,
                                        double eps = kGeomEps);

/// Closed-disk membership: dist(p, center) <= radius + eps.
bool point_in_circle(Point p, const CircleGeom& c, double eps = kGeomEps);

/// Point of segment a-b nearest to p (a == b handled).
Point project_point_to_segment(Point p, Point a, Point b);

SegmentCircleRelation segment_circle_relation(Point a, Point b, const CircleGeom& c,
                                              double eps = kGeomEps);

/// Boundary point of c nearest to segment a-b. If the segment crosses the
/// boundary, the first crossing along a->b is returned (distance zero).
/// Degenerate zero-direction cases tie-break to center + (radius, 0).
Point closest_point_on_circle_to_segment(const CircleGeom& c, Point a, Point b,
                                         double eps = kGeomEps);

/// Parameter interval [t0, t1] of segment a + t(b - a), t in [0, 1], lying in
/// the closed disk, or nullopt when the segment misses it entirely.
std::optional<std::pair<double, double>> segment_disk_interval(Point a, Point b,
                                                               const CircleGeom& c,
                                                               double eps = kGeomEps);

}  // namespace crasze
