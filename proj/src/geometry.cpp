#include "crasze/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace crasze {

std::vector<Point> circle_intersections(const CircleGeom& a, const CircleGeom& b, double eps) {
    const double d = dist(a.center, b.center);
    const double ra = a.radius, rb = b.radius;
    if (d <= eps && std::abs(ra - rb) <= eps) throw DegenerateCircles{};
    if (d > ra + rb + eps) return {};
    if (d < std::abs(ra - rb) - eps) return {};  // one disk strictly inside the other

    // Distance from a.center to the radical line along the center axis.
    const double x = (d * d + ra * ra - rb * rb) / (2.0 * d);
    const Point u = (1.0 / d) * (b.center - a.center);
    const Point base = a.center + x * u;

    const bool external_tangent = std::abs(d - (ra + rb)) <= eps;
    const bool internal_tangent = std::abs(d - std::abs(ra - rb)) <= eps;
    if (external_tangent || internal_tangent) return {base};

    const double h2 = ra * ra - x * x;
    const double h = std::sqrt(std::max(0.0, h2));
    const Point v{-u.y, u.x};
    return {base + h * v, base - h * v};
}

bool point_in_circle(Point p, const CircleGeom& c, double eps) {
    return dist(p, c.center) <= c.radius + eps;
}

Point project_point_to_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return a;
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return a + t * ab;
}

SegmentCircleRelation segment_circle_relation(Point a, Point b, const CircleGeom& c, double eps) {
    const Point q = project_point_to_segment(c.center, a, b);
    const double d_seg = dist(q, c.center);
    if (d_seg > c.radius + eps) return {SegCircle::Disjoint, {}, {}};
    if (std::abs(d_seg - c.radius) <= eps) return {SegCircle::Tangent, q, {}};

    // The segment's supporting line cuts the boundary; collect crossings with
    // parameter inside [0, 1].
    const Point ab = b - a;
    const double A = dot(ab, ab);
    if (A == 0.0) return {SegCircle::Disjoint, {}, {}};  // degenerate point strictly inside
    const Point ac = a - c.center;
    const double B = 2.0 * dot(ab, ac);
    const double C = dot(ac, ac) - c.radius * c.radius;
    const double disc = B * B - 4.0 * A * C;
    assert(disc > 0.0);
    const double s = std::sqrt(disc);
    const double t1 = (-B - s) / (2.0 * A);
    const double t2 = (-B + s) / (2.0 * A);
    const double teps = eps / std::sqrt(A);

    std::vector<double> on_seg;
    for (double t : {t1, t2})
        if (t >= -teps && t <= 1.0 + teps) on_seg.push_back(std::clamp(t, 0.0, 1.0));
    if (on_seg.empty()) return {SegCircle::Disjoint, {}, {}};  // inside portion beyond segment, or fully inside
    if (on_seg.size() == 1) return {SegCircle::Tangent, a + on_seg[0] * ab, {}};
    return {SegCircle::Chord, a + on_seg[0] * ab, a + on_seg[1] * ab};
}

Point closest_point_on_circle_to_segment(const CircleGeom& c, Point a, Point b, double eps) {
    const SegmentCircleRelation rel = segment_circle_relation(a, b, c, eps);
    if (rel.kind != SegCircle::Disjoint) return rel.p1;  // a crossing: distance zero

    // No boundary crossing: the segment lies entirely inside or entirely
    // outside the disk. Inside, the nearest boundary point sits radially
    // beyond the endpoint farthest from the center; outside, radially toward
    // the segment point nearest to the center.
    Point anchor;
    if (point_in_circle(a, c, eps)) {
        anchor = dist(a, c.center) >= dist(b, c.center) ? a : b;
    } else {
        anchor = project_point_to_segment(c.center, a, b);
    }
    const Point dir = anchor - c.center;
    const double len = norm(dir);
    if (len <= eps) return c.center + Point{c.radius, 0.0};
    return c.center + (c.radius / len) * dir;
}

std::optional<std::pair<double, double>> segment_disk_interval(Point a, Point b,
                                                               const CircleGeom& c, double eps) {
    const Point ab = b - a;
    const double A = dot(ab, ab);
    const Point ac = a - c.center;
    const double C = dot(ac, ac) - c.radius * c.radius;
    if (A == 0.0) {
        if (C <= eps) return std::make_pair(0.0, 1.0);
        return std::nullopt;
    }
    const double B = 2.0 * dot(ab, ac);
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) return std::nullopt;
    const double s = std::sqrt(disc);
    double lo = (-B - s) / (2.0 * A);
    double hi = (-B + s) / (2.0 * A);
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    const double teps = eps / std::sqrt(A);
    if (lo > hi + teps) return std::nullopt;
    if (lo > hi) lo = hi = 0.5 * (lo + hi);
    return std::make_pair(lo, hi);
}

}  // namespace crasze
