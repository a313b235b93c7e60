#pragma once

#include "crasze/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crasze {

/// Convex mutual-overlap region of 1..max_degree circles. Vertices are the
/// pairwise boundary intersection points lying inside every member, stored in
/// counterclockwise order around the center. Degree-1 zones have no vertices
/// and their center is the circle center; otherwise center is the vertex mean.
struct SteinerZone {
    int id = 0;
    std::vector<int> member_ids;        // circle ids, insertion order
    std::vector<TargetCircle> members;  // same order as member_ids
    std::vector<Point> vertices;
    Point center;
    double prize = 0.0;

    int degree() const { return static_cast<int>(member_ids.size()); }
};

struct SzLayout {
    std::vector<SteinerZone> zones;
    std::string source_instance;
    std::uint64_t seed = 0;
    int iterations_used = 0;

    const SteinerZone& zone_by_id(int id) const;
};

struct RszdParams {
    int n_iter = 10;
    int max_degree = 5;
    double eps = kGeomEps;
};

/// Attempts to grow a zone by one circle. Accepts iff the circle intersects
/// every member and every pair among the enlarged member set has at least one
/// intersection point inside all other circles of that set; on acceptance the
/// vertex list, center, and prize are rebuilt. Rejection returns nullopt.
std::optional<SteinerZone> try_add_circle(const SteinerZone& zone, const TargetCircle& c,
                                          double eps = kGeomEps);

/// Circle center for degree 1, arithmetic vertex mean otherwise.
Point zone_center(const SteinerZone& zone);

/// True when the point lies in every member disk of the zone (within eps).
bool point_in_zone(const SteinerZone& zone, Point p, double eps = kGeomEps);

/// Candidate waypoints of a zone: its vertices for overlap zones, the circle
/// center for singleton zones.
std::vector<Point> zone_candidate_points(const SteinerZone& zone);

/// One greedy pass in the given circle order: pop the first circle as a seed
/// zone, then scan the remaining circles once, merging every accepted one
/// while the degree cap allows.
SzLayout build_layout_once(const std::vector<TargetCircle>& circles, int max_degree,
                           double eps = kGeomEps);

/// Randomized discretization: iteration 1 keeps the input order, later
/// iterations use seeded shuffles; returns the layout with the fewest zones,
/// ties resolved toward the earliest iteration.
SzLayout rszd(const Instance& inst, const RszdParams& params, std::uint64_t seed);

std::string serialize_layout(const SzLayout& layout);

}  // namespace crasze
