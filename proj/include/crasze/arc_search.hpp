#pragma once

#include "crasze/rszd.hpp"

#include <vector>

namespace crasze {

/// Boundary piece of one member circle lying inside every other member of the
/// zone. Angles are radians at that circle's center; the arc runs
/// counterclockwise from start_angle to end_angle (end >= start and may pass
/// 2*pi when the piece wraps around the positive x axis).
struct FeasibleArc {
    int circle_id = 0;
    double start_angle = 0.0;
    double end_angle = 0.0;
};

/// Splits each member circle at its intersections with the other members and
/// keeps the pieces inside the zone. A singleton zone yields its full circle.
std::vector<FeasibleArc> feasible_arcs(const SteinerZone& zone);

/// Detour-minimizing waypoint for a zone between two fixed route neighbors:
/// minimizes d(prev, w) + d(w, next) over the whole zone region. A segment
/// crossing the zone gives a zero-detour point on the segment itself;
/// otherwise the optimum is picked from boundary candidates (per-circle close
/// points, zone vertices, and refined boundary minima).
Point best_waypoint_in_zone(const SteinerZone& zone, Point prev, Point next);

struct ArcSearchParams {
    int max_sweeps = 50;
};

/// Coordinate-descent refinement of a stop sequence: sweeps the route,
/// re-optimizing each waypoint between its fixed neighbors and accepting only
/// strict detour decreases, until a sweep makes no move or the cap is hit.
/// Returns the number of sweeps run. The route length never increases.
int arc_search(std::vector<SolutionStop>& stops, const SzLayout& layout, Point depot_start,
               Point depot_end, const ArcSearchParams& params = {});

double route_length(const std::vector<SolutionStop>& stops, Point depot_start, Point depot_end);

/// Alternates full waypoint refinement with greedy insertion of still
/// unvisited zones into the freed budget, for a fixed number of rounds.
/// Prize and cost of the returned solution are recomputed from the final
/// sequence; the result never has lower prize or (at equal prize) higher cost
/// than the input.
Solution refine_ceop(Solution sol, const SzLayout& layout, const Instance& inst, int rounds = 5);

}  // namespace crasze
