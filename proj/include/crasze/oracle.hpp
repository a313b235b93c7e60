#pragma once

#include "crasze/acs_sop.hpp"
#include "crasze/rszd.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace crasze {

/// Thrown when an exact search would blow up (too many zones or candidates).
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    double prize = 0.0;
    double cost = 0.0;                // cheapest tour among the max-prize ones
    std::vector<int> zone_sequence;   // zone ids in visit order
};

/// Exhaustive depth-first search over zone orders and candidate waypoints.
/// Refuses instances with more than 8 zones or 18 candidate nodes. With
/// prune enabled, branches whose remaining prize cannot reach the incumbent
/// are cut; the bound is exact, so pruning never changes the result.
OracleResult brute_force_sop(const SopGraph& g, bool prune = true);

struct ZoneCheckResult {
    int samples = 0;     // points drawn
    int checked = 0;     // points outside the ambiguity band
    int violations = 0;  // checked points where the two membership tests differ
    bool reconstructed = true;  // boundary rebuilt from the vertex list
};

/// Cross-validates a zone's vertex representation against raw disk
/// membership. Boundary arcs are rebuilt independently from consecutive
/// vertex pairs; random points are then classified both ways, skipping a thin
/// band around the circle boundaries. A zone whose vertices do not describe
/// its boundary fails reconstruction, and every point inside the raw
/// intersection then counts as a violation.
ZoneCheckResult monte_carlo_zone_check(const SteinerZone& zone, int n_samples, std::uint64_t seed,
                                       double band = 1e-7);

struct SampledWaypoint {
    Point waypoint;
    double detour = 0.0;  // d(prev, w) + d(w, next) - d(prev, next)
};

/// Dense deterministic reference for the single-zone waypoint problem:
/// sweeps every member boundary and the prev-next segment with n_samples
/// points each and keeps the feasible point with the smallest detour.
SampledWaypoint sampled_best_waypoint(const SteinerZone& zone, Point prev, Point next,
                                      int n_samples = 40000);

}  // namespace crasze
