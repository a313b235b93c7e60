#pragma once

#include "crasze/acs_sop.hpp"
#include "crasze/rszd.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace crasze {

/// Drone service time for one waypoint: the slowest member collection, where
/// each drone flies out at lambda * v_drone, serves the target, and returns
/// at v_drone. Hours when speeds are km/h.
double collection_cost(const SteinerZone& zone, Point waypoint, const TddpParams& tddp);

/// Truck travel time between consecutive waypoints.
double travel_cost(Point a, Point b, const TddpParams& tddp);

struct PsoParams {
    int n_particles = 40;
    int n_iter = 100;
    double c1 = 1.33;
    double c2 = 1.33;
    double omega_max = 0.9;
    double omega_min = 0.4;
    double eps_impr = 1e-4;
    int max_no_impr = 5;
    double time_cap_s = 600.0;
};

/// Linearly decreasing inertia weight: omega_max at n = 0 down to omega_min
/// at n = n_iter.
double ldiw(int n, const PsoParams& p);

/// Radius of the largest disk centered at the zone center that stays inside
/// the zone; velocity components are clamped to it and initial waypoints are
/// sampled from it.
double zone_vmax(const SteinerZone& zone);

/// Thrown when a particle position leaves its zone in a way that cannot be
/// projected back (the move must start inside every member disk).
struct ProjectionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Moves a waypoint from `from` toward `to`, stopping at the zone boundary:
/// returns `to` when it stays inside, otherwise the exit point of the segment.
Point project_into_zone(const SteinerZone& zone, Point from, Point to);

/// One waypoint placement per zone, in layout order.
struct Particle {
    std::vector<Point> position;
    std::vector<Point> velocity;
    std::vector<Point> best_position;
    Solution best_eval;
};

/// Orienteering graph induced by fixed per-zone waypoints under the
/// truck-and-drone time metric: one node per zone, collection time as the
/// visit cost, truck time as the edge cost.
SopGraph make_op_graph(const SzLayout& layout, const Instance& inst,
                       const std::vector<Point>& waypoints);

/// Ant colony solve of the waypoint orienteering problem, optionally seeded
/// with an inherited incumbent: its prize/cost ratio becomes the initial
/// pheromone level and its edges receive one reinforcement pass up front.
Solution iacs_solve_op(const SopGraph& g, const AcsParams& p, std::uint64_t seed,
                       const std::optional<AcsSeedInfo>& inherit);

struct PsoIterRecord {
    int iter = 0;
    double omega = 0.0;
    double best_prize = 0.0;
    double best_cost = 0.0;
};

struct PsoTrace {
    std::vector<PsoIterRecord> iters;
    int evals = 0;
    bool truncated = false;
    int position_violations = 0;  // updated positions outside their zone
    int velocity_violations = 0;  // post-clamp components beyond the zone cap
};

/// Pheromone level inherited from an incumbent: its prize-to-cost ratio.
double inherited_pheromone(double prize, double cost);

/// Particle swarm over per-zone waypoints with an inherited-pheromone ant
/// colony as the route evaluator. The instance must carry truck-and-drone
/// parameters; prizes are used as stored.
Solution solve_tddp(const Instance& inst, const SzLayout& layout, const PsoParams& pso,
                    const AcsParams& iacs, std::uint64_t seed, PsoTrace* trace = nullptr);

}  // namespace crasze
