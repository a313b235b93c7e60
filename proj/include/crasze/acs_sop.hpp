#pragma once

#include "crasze/rng.hpp"
#include "crasze/rszd.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace crasze {

/// One candidate waypoint of the discretized problem. visit_cost is paid when
/// the node is visited (zero under the plain distance metric; the drone
/// collection time under the truck-and-drone metric).
struct SopNode {
    int id = 0;
    Point pos;
    int zone_id = 0;
    double visit_cost = 0.0;
};

/// Discretized orienteering graph over zone candidate waypoints plus the two
/// depots. Edge costs are Euclidean distances scaled by travel_scale (1 for
/// the distance metric, 1/v_truck for the time metric).
struct SopGraph {
    std::vector<SopNode> nodes;  // node id == index
    std::map<int, double> zone_prize;
    std::map<int, std::vector<int>> zone_circles;  // zone id -> member circle ids
    Point depot_start;
    Point depot_end;
    double budget = 0.0;
    double travel_scale = 1.0;

    int start_index() const { return static_cast<int>(nodes.size()); }
    int end_index() const { return static_cast<int>(nodes.size()) + 1; }
    Point position(int idx) const;
    double edge(int a, int b) const { return cost_matrix[a * (nodes.size() + 2) + b]; }
    void build_cost_matrix();

    std::vector<double> cost_matrix;
};

/// SOP over the layout's zone candidates: vertices for degree >= 2 zones, the
/// circle center for degree-1 zones.
SopGraph make_sop_graph(const SzLayout& layout, const Instance& inst);

struct AcsParams {
    int n_ants = 40;
    int n_iter = 250;
    double beta = 2.0;
    double alpha = 0.1;
    double rho = 0.1;
    double q0 = 0.9;
    double eps_impr = 1e-4;
    int max_no_impr = 25;
};

struct PheromoneMatrix {
    int n = 0;  // node count including depots
    double tau0 = 0.0;
    std::vector<double> tau;

    void init(int node_count, double initial) {
        n = node_count;
        tau0 = initial;
        tau.assign(static_cast<std::size_t>(n) * n, initial);
    }
    double get(int a, int b) const { return tau[a * n + b]; }
    void set(int a, int b, double v) {
        tau[a * n + b] = v;
        tau[b * n + a] = v;
    }
};

struct Path {
    std::vector<int> seq;  // node ids; depots implicit at both ends
    std::set<int> visited_zones;
    double prize = 0.0;
    double cost = 0.0;  // both depot legs plus visit costs included
    bool feasible = true;
};

double path_cost(const SopGraph& g, const std::vector<int>& seq);
double path_prize(const SopGraph& g, const std::vector<int>& seq);

/// Greedy nearest-feasible-node path used to seed the pheromone level.
Path nearest_neighbor_path(const SopGraph& g);

/// tau0 = P / (n_wp * C_d); a zero-prize seed path falls back to
/// 1 / (n_wp * C_d). n_wp counts the depots.
double initial_pheromone(const Path& seed_path, int n_wp);

/// tau * eta^beta per feasible node, eta = zone prize / edge cost.
std::vector<double> transition_scores(const SopGraph& g, const PheromoneMatrix& tau, int current,
                                      const std::vector<int>& feasible, double beta);

/// Pseudo-random proportional rule: exploit the argmax with probability q0
/// (ties to the lowest node id), otherwise roulette over the scores.
int select_next(const SopGraph& g, const PheromoneMatrix& tau, int current,
                const std::vector<int>& feasible, const AcsParams& p, Rng& rng);

void local_update(PheromoneMatrix& tau, int a, int b, double rho);

/// Reinforces the edges of the best path with deposit P/C; everything else
/// is left untouched.
void global_update(PheromoneMatrix& tau, const SopGraph& g, double alpha, const Path& best);

/// In-place 2-opt over the visit order; keeps prize, never increases cost,
/// stops when no reversal improves by more than eps_impr.
void two_opt(Path& path, const SopGraph& g, double eps_impr);

/// While over budget, removes the waypoint with the lowest prize/detour ratio
/// and returns its zone's candidates to the pool.
void drop_operator(Path& path, std::vector<char>& pool, const SopGraph& g);

/// Repeatedly inserts the highest add-value candidate whose cheapest slot
/// (around its three nearest route points) still fits the budget.
void add_operator(Path& path, std::vector<char>& pool, const SopGraph& g);

/// Cheapest insertion of a free point into a concrete route, following the
/// three-nearest-neighbor slot construction. Returns (slot, detour): the new
/// point goes between route[slot] and route[slot+1]; detour includes
/// visit_cost. Shared by the add operator and the path refinement stage.
std::pair<int, double> best_insertion(const std::vector<Point>& route, Point cand,
                                      double visit_cost, double travel_scale);

/// Optional pheromone seeding carried over from a previous solve.
struct AcsSeedInfo {
    double tau0 = 0.0;
    std::vector<int> deposit_seq;  // node ids of the inherited path
    double deposit_value = 0.0;    // P/C of the inherited path
};

Solution solve_sop(const SopGraph& g, const AcsParams& p, std::uint64_t seed);
Solution solve_sop_seeded(const SopGraph& g, const AcsParams& p, std::uint64_t seed,
                          const std::optional<AcsSeedInfo>& inherit);

}  // namespace crasze
